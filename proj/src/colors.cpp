#include "uturn/colors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace uturn {

std::vector<Color> all_colors(int n) {
    std::vector<Color> out;
    out.reserve(2 * static_cast<std::size_t>(n) + 1);
    for (int i = 1; i <= n; ++i) out.push_back(i);
    out.push_back(0);
    for (int i = n; i >= 1; --i) out.push_back(-i);
    return out;
}

std::string color_str(Color c) { return std::to_string(c); }

std::string ColorVec::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t k = 0; k < c_.size(); ++k) {
        if (k) os << ',';
        os << c_[k];
    }
    os << ')';
    return os.str();
}

int partial_sum(const ColorVec& I, SumRel rel, Color bound) {
    const int n = I.n();
    const int rb = rank_of(bound, n);
    int tot = 0;
    for (Color c : all_colors(n)) {
        if (c == 0) continue;
        const int rc = rank_of(c, n);
        bool in = false;
        switch (rel) {
            case SumRel::LE: in = rc <= rb; break;
            case SumRel::LT: in = rc < rb; break;
            case SumRel::GE: in = rc >= rb; break;
            case SumRel::GT: in = rc > rb; break;
        }
        if (in) tot += I.count(c);
    }
    return tot;
}

int partial_sum_interval(const ColorVec& I, Color lo, Color hi) {
    const int n = I.n();
    const int rlo = rank_of(lo, n), rhi = rank_of(hi, n);
    int tot = 0;
    for (Color c : all_colors(n)) {
        if (c == 0) continue;
        const int rc = rank_of(c, n);
        if (rc >= rlo && rc <= rhi) tot += I.count(c);
    }
    return tot;
}

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    if (n == 0) throw DomainError("signed permutation needs n >= 1");
    std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
    for (int v : img_) {
        int a = v < 0 ? -v : v;
        if (a < 1 || a > n || v == 0 || seen[static_cast<std::size_t>(a)])
            throw DomainError("invalid one-line signed permutation");
        seen[static_cast<std::size_t>(a)] = true;
    }
}

SignedPerm SignedPerm::identity(int n) {
    std::vector<int> img(static_cast<std::size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    return SignedPerm(std::move(img));
}

SignedPerm SignedPerm::parse(const std::string& text, int n_expected) {
    std::vector<int> img;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        try {
            std::size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            img.push_back(v);
        } catch (const std::exception&) {
            throw DomainError("cannot parse permutation entry '" + tok + "'");
        }
    }
    if (n_expected > 0 && static_cast<int>(img.size()) != n_expected)
        throw DomainError("permutation size mismatch");
    return SignedPerm(std::move(img));
}

int SignedPerm::apply(int i) const {
    if (i == 0) return 0;
    int a = i < 0 ? -i : i;
    if (a > n()) throw DomainError("permutation argument out of range");
    int v = img_[static_cast<std::size_t>(a - 1)];
    return i < 0 ? -v : v;
}

std::string SignedPerm::str() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < img_.size(); ++k) {
        if (k) os << ',';
        os << img_[k];
    }
    return os.str();
}

SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    if (a.n() != b.n()) throw DomainError("permutation size mismatch in compose");
    std::vector<int> img(static_cast<std::size_t>(a.n()));
    for (int j = 1; j <= a.n(); ++j) img[static_cast<std::size_t>(j - 1)] = a.apply(b.apply(j));
    return SignedPerm(std::move(img));
}

SignedPerm inverse(const SignedPerm& a) {
    std::vector<int> img(static_cast<std::size_t>(a.n()));
    for (int j = 1; j <= a.n(); ++j) {
        int v = a.apply(j);
        int tgt = v < 0 ? -v : v;
        img[static_cast<std::size_t>(tgt - 1)] = v < 0 ? -j : j;
    }
    return SignedPerm(std::move(img));
}

SignedPerm simple_reflection(int i, int n) {
    if (i < 1 || i > n) throw DomainError("generator index out of range");
    auto sp = SignedPerm::identity(n);
    std::vector<int> img = sp.images();
    if (i < n)
        std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
    else
        img[static_cast<std::size_t>(n - 1)] = -n;
    return SignedPerm(std::move(img));
}

namespace {

const std::map<std::vector<int>, int>& length_table(int n) {
    static std::mutex mu;
    static std::map<int, std::map<std::vector<int>, int>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::map<std::vector<int>, int> dist;
    std::vector<SignedPerm> frontier{SignedPerm::identity(n)};
    dist[frontier[0].images()] = 0;
    std::vector<SignedPerm> gens;
    for (int i = 1; i <= n; ++i) gens.push_back(simple_reflection(i, n));
    while (!frontier.empty()) {
        std::vector<SignedPerm> next;
        for (const auto& w : frontier) {
            const int dw = dist.at(w.images());
            for (const auto& g : gens) {
                SignedPerm v = compose(w, g);
                if (dist.emplace(v.images(), dw + 1).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return cache.emplace(n, std::move(dist)).first->second;
}

}  // namespace

int length(const SignedPerm& sigma, int n_bound) {
    if (sigma.n() > n_bound)
        throw DomainError("length: n exceeds configured bound");
    return length_table(sigma.n()).at(sigma.images());
}

std::vector<SignedPerm> all_signed_perms(int n) {
    std::vector<int> base(static_cast<std::size_t>(n));
    std::iota(base.begin(), base.end(), 1);
    std::vector<SignedPerm> out;
    std::sort(base.begin(), base.end());
    do {
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            std::vector<int> img = base;
            for (int k = 0; k < n; ++k)
                if (mask & (1u << k)) img[static_cast<std::size_t>(k)] = -img[static_cast<std::size_t>(k)];
            out.emplace_back(std::move(img));
        }
    } while (std::next_permutation(base.begin(), base.end()));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace uturn
