#include "uturn/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <sstream>

#include "uturn/weights.hpp"

namespace uturn {

namespace {

void check_dims(int n, int L, const SignedPerm& sigma, const ParamPoint& params) {
    if (n < 1 || n > 6) throw DomainError("rank n out of range [1,6]: " + std::to_string(n));
    if (L < 1 || L > 12) throw DomainError("width L out of range [1,12]: " + std::to_string(L));
    if (sigma.n() != n)
        throw DomainError("sigma has " + std::to_string(sigma.n()) + " entries, expected " +
                          std::to_string(n));
    if (static_cast<int>(params.x.size()) != n)
        throw DomainError("parameter point has " + std::to_string(params.x.size()) +
                          " spectral values, expected " + std::to_string(n));
}

// Output-color candidates of a row vertex in rank order, given the incoming
// vertical vector I and horizontal color j.  A color can leave horizontally
// iff it just arrived (j), is absent (0), or is present in I.
std::vector<Color> branch_candidates(const ColorVec& I, Color j, int n) {
    std::vector<Color> out;
    for (Color c : all_colors(n)) {
        if (c != j && c != 0 && I.count(c) == 0) continue;
        if (c != 0) {
            int avail = I.count(c) + (j == c ? 1 : 0);
            if (avail < 1) continue;
        }
        out.push_back(c);
    }
    return out;
}

ColorVec vertex_top(const ColorVec& I, Color j, Color l) {
    ColorVec K = I;
    if (j != 0) K.add(j, +1);
    if (l != 0) K.add(l, -1);
    return K;
}

std::vector<Color> cap_candidates(Color in, int n) {
    if (in == 0) return {0};
    int a = in > 0 ? in : -in;
    (void)n;
    return {a, -a};
}

struct Budget {
    uint64_t limit;
    uint64_t visited = 0;
    void tick() {
        if (++visited > limit)
            throw DomainError("enumeration exceeded UTURN_MAX_STATES=" + std::to_string(limit));
    }
};

// Depth-first walk over the lattice in processing order.  When `weighted`
// is false (structural enumeration) weights are not evaluated and every
// conservation-valid branch is taken; otherwise zero-weight branches are
// dropped and the running product is maintained.  `prune_left` kills paths
// whose Delta rows exit with a nonzero color; `tops` (when non-null)
// constrains the final vectors of each column during the top pair's Delta
// row.  `abort_on_exit` reports a nonzero Delta exit as a terminal outcome
// instead of continuing upward (total-mass semantics).
struct Walker {
    const int n, L;
    const SignedPerm& sigma;
    const ParamPoint& params;
    bool weighted = true;
    bool prune_left = true;
    bool abort_on_exit = false;
    const std::vector<ColorVec>* tops = nullptr;
    Budget budget{enumeration_budget()};

    std::vector<ColorVec> frontier;
    LatticeState st;
    Rat weight{1};

    std::function<void(const LatticeState&, const Rat&, int, Color)> sink;

    Walker(int n_, int L_, const SignedPerm& sigma_, const ParamPoint& params_)
        : n(n_), L(L_), sigma(sigma_), params(params_), frontier(L_, ColorVec(n_)),
          st(n_, L_) {}

    void run() { gamma(n, L, sigma.apply(n)); }

    void gamma(int pair, int col, Color carry) {
        st.horiz[2 * pair - 1][col] = carry;
        if (col == 0) {
            cap(pair, carry);
            return;
        }
        const Rat& x = params.x[pair - 1];
        const ColorVec I = frontier[col - 1];
        for (Color l : branch_candidates(I, carry, n)) {
            budget.tick();
            ColorVec K = vertex_top(I, carry, l);
            if (!K.nonneg()) continue;
            Rat w{1};
            if (weighted) {
                w = gamma_weight(I, carry, K, l, x, params);
                if (w.is_zero()) continue;
            }
            const Rat save = weight;
            if (weighted) weight = weight * w;
            frontier[col - 1] = K;
            st.vert[2 * n - 2 * pair + 1][col - 1] = K;
            gamma(pair, col - 1, l);
            frontier[col - 1] = I;
            weight = save;
        }
    }

    void cap(int pair, Color in) {
        const Rat& x = params.x[pair - 1];
        for (Color out : cap_candidates(in, n)) {
            budget.tick();
            Rat w{1};
            if (weighted) {
                w = cap_weight(CapVariant::Standard, in, out, x, params);
                if (w.is_zero()) continue;
            }
            const Rat save = weight;
            if (weighted) weight = weight * w;
            delta(pair, 1, out);
            weight = save;
        }
    }

    void delta(int pair, int col, Color carry) {
        if (col > L) {
            st.horiz[2 * pair - 2][L] = carry;
            pair_done(pair, carry);
            return;
        }
        st.horiz[2 * pair - 2][col - 1] = carry;
        const Rat& x = params.x[pair - 1];
        const ColorVec I = frontier[col - 1];
        for (Color l : branch_candidates(I, carry, n)) {
            budget.tick();
            ColorVec K = vertex_top(I, carry, l);
            if (!K.nonneg()) continue;
            if (pair == 1 && tops && K != (*tops)[col - 1]) continue;
            Rat w{1};
            if (weighted) {
                w = delta_weight(I, carry, K, l, x, params);
                if (w.is_zero()) continue;
            }
            const Rat save = weight;
            if (weighted) weight = weight * w;
            frontier[col - 1] = K;
            st.vert[2 * n - 2 * pair + 2][col - 1] = K;
            delta(pair, col + 1, l);
            frontier[col - 1] = I;
            weight = save;
        }
    }

    void pair_done(int pair, Color exit_color) {
        if (exit_color != 0) {
            if (prune_left) return;
            if (abort_on_exit) {
                sink(st, weight, pair, exit_color);
                return;
            }
        }
        if (pair == 1) {
            sink(st, weight, 0, 0);
            return;
        }
        gamma(pair - 1, L, sigma.apply(pair - 1));
    }
};

std::vector<int> decode_mu_from_counts(const std::vector<ColorVec>& cols, int n, int L) {
    std::vector<int> mu(n, 0);
    for (int i = 1; i <= n; ++i) {
        int found = 0;
        for (int c = 1; c <= L; ++c) {
            int plain = cols[c - 1].count(i);
            int barred = cols[c - 1].count(-i);
            found += plain + barred;
            if (plain == 1) mu[i - 1] = c;
            if (barred == 1) mu[i - 1] = -c;
        }
        if (found != 1)
            throw DomainError("top configuration does not decode to a single destination for color " +
                              std::to_string(i));
    }
    return mu;
}

}  // namespace

uint64_t enumeration_budget() {
    const char* env = std::getenv("UTURN_MAX_STATES");
    if (!env || !*env) return 10'000'000ull;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || (end && *end) || v == 0)
        throw DomainError(std::string("invalid UTURN_MAX_STATES value: ") + env);
    return v;
}

ModelSpec::ModelSpec(int n_, int L_, SignedPerm sigma_, std::vector<int> mu_, ParamPoint params_)
    : n(n_), L(L_), sigma(std::move(sigma_)), mu(std::move(mu_)), params(std::move(params_)) {
    check_dims(n, L, sigma, params);
    if (static_cast<int>(mu.size()) != n)
        throw DomainError("mu has " + std::to_string(mu.size()) + " entries, expected " +
                          std::to_string(n));
    for (int m : mu) {
        if (m == 0 || m > L || m < -L)
            throw DomainError("mu entry out of range [-L,L]\\{0}: " + std::to_string(m));
    }
}

LatticeState::LatticeState(int n_, int L_)
    : n(n_), L(L_), horiz(2 * n_, std::vector<Color>(L_ + 1, 0)),
      vert(2 * n_ + 1, std::vector<ColorVec>(L_, ColorVec(n_))) {}

bool operator<(const LatticeState& a, const LatticeState& b) {
    if (a.n != b.n) return a.n < b.n;
    if (a.L != b.L) return a.L < b.L;
    if (a.horiz != b.horiz) return a.horiz < b.horiz;
    return a.vert < b.vert;
}

std::vector<ColorVec> top_boundary(const ModelSpec& spec) {
    std::vector<ColorVec> tops(spec.L, ColorVec(spec.n));
    for (int i = 1; i <= spec.n; ++i) {
        int m = spec.mu[i - 1];
        if (m > 0)
            tops[m - 1].add(i, +1);
        else
            tops[-m - 1].add(-i, +1);
    }
    return tops;
}

bool admissible_state(const LatticeState& st, const ModelSpec& spec) {
    const int n = spec.n, L = spec.L;
    if (st.n != n || st.L != L) return false;
    if (static_cast<int>(st.horiz.size()) != 2 * n) return false;
    if (static_cast<int>(st.vert.size()) != 2 * n + 1) return false;
    for (const auto& row : st.horiz)
        if (static_cast<int>(row.size()) != L + 1) return false;
    for (const auto& lvl : st.vert) {
        if (static_cast<int>(lvl.size()) != L) return false;
        for (const auto& v : lvl)
            if (!v.nonneg()) return false;
    }
    for (const auto& row : st.horiz)
        for (Color c : row)
            if (!valid_color(c, n)) return false;

    for (int c = 1; c <= L; ++c) {
        if (!st.vert[0][c - 1].is_zero()) return false;
    }
    const std::vector<ColorVec> tops = top_boundary(spec);
    for (int c = 1; c <= L; ++c) {
        if (st.vert[2 * n][c - 1] != tops[c - 1]) return false;
    }
    for (int i = 1; i <= n; ++i) {
        if (st.horiz[2 * i - 1][L] != spec.sigma.apply(i)) return false;
        if (st.horiz[2 * i - 2][L] != 0) return false;
        Color in = st.cap_input(i), out = st.cap_output(i);
        if (in == 0) {
            if (out != 0) return false;
        } else if (std::abs(in) != std::abs(out)) {
            return false;
        }
    }

    auto conserves = [n](const ColorVec& I, Color j, const ColorVec& K, Color l) {
        ColorVec lhs = I, rhs = K;
        if (j != 0) lhs.add(j, +1);
        if (l != 0) rhs.add(l, +1);
        (void)n;
        return lhs == rhs;
    };
    for (int i = 1; i <= n; ++i) {
        for (int c = 1; c <= L; ++c) {
            // Gamma vertex on row 2i, column c.
            const ColorVec& gI = st.vert[2 * n - 2 * i][c - 1];
            const ColorVec& gK = st.vert[2 * n - 2 * i + 1][c - 1];
            if (!conserves(gI, st.horiz[2 * i - 1][c], gK, st.horiz[2 * i - 1][c - 1]))
                return false;
            // Delta vertex on row 2i-1, column c.
            const ColorVec& dI = st.vert[2 * n - 2 * i + 1][c - 1];
            const ColorVec& dK = st.vert[2 * n - 2 * i + 2][c - 1];
            if (!conserves(dI, st.horiz[2 * i - 2][c - 1], dK, st.horiz[2 * i - 2][c]))
                return false;
        }
    }
    return true;
}

void for_each_state(const ModelSpec& spec, const std::function<void(const LatticeState&)>& fn) {
    const std::vector<ColorVec> tops = top_boundary(spec);
    Walker w(spec.n, spec.L, spec.sigma, spec.params);
    w.weighted = false;
    w.prune_left = true;
    w.tops = &tops;
    w.sink = [&](const LatticeState& st, const Rat&, int, Color) { fn(st); };
    w.run();
}

std::vector<LatticeState> enumerate_states(const ModelSpec& spec) {
    std::vector<LatticeState> out;
    for_each_state(spec, [&](const LatticeState& st) { out.push_back(st); });
    return out;
}

std::size_t count_states(const ModelSpec& spec) {
    std::size_t k = 0;
    for_each_state(spec, [&](const LatticeState&) { ++k; });
    return k;
}

Rat state_weight(const LatticeState& st, const ModelSpec& spec) {
    const int n = spec.n, L = spec.L;
    Rat w{1};
    for (int i = 1; i <= n; ++i) {
        const Rat& x = spec.params.x[i - 1];
        for (int c = 1; c <= L; ++c) {
            w = w * gamma_weight(st.vert[2 * n - 2 * i][c - 1], st.horiz[2 * i - 1][c],
                                 st.vert[2 * n - 2 * i + 1][c - 1], st.horiz[2 * i - 1][c - 1], x,
                                 spec.params);
            w = w * delta_weight(st.vert[2 * n - 2 * i + 1][c - 1], st.horiz[2 * i - 2][c - 1],
                                 st.vert[2 * n - 2 * i + 2][c - 1], st.horiz[2 * i - 2][c], x,
                                 spec.params);
        }
        w = w * cap_weight(CapVariant::Standard, st.cap_input(i), st.cap_output(i), x, spec.params);
    }
    return w;
}

namespace {

Rat pf_dfs(const ModelSpec& spec) {
    const std::vector<ColorVec> tops = top_boundary(spec);
    Walker w(spec.n, spec.L, spec.sigma, spec.params);
    w.weighted = true;
    w.prune_left = true;
    w.tops = &tops;
    Rat sum{0};
    w.sink = [&](const LatticeState&, const Rat& wt, int, Color) { sum += wt; };
    w.run();
    return sum;
}

// Independent evaluation route: memoized sum over suffixes keyed by
// (pair, phase, column, carry, full frontier).
struct MemoWalk {
    const ModelSpec& spec;
    const std::vector<ColorVec> tops;
    Budget budget{enumeration_budget()};
    std::map<std::vector<int>, Rat> memo;
    std::vector<ColorVec> frontier;

    explicit MemoWalk(const ModelSpec& s)
        : spec(s), tops(top_boundary(s)), frontier(s.L, ColorVec(s.n)) {}

    std::vector<int> key(int pair, int phase, int col, Color carry) const {
        std::vector<int> k = {pair, phase, col, carry};
        for (const auto& v : frontier) {
            auto cs = v.counts();
            k.insert(k.end(), cs.begin(), cs.end());
        }
        return k;
    }

    Rat gamma_phase(int pair, int col, Color carry) {
        if (col == 0) return cap_phase(pair, carry);
        const auto k = key(pair, 0, col, carry);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        const Rat& x = spec.params.x[pair - 1];
        const ColorVec I = frontier[col - 1];
        Rat sum{0};
        for (Color l : branch_candidates(I, carry, spec.n)) {
            budget.tick();
            ColorVec K = vertex_top(I, carry, l);
            if (!K.nonneg()) continue;
            Rat w = gamma_weight(I, carry, K, l, x, spec.params);
            if (w.is_zero()) continue;
            frontier[col - 1] = K;
            sum += w * gamma_phase(pair, col - 1, l);
            frontier[col - 1] = I;
        }
        memo.emplace(k, sum);
        return sum;
    }

    Rat cap_phase(int pair, Color in) {
        const auto k = key(pair, 1, 0, in);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        const Rat& x = spec.params.x[pair - 1];
        Rat sum{0};
        for (Color out : cap_candidates(in, spec.n)) {
            budget.tick();
            Rat w = cap_weight(CapVariant::Standard, in, out, x, spec.params);
            if (w.is_zero()) continue;
            sum += w * delta_phase(pair, 1, out);
        }
        memo.emplace(k, sum);
        return sum;
    }

    Rat delta_phase(int pair, int col, Color carry) {
        if (col > spec.L) {
            if (carry != 0) return Rat{0};
            if (pair == 1) return Rat{1};
            return gamma_phase(pair - 1, spec.L, spec.sigma.apply(pair - 1));
        }
        const auto k = key(pair, 2, col, carry);
        if (auto it = memo.find(k); it != memo.end()) return it->second;
        const Rat& x = spec.params.x[pair - 1];
        const ColorVec I = frontier[col - 1];
        Rat sum{0};
        for (Color l : branch_candidates(I, carry, spec.n)) {
            budget.tick();
            ColorVec K = vertex_top(I, carry, l);
            if (!K.nonneg()) continue;
            if (pair == 1 && K != tops[col - 1]) continue;
            Rat w = delta_weight(I, carry, K, l, x, spec.params);
            if (w.is_zero()) continue;
            frontier[col - 1] = K;
            sum += w * delta_phase(pair, col + 1, l);
            frontier[col - 1] = I;
        }
        memo.emplace(k, sum);
        return sum;
    }
};

}  // namespace

Rat partition_function(const ModelSpec& spec, PfMode mode) {
    if (mode == PfMode::DFS) return pf_dfs(spec);
    MemoWalk mw(spec);
    return mw.gamma_phase(spec.n, spec.L, spec.sigma.apply(spec.n));
}

std::string MassOutcome::key() const {
    std::ostringstream os;
    if (rejected) {
        os << "reject pair=" << reject_pair << " color=" << color_str(reject_color);
    } else {
        os << "mu=";
        for (std::size_t i = 0; i < mu.size(); ++i) {
            if (i) os << ",";
            os << mu[i];
        }
    }
    return os.str();
}

Rat MassReport::accepted_total() const {
    Rat s{0};
    for (const auto& [o, m] : outcomes)
        if (!o.rejected) s += m;
    return s;
}

const Rat* MassReport::mass_of_mu(const std::vector<int>& mu) const {
    for (const auto& [o, m] : outcomes)
        if (!o.rejected && o.mu == mu) return &m;
    return nullptr;
}

MassReport total_mass(int n, int L, const SignedPerm& sigma, const ParamPoint& params) {
    check_dims(n, L, sigma, params);
    Walker w(n, L, sigma, params);
    w.weighted = true;
    w.prune_left = false;
    w.abort_on_exit = true;
    std::map<std::string, std::pair<MassOutcome, Rat>> acc;
    w.sink = [&](const LatticeState&, const Rat& wt, int reject_pair, Color reject_color) {
        MassOutcome o;
        if (reject_pair != 0) {
            o.rejected = true;
            o.reject_pair = reject_pair;
            o.reject_color = reject_color;
        } else {
            o.mu = decode_mu_from_counts(w.frontier, n, L);
            for (const auto& v : w.frontier) o.top.push_back(v.counts());
        }
        auto [it, fresh] = acc.emplace(o.key(), std::make_pair(o, Rat{0}));
        it->second.second += wt;
    };
    w.run();
    MassReport rep;
    rep.total = Rat{0};
    for (auto& [k, om] : acc) {
        rep.total += om.second;
        rep.outcomes.emplace_back(std::move(om.first), std::move(om.second));
    }
    return rep;
}

SampleResult sample_state(int n, int L, const SignedPerm& sigma, const ParamPoint& params,
                          uint64_t seed) {
    check_dims(n, L, sigma, params);
    std::mt19937_64 rng(seed);
    auto unit = [&rng]() { return (rng() >> 11) * 0x1.0p-53; };

    SampleResult res;
    LatticeState st(n, L);
    std::vector<ColorVec> frontier(L, ColorVec(n));

    auto pick = [&](const std::vector<std::pair<Color, Rat>>& dist, int row, int col,
                    const char* where) -> std::pair<Color, const Rat*> {
        Rat sum{0};
        for (const auto& [c, w] : dist) {
            if (w.sign() < 0 || (Rat{1} - w).sign() < 0)
                throw RegimeError("weight " + w.str() + " outside [0,1] at " + where + " row " +
                                  std::to_string(row) + ", column " + std::to_string(col));
            sum += w;
        }
        if (!(sum == Rat{1}))
            throw RegimeError("branch weights sum to " + sum.str() + " (expected 1) at " +
                              std::string(where) + " row " + std::to_string(row) + ", column " +
                              std::to_string(col));
        const double u = unit();
        Rat cum{0};
        for (std::size_t i = 0; i < dist.size(); ++i) {
            cum += dist[i].second;
            if (i + 1 == dist.size() || u < cum.to_double())
                return {dist[i].first, &dist[i].second};
        }
        return {dist.back().first, &dist.back().second};
    };

    for (int pair = n; pair >= 1; --pair) {
        const Rat& x = params.x[pair - 1];
        // Gamma row, left boundary toward the cap.
        Color carry = sigma.apply(pair);
        for (int col = L; col >= 1; --col) {
            st.horiz[2 * pair - 1][col] = carry;
            const ColorVec I = frontier[col - 1];
            std::vector<std::pair<Color, Rat>> dist;
            for (Color l : branch_candidates(I, carry, n)) {
                ColorVec K = vertex_top(I, carry, l);
                if (!K.nonneg()) continue;
                dist.emplace_back(l, gamma_weight(I, carry, K, l, x, params));
            }
            auto [l, w] = pick(dist, 2 * pair, col, "gamma vertex");
            res.trace.push_back({2 * pair, col, l, w->to_double()});
            frontier[col - 1] = vertex_top(I, carry, l);
            st.vert[2 * n - 2 * pair + 1][col - 1] = frontier[col - 1];
            carry = l;
        }
        st.horiz[2 * pair - 1][0] = carry;
        // Cap.
        {
            std::vector<std::pair<Color, Rat>> dist;
            for (Color out : cap_candidates(carry, n))
                dist.emplace_back(out, cap_weight(CapVariant::Standard, carry, out, x, params));
            auto [out, w] = pick(dist, 2 * pair, 0, "cap");
            res.trace.push_back({0, pair, out, w->to_double()});
            carry = out;
        }
        // Delta row, cap toward the left boundary.
        for (int col = 1; col <= L; ++col) {
            st.horiz[2 * pair - 2][col - 1] = carry;
            const ColorVec I = frontier[col - 1];
            std::vector<std::pair<Color, Rat>> dist;
            for (Color l : branch_candidates(I, carry, n)) {
                ColorVec K = vertex_top(I, carry, l);
                if (!K.nonneg()) continue;
                dist.emplace_back(l, delta_weight(I, carry, K, l, x, params));
            }
            auto [l, w] = pick(dist, 2 * pair - 1, col, "delta vertex");
            res.trace.push_back({2 * pair - 1, col, l, w->to_double()});
            frontier[col - 1] = vertex_top(I, carry, l);
            st.vert[2 * n - 2 * pair + 2][col - 1] = frontier[col - 1];
            carry = l;
        }
        st.horiz[2 * pair - 2][L] = carry;
        if (carry != 0) {
            res.rejected = true;
            res.reject_pair = pair;
            return res;
        }
    }
    res.mu = decode_mu_from_counts(frontier, n, L);
    res.state = std::move(st);
    return res;
}

}  // namespace uturn
