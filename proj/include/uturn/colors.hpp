// Signed colors, color-count vectors, and signed permutations (group B_n).
//
// A color is an integer code in {-n,...,-1,0,1,...,n}: code i>0 is the plain
// color i, code 0 is the empty "+" label, code -i is the barred partner of i.
// The model orders colors 1 < 2 < ... < n < 0 < bar(n) < ... < bar(1); all
// comparisons below use that order via rank_of.

#ifndef UTURN_COLORS_HPP
#define UTURN_COLORS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "uturn/rational.hpp"

namespace uturn {

using Color = int;

inline int rank_of(Color c, int n) {
    if (c > 0) return c;
    if (c == 0) return n + 1;
    return 2 * n + 2 + c;  // c = -i  ->  2n+2-i
}

enum class Cmp { LT, EQ, GT };

inline Cmp color_compare(Color a, Color b, int n) {
    int ra = rank_of(a, n), rb = rank_of(b, n);
    if (ra < rb) return Cmp::LT;
    if (ra > rb) return Cmp::GT;
    return Cmp::EQ;
}

inline bool color_lt(Color a, Color b, int n) { return rank_of(a, n) < rank_of(b, n); }

// All of {0} u [+-n] in rank order: 1..n, 0, bar(n)..bar(1).
std::vector<Color> all_colors(int n);

inline bool valid_color(Color c, int n) { return c >= -n && c <= n; }

std::string color_str(Color c);

// Counts of the 2n signed colors on a vertical edge, stored in the order
// (I_1,...,I_n, I_{bar n},...,I_{bar 1}).  Color 0 carries no count.
class ColorVec {
public:
    explicit ColorVec(int n) : n_(n), c_(2 * static_cast<std::size_t>(n), 0) {
        if (n < 1) throw DomainError("color vector needs n >= 1");
    }

    static ColorVec basis(Color j, int n) {
        ColorVec v(n);
        if (j != 0) v.c_[v.index(j)] = 1;
        return v;
    }

    int n() const { return n_; }

    int count(Color c) const { return c_[index(c)]; }
    void add(Color c, int delta) {
        if (c != 0) c_[index(c)] += delta;
    }

    bool nonneg() const {
        for (int e : c_)
            if (e < 0) return false;
        return true;
    }
    int max_entry() const {
        int m = 0;
        for (int e : c_)
            if (e > m) m = e;
        return m;
    }
    int total() const {
        int t = 0;
        for (int e : c_) t += e;
        return t;
    }
    bool is_zero() const { return total() == 0; }

    friend bool operator==(const ColorVec& a, const ColorVec& b) {
        return a.n_ == b.n_ && a.c_ == b.c_;
    }
    friend bool operator!=(const ColorVec& a, const ColorVec& b) { return !(a == b); }
    friend bool operator<(const ColorVec& a, const ColorVec& b) {
        return a.c_ < b.c_;
    }

    const std::vector<int>& counts() const { return c_; }
    std::string str() const;

private:
    std::size_t index(Color c) const {
        if (c == 0 || !valid_color(c, n_)) throw DomainError("color out of range for vector");
        return c > 0 ? static_cast<std::size_t>(c - 1)
                     : static_cast<std::size_t>(2 * n_ + c);
    }

    int n_;
    std::vector<int> c_;
};

enum class SumRel { LE, LT, GE, GT };

// Sum of counts over signed colors k with rank(k) in the given relation to
// rank(bound); color 0 never contributes.
int partial_sum(const ColorVec& I, SumRel rel, Color bound);

// Sum over signed colors with rank between rank(lo) and rank(hi), inclusive.
int partial_sum_interval(const ColorVec& I, Color lo, Color hi);

// A signed permutation in one-line notation: img[i-1] = sigma(i), with
// sigma(bar i) = bar(sigma(i)) implied.  |img| must be a permutation of 1..n.
class SignedPerm {
public:
    explicit SignedPerm(std::vector<int> images);

    static SignedPerm identity(int n);
    // Comma-separated signed integers, e.g. "2,-1,3".
    static SignedPerm parse(const std::string& text, int n_expected = 0);

    int n() const { return static_cast<int>(img_.size()); }

    // sigma(i) for i in [n]; sigma(-i) = -sigma(i); sigma(0) = 0.
    int apply(int i) const;
    int operator()(int i) const { return apply(i); }

    const std::vector<int>& images() const { return img_; }
    std::string str() const;

    friend bool operator==(const SignedPerm& a, const SignedPerm& b) {
        return a.img_ == b.img_;
    }
    friend bool operator!=(const SignedPerm& a, const SignedPerm& b) { return !(a == b); }
    friend bool operator<(const SignedPerm& a, const SignedPerm& b) {
        return a.img_ < b.img_;
    }

private:
    std::vector<int> img_;
};

// (a o b)(j) = a(b(j)).
SignedPerm compose(const SignedPerm& a, const SignedPerm& b);
SignedPerm inverse(const SignedPerm& a);

// i < n: the transposition of positions i, i+1; i = n: sign change at n.
SignedPerm simple_reflection(int i, int n);

// Minimal number of generators producing sigma, by breadth-first search over
// the Cayley graph from the identity (cached per n; guarded by a size bound).
int length(const SignedPerm& sigma, int n_bound = 5);

std::vector<SignedPerm> all_signed_perms(int n);

}  // namespace uturn

#endif
