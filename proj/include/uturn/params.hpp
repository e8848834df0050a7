// The parameter point every weight is evaluated at.
//
// r is the primitive input and q := r^2, so q^{1/2} = r stays rational and
// every identity except the square-root-bearing F transform is checked in
// exact arithmetic.

#ifndef UTURN_PARAMS_HPP
#define UTURN_PARAMS_HPP

#include <cstddef>
#include <vector>

#include "uturn/rational.hpp"

namespace uturn {

struct ParamPoint {
    Rat r;                // q^{1/2}
    Rat s;                // spin parameter, nonzero
    Rat nu;               // boundary parameter, nonzero
    Rat t;                // boundary parameter
    std::vector<Rat> x;   // spectral parameters x_1..x_n
    Rat q;                // r^2, cached

    ParamPoint(Rat r_, Rat s_, Rat nu_, Rat t_, std::vector<Rat> x_)
        : r(std::move(r_)), s(std::move(s_)), nu(std::move(nu_)), t(std::move(t_)),
          x(std::move(x_)), q(r * r) {
        if (r.is_zero()) throw DomainError("parameter r must be nonzero");
        if (s.is_zero()) throw DomainError("parameter s must be nonzero");
        if (nu.is_zero()) throw DomainError("parameter nu must be nonzero");
    }

    std::size_t rank_count() const { return x.size(); }

    ParamPoint with_x(std::vector<Rat> nx) const {
        return ParamPoint(r, s, nu, t, std::move(nx));
    }

    // x with positions i and i+1 swapped (1-based).
    ParamPoint swap_x(std::size_t i) const {
        if (i < 1 || i + 1 > x.size()) throw DomainError("swap index out of range");
        auto nx = x;
        std::swap(nx[i - 1], nx[i]);
        return with_x(std::move(nx));
    }

    // x with the last entry inverted.
    ParamPoint invert_last_x() const {
        auto nx = x;
        if (nx.empty()) throw DomainError("empty spectral vector");
        nx.back() = nx.back().inv();
        return with_x(std::move(nx));
    }
};

}  // namespace uturn

#endif
