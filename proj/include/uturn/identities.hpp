// Exact verification of the model's algebraic identities.  Every check
// returns a report carrying both sides of the identity; a report passes iff
// the two sides are equal as rationals (or, for the float-valued transform
// checks, within a relative tolerance).

#ifndef UTURN_IDENTITIES_HPP
#define UTURN_IDENTITIES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "uturn/colors.hpp"
#include "uturn/lattice.hpp"
#include "uturn/params.hpp"
#include "uturn/rational.hpp"
#include "uturn/weights.hpp"

namespace uturn {

struct IdentityReport {
    std::string identity;
    std::string instance;
    Rat left{0}, right{0};
    uint64_t seed = 0;  // seed the parameters were drawn from; 0 for pinned points

    bool pass() const { return left == right; }
    Rat residual() const { return left - right; }
};

struct FloatReport {
    std::string identity;
    std::string instance;
    double left = 0, right = 0;
    uint64_t seed = 0;

    double rel_err() const;
    bool pass(double tol) const { return rel_err() <= tol; }
};

// Row sums of a single vertex: the outputs of any admissible input pair sum
// to exactly 1.
IdentityReport check_vertex_stochastic(VertexKind kind, const ColorVec& I, Color j, const Rat& x,
                                       const ParamPoint& p);
IdentityReport check_cap_stochastic(Color in, const Rat& x, const ParamPoint& p);

// Yang-Baxter equation for one crossing family: moving the crossing through
// a pair of rows preserves the weighted sum over internal edges, for every
// choice of boundary data.
IdentityReport check_ybe(RFamily family, const ColorVec& f, Color a, Color b, Color d, Color e,
                         const Rat& x, const Rat& y, const ParamPoint& p);

// Boundary compatibility: a double crossing dragged through two caps equals
// the mirrored double crossing, for every choice of the four external
// colors.
IdentityReport check_reflection(Color e1, Color e2, Color e3, Color e4, const Rat& x, const Rat& y,
                                const ParamPoint& p, int n);

// Closed product form of the partition function in the frozen regime
// (identity sigma, all destinations barred, weakly decreasing depths).
Rat closed_form_value(const ModelSpec& spec);
IdentityReport check_closed_form(const ModelSpec& spec);

// Exchange relation under a simple transposition of adjacent rows, valid
// when the colors entering rows i, i+1 are in increasing rank order.
IdentityReport check_exchange(const ModelSpec& spec, int i);

// Relation under inversion of the last spectral parameter, valid when the
// color entering the bottom pair is unbarred.
IdentityReport check_inversion(const ModelSpec& spec);

// Decomposition of a crossing fused with the auxiliary marked cap into a
// combination of the two single-path marked caps.
IdentityReport check_cap_fusion(Color e1, Color e2, int marked, const Rat& x, const ParamPoint& p,
                                int n);

// Normalized transform of the partition function whose exchange relations
// take Hecke form.  Real-valued: requires every radicand (x_j^2-q)/(1-q
// x_j^2) to be positive.
double F_transform(const ModelSpec& spec);

// Hecke-operator form of the exchange relations on the transform:
// i < rank uses the transposition operator, i == rank the inversion one.
FloatReport check_hecke(const ModelSpec& spec, int i);

// Random rationals with numerator and denominator bounded by `bound`.
Rat random_rational(std::mt19937_64& rng, int bound = 50);
Rat random_nonzero_rational(std::mt19937_64& rng, int bound = 50);
ParamPoint random_param_point(std::mt19937_64& rng, int n, int bound = 50);

}  // namespace uturn

#endif
