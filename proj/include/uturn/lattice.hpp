// The lattice model: 2n rows by L columns with U-turn caps on the right.
//
// Geometry and conventions.  Rows are numbered 1..2n top to bottom; even
// rows are Gamma rows (paths enter on the left edge with color sigma(i) on
// row 2i and flow right), odd rows are Delta rows (paths flow left, and must
// exit the left edge with color 0).  Columns are numbered 1..L right to
// left.  Rows 2i-1 and 2i share the spectral parameter x_i and are joined on
// the right by a standard cap with spectral x_i: the Gamma row's rightmost
// output feeds the cap bottom, the cap top feeds the Delta row's rightmost
// input.  The bottom boundary carries the zero vector everywhere; the top
// boundary at column j carries e_i for every mu_i = j and e_{bar i} for
// every mu_i = -j.
//
// Horizontal edge positions are 0..L per row: position p is the edge between
// column p (to its right) and column p+1 (to its left), so position 0 is the
// cap-side edge and position L the outer-left boundary edge.  Vertical
// levels are 0..2n bottom to top; row r sits between levels 2n-r and
// 2n-r+1.
//
// Enumeration processes row pairs bottom to top (pair n first): the Gamma
// row from the left boundary toward the cap (column L down to 1), the cap,
// then the Delta row from the cap toward the left boundary (column 1 up to
// L).  Every vertex then has both inputs known, and branching over the
// output color is a tree.

#ifndef UTURN_LATTICE_HPP
#define UTURN_LATTICE_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uturn/colors.hpp"
#include "uturn/params.hpp"
#include "uturn/rational.hpp"

namespace uturn {

// Thrown by the sampler when a reachable branch distribution is not a
// probability distribution (a weight outside [0,1]).
class RegimeError : public DomainError {
public:
    using DomainError::DomainError;
};

struct ModelSpec {
    int n;
    int L;
    SignedPerm sigma;
    std::vector<int> mu;  // n nonzero entries, |mu_i| <= L
    ParamPoint params;

    ModelSpec(int n_, int L_, SignedPerm sigma_, std::vector<int> mu_, ParamPoint params_);
};

struct LatticeState {
    int n = 0, L = 0;
    // horiz[r-1][p]: color on row r, position p (see header comment).
    std::vector<std::vector<Color>> horiz;
    // vert[level][c-1]: vector on vertical level, column c.
    std::vector<std::vector<ColorVec>> vert;

    LatticeState() = default;
    LatticeState(int n_, int L_);

    Color cap_input(int pair) const { return horiz[2 * pair - 1][0]; }
    Color cap_output(int pair) const { return horiz[2 * pair - 2][0]; }

    friend bool operator==(const LatticeState& a, const LatticeState& b) {
        return a.n == b.n && a.L == b.L && a.horiz == b.horiz && a.vert == b.vert;
    }
    friend bool operator<(const LatticeState& a, const LatticeState& b);
};

// Top boundary vectors demanded by mu, per column 1..L.
std::vector<ColorVec> top_boundary(const ModelSpec& spec);

// Independent structural admissibility check: vertex-by-vertex conservation,
// listed cap transitions, and exact boundary match.  Used as the oracle
// filter by the blind-fill enumeration test.
bool admissible_state(const LatticeState& st, const ModelSpec& spec);

// All admissible states, depth-first, each produced exactly once.
// Structural: zero-weight-at-this-point branches are still taken.
std::vector<LatticeState> enumerate_states(const ModelSpec& spec);
void for_each_state(const ModelSpec& spec, const std::function<void(const LatticeState&)>& fn);
std::size_t count_states(const ModelSpec& spec);

// Product of all row-vertex and cap weights of an admissible state.
Rat state_weight(const LatticeState& st, const ModelSpec& spec);

enum class PfMode { DFS, Memoized };

// Sum of state weights over all admissible states.
Rat partition_function(const ModelSpec& spec, PfMode mode = PfMode::DFS);

// Terminal outcome of the forward process: either some Delta row exits the
// left boundary with a nonzero color (the run is rejected at that pair, and
// rows above it are never reached), or all paths reach the top and the top
// configuration decodes to a unique mu.
struct MassOutcome {
    bool rejected = false;
    int reject_pair = 0;                // 1..n when rejected
    Color reject_color = 0;             // the exiting color when rejected
    std::vector<int> mu;                // decoded top outcome when accepted
    std::vector<std::vector<int>> top;  // counts per column 1..L when accepted
    std::string key() const;
};

struct MassReport {
    Rat total;
    std::vector<std::pair<MassOutcome, Rat>> outcomes;  // sorted by key
    Rat accepted_total() const;
    const Rat* mass_of_mu(const std::vector<int>& mu) const;
};

// Masses of every terminal outcome, enumerated without pruning; the grand
// total is exactly 1 by stochasticity of the weights.
MassReport total_mass(int n, int L, const SignedPerm& sigma, const ParamPoint& params);

struct SampleStep {
    int row;      // 1..2n, or 0 for a cap (pair in `col`)
    int col;      // column, or pair index for caps
    Color chosen;
    double prob;
};

struct SampleResult {
    bool rejected = false;
    int reject_pair = 0;                 // pair whose Delta row exited left
    std::optional<std::vector<int>> mu;  // decoded top outcome when accepted
    std::optional<LatticeState> state;   // present when accepted
    std::vector<SampleStep> trace;
};

// Forward sampler in the enumeration processing order.  Every visited branch
// distribution is validated exactly (weights in [0,1], sum 1) before
// sampling; deterministic for a fixed seed.
SampleResult sample_state(int n, int L, const SignedPerm& sigma, const ParamPoint& params,
                          uint64_t seed);

// Enumeration visit budget (branches tried), from UTURN_MAX_STATES.
uint64_t enumeration_budget();

}  // namespace uturn

#endif
