// Boltzmann weights: the two row-vertex tables, the U-turn cap in its four
// variants, the three crossing-vertex families, and the rational function phi.
//
// Row vertices.  A Gamma vertex (even rows, paths flow left to right) is
// labeled (I, j, K, l) = (bottom vector, left color, top vector, right
// color).  A Delta vertex (odd rows, paths flow right to left) is labeled
// (I, j, K, l) = (bottom, RIGHT color, top, LEFT color).  Both demand
// conservation I + e_j = K + e_l and K >= 0; anything else has weight 0.
//
// Caps join the right ends of a row pair, mapping the bottom strand's color
// to the top strand's.  Standard is the model's boundary; the three Marked
// variants are auxiliary single-color caps used by the fused-vertex
// decomposition identity (a marked plain color is absorbed at weight -1, or
// emitted from the empty color with phi-weights).
//
// Crossing vertices R_XY(alpha,beta,gamma,delta; x,y) carry colors only, at
// positions (bottom-left, top-left, top-right, bottom-right); the two
// strands connect alpha->gamma and beta->delta.  Five patterns per family
// are nonzero, written with i < j in the color order.

#ifndef UTURN_WEIGHTS_HPP
#define UTURN_WEIGHTS_HPP

#include "uturn/colors.hpp"
#include "uturn/params.hpp"
#include "uturn/rational.hpp"

namespace uturn {

enum class VertexKind { Gamma, Delta };

struct VertexLabel {
    VertexKind kind;
    ColorVec I;
    Color j;
    ColorVec K;
    Color l;
    Rat spectral;
};

enum class RFamily { GG, DG, DD };

inline const char* rfamily_str(RFamily f) {
    switch (f) {
        case RFamily::GG: return "GG";
        case RFamily::DG: return "DG";
        case RFamily::DD: return "DD";
    }
    return "?";
}

struct RVertexLabel {
    RFamily family;
    Color alpha, beta, gamma, delta;
    Rat x, y;
};

enum class CapVariant { Standard, MarkedInverted, MarkedDirect, MarkedBarred };

struct CapLabel {
    CapVariant variant;
    Color input;    // bottom strand
    Color output;   // top strand
    Rat spectral;
    Color marked = 0;  // required plain color for the Marked variants
};

// phi(z) = (1 - z^2) / ((1 - nu*t*z) * (1 + z/nu)).
Rat phi(const Rat& z, const ParamPoint& p);

Rat gamma_weight(const ColorVec& I, Color j, const ColorVec& K, Color l,
                 const Rat& x, const ParamPoint& p);
Rat delta_weight(const ColorVec& I, Color j, const ColorVec& K, Color l,
                 const Rat& x, const ParamPoint& p);
Rat vertex_weight(const VertexLabel& label, const ParamPoint& p);

Rat cap_weight(CapVariant variant, Color input, Color output, const Rat& x,
               const ParamPoint& p, Color marked = 0);
Rat cap_weight(const CapLabel& label, const ParamPoint& p);

Rat r_weight(RFamily family, Color alpha, Color beta, Color gamma, Color delta,
             const Rat& x, const Rat& y, const ParamPoint& p, int n);
Rat r_weight(const RVertexLabel& label, const ParamPoint& p, int n);

}  // namespace uturn

#endif
