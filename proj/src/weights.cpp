#include "uturn/weights.hpp"

namespace uturn {

Rat phi(const Rat& z, const ParamPoint& p) {
    const Rat d1 = Rat(1) - p.nu * p.t * z;
    if (d1.is_zero()) throw PoleError("1-nu*t*z", "phi at z=" + z.str());
    const Rat d2 = Rat(1) + z / p.nu;
    if (d2.is_zero()) throw PoleError("1+z/nu", "phi at z=" + z.str());
    return (Rat(1) - z * z) / (d1 * d2);
}

namespace {

bool conserves(const ColorVec& I, Color j, const ColorVec& K, Color l) {
    if (!K.nonneg()) return false;
    ColorVec lhs = I;
    lhs.add(j, 1);
    ColorVec rhs = K;
    rhs.add(l, 1);
    return lhs == rhs;
}

Rat denom_1_minus_sx(const Rat& x, const ParamPoint& p) {
    Rat d = Rat(1) - p.s * x;
    if (d.is_zero()) throw PoleError("1-s*x", "row vertex at x=" + x.str());
    return d;
}

}  // namespace

Rat gamma_weight(const ColorVec& I, Color j, const ColorVec& K, Color l,
                 const Rat& x, const ParamPoint& p) {
    const int n = I.n();
    if (!valid_color(j, n) || !valid_color(l, n))
        throw DomainError("vertex color out of range");
    if (!conserves(I, j, K, l)) return Rat(0);
    const Rat den = denom_1_minus_sx(x, p);
    const Rat& q = p.q;
    const Rat& s = p.s;
    const int plain = partial_sum_interval(I, 1, n);       // I_1 + ... + I_n
    const int barred = partial_sum_interval(I, -n, -1);    // I_{bar n} + ... + I_{bar 1}

    const Cmp cmp = color_compare(j, l, n);
    if (cmp == Cmp::EQ) {
        if (l == 0)
            return (q.pow(-plain) - s * x * q.pow(barred)) / den;
        const Rat core = s * q.pow(I.count(l)) - x;
        if (l > 0)
            return core * q.pow(-partial_sum(I, SumRel::LE, l)) / (s * den);
        return s * core * q.pow(partial_sum(I, SumRel::GT, l)) / den;
    }
    if (cmp == Cmp::LT) {  // j < l
        if (l == 0)
            return (x * q.pow(-plain) - s * s * x * q.pow(barred)) / (s * den);
        const Rat core = Rat(1) - q.pow(I.count(l));
        if (l > 0)
            return -(x * core * q.pow(-partial_sum(I, SumRel::LE, l))) / (s * den);
        return -(s * x * core * q.pow(partial_sum(I, SumRel::GT, l))) / den;
    }
    // j > l
    if (l == 0)
        return (q.pow(-plain) - s * s * q.pow(barred)) / den;
    const Rat core = Rat(1) - q.pow(I.count(l));
    if (l > 0)
        return -(core * q.pow(-partial_sum(I, SumRel::LE, l))) / den;
    return -(s * s * core * q.pow(partial_sum(I, SumRel::GT, l))) / den;
}

Rat delta_weight(const ColorVec& I, Color j, const ColorVec& K, Color l,
                 const Rat& x, const ParamPoint& p) {
    const int n = I.n();
    if (!valid_color(j, n) || !valid_color(l, n))
        throw DomainError("vertex color out of range");
    if (!conserves(I, j, K, l)) return Rat(0);
    const Rat den = denom_1_minus_sx(x, p);
    const Rat& q = p.q;
    const Rat& s = p.s;
    const int plain = partial_sum_interval(I, 1, n);
    const int barred = partial_sum_interval(I, -n, -1);

    const Cmp cmp = color_compare(j, l, n);
    if (cmp == Cmp::EQ) {
        if (l == 0)
            return (q.pow(-barred) - s * x * q.pow(plain)) / den;
        if (l > 0)
            return s * (s * q.pow(I.count(l)) - x) * q.pow(partial_sum(I, SumRel::LT, l)) / den;
        return (Rat(1) - x * q.pow(-I.count(l)) / s) * q.pow(-partial_sum(I, SumRel::GT, l)) / den;
    }
    if (cmp == Cmp::LT) {  // j < l
        if (l == 0)
            return (q.pow(-barred) - s * s * q.pow(plain)) / den;
        const Rat core = Rat(1) - q.pow(I.count(l));
        if (l > 0)
            return -(s * s * core * q.pow(partial_sum(I, SumRel::LT, l))) / den;
        return -(core * q.pow(-partial_sum(I, SumRel::GE, l))) / den;
    }
    // j > l
    if (l == 0)
        return x * (q.pow(-barred) / s - s * q.pow(plain)) / den;
    const Rat core = Rat(1) - q.pow(I.count(l));
    if (l > 0)
        return -(s * x * core * q.pow(partial_sum(I, SumRel::LT, l))) / den;
    return -(x * core * q.pow(-partial_sum(I, SumRel::GE, l))) / (s * den);
}

Rat vertex_weight(const VertexLabel& label, const ParamPoint& p) {
    return label.kind == VertexKind::Gamma
               ? gamma_weight(label.I, label.j, label.K, label.l, label.spectral, p)
               : delta_weight(label.I, label.j, label.K, label.l, label.spectral, p);
}

Rat cap_weight(CapVariant variant, Color input, Color output, const Rat& x,
               const ParamPoint& p, Color marked) {
    const bool inverted_arg =
        variant == CapVariant::Standard || variant == CapVariant::MarkedInverted;
    if (inverted_arg && x.is_zero()) throw PoleError("x", "cap at x=0");
    if (variant == CapVariant::Standard) {
        if (input == 0 && output == 0) return Rat(1);
        if (input == 0 || output == 0) return Rat(0);
        if (input != output && input != -output) return Rat(0);
        const Rat ph = phi((p.r * x).inv(), p);
        if (input > 0)  // plain color: flip with t*phi, keep otherwise
            return output == -input ? p.t * ph : Rat(1) - p.t * ph;
        return output == -input ? ph : Rat(1) - ph;
    }

    if (marked <= 0) throw DomainError("marked cap variant needs a plain marked color");

    const Rat arg = inverted_arg ? (p.r * x).inv() : x / p.r;
    switch (variant) {
        case CapVariant::MarkedInverted:
        case CapVariant::MarkedDirect: {
            if (input == marked && output == 0) return Rat(-1);
            if (input == 0 && output == -marked) return p.t * phi(arg, p);
            if (input == 0 && output == marked) return Rat(1) - p.t * phi(arg, p);
            return Rat(0);
        }
        case CapVariant::MarkedBarred: {
            if (input == -marked && output == 0) return Rat(-1);
            if (input == 0 && output == -marked) return Rat(1) - phi(arg, p);
            if (input == 0 && output == marked) return phi(arg, p);
            return Rat(0);
        }
        case CapVariant::Standard:
            break;
    }
    throw DomainError("unknown cap variant");
}

Rat cap_weight(const CapLabel& label, const ParamPoint& p) {
    return cap_weight(label.variant, label.input, label.output, label.spectral, p,
                      label.marked);
}

namespace {

// Pattern symbol for the two-color tables: 0 for the lower color, 1 for the
// higher (in color order).
int pattern_code(Color a, Color b, Color c, Color d, Color lo) {
    int code = 0;
    for (Color v : {a, b, c, d}) code = code * 2 + (v == lo ? 0 : 1);
    return code;
}

}  // namespace

Rat r_weight(RFamily family, Color alpha, Color beta, Color gamma, Color delta,
             const Rat& x, const Rat& y, const ParamPoint& p, int n) {
    for (Color v : {alpha, beta, gamma, delta})
        if (!valid_color(v, n)) throw DomainError("crossing color out of range");
    if (alpha == beta && beta == gamma && gamma == delta) return Rat(1);

    Color lo = alpha, hi = alpha;
    for (Color v : {beta, gamma, delta}) {
        if (color_lt(v, lo, n)) lo = v;
        if (color_lt(hi, v, n)) hi = v;
    }
    for (Color v : {alpha, beta, gamma, delta})
        if (v != lo && v != hi) return Rat(0);
    // lo != hi here (the all-equal case returned above); patterns are coded
    // base-2 as (alpha beta gamma delta) with i := lo -> 0, j := hi -> 1.
    const int code = pattern_code(alpha, beta, gamma, delta, lo);
    const Rat& q = p.q;

    switch (family) {
        case RFamily::GG: {
            const Rat den = x - q * y;
            if (den.is_zero()) throw PoleError("x-q*y", "GG crossing");
            switch (code) {
                case 0b0101: return (x - y) / den;              // (i,j,i,j)
                case 0b1010: return q * (x - y) / den;          // (j,i,j,i)
                case 0b1001: return (Rat(1) - q) * x / den;     // (j,i,i,j)
                case 0b0110: return (Rat(1) - q) * y / den;     // (i,j,j,i)
                default: return Rat(0);
            }
        }
        case RFamily::DG: {
            if (q.is_zero()) throw PoleError("q", "DG crossing");
            const Rat den = x * y - Rat(1);
            if (den.is_zero()) throw PoleError("x*y-1", "DG crossing");
            switch (code) {
                case 0b0101: return (q * x * y - Rat(1)) / den;            // (i,j,i,j)
                case 0b1010: return (q * x * y - Rat(1)) / (q * den);      // (j,i,j,i)
                case 0b1100: return (Rat(1) - q) / (q * den);              // (j,j,i,i)
                case 0b0011: return (Rat(1) - q) * x * y / den;            // (i,i,j,j)
                default: return Rat(0);
            }
        }
        case RFamily::DD: {
            const Rat den = y - q * x;
            if (den.is_zero()) throw PoleError("y-q*x", "DD crossing");
            switch (code) {
                case 0b0101: return (y - x) / den;              // (i,j,i,j)
                case 0b1010: return q * (y - x) / den;          // (j,i,j,i)
                case 0b1001: return (Rat(1) - q) * x / den;     // (j,i,i,j)
                case 0b0110: return (Rat(1) - q) * y / den;     // (i,j,j,i)
                default: return Rat(0);
            }
        }
    }
    throw DomainError("unknown crossing family");
}

Rat r_weight(const RVertexLabel& label, const ParamPoint& p, int n) {
    return r_weight(label.family, label.alpha, label.beta, label.gamma, label.delta,
                    label.x, label.y, p, n);
}

}  // namespace uturn
