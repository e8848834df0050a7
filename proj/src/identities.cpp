#include "uturn/identities.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace uturn {

namespace {

std::string vec_str(const ColorVec& v) { return v.str(); }

std::string colors_str(std::initializer_list<Color> cs) {
    std::ostringstream os;
    bool first = true;
    for (Color c : cs) {
        if (!first) os << ",";
        os << color_str(c);
        first = false;
    }
    return os.str();
}

// I + e_j - e_l when the result is nonnegative.
std::optional<ColorVec> shift(const ColorVec& I, Color j, Color l) {
    ColorVec K = I;
    if (j != 0) K.add(j, +1);
    if (l != 0) K.add(l, -1);
    if (!K.nonneg()) return std::nullopt;
    return K;
}

std::string point_str(const ParamPoint& p) {
    std::ostringstream os;
    os << "r=" << p.r.str() << " s=" << p.s.str() << " nu=" << p.nu.str() << " t=" << p.t.str();
    for (std::size_t j = 0; j < p.x.size(); ++j) os << " x" << (j + 1) << "=" << p.x[j].str();
    return os.str();
}

std::string spec_str(const ModelSpec& spec) {
    std::ostringstream os;
    os << "n=" << spec.n << " L=" << spec.L << " sigma=" << spec.sigma.str() << " mu=";
    for (std::size_t i = 0; i < spec.mu.size(); ++i) {
        if (i) os << ",";
        os << spec.mu[i];
    }
    os << " " << point_str(spec.params);
    return os.str();
}

}  // namespace

double FloatReport::rel_err() const {
    const double denom = std::max({std::fabs(left), std::fabs(right), 1e-30});
    return std::fabs(left - right) / denom;
}

IdentityReport check_vertex_stochastic(VertexKind kind, const ColorVec& I, Color j, const Rat& x,
                                       const ParamPoint& p) {
    const int n = I.n();
    Rat sum{0};
    for (Color l : all_colors(n)) {
        auto K = shift(I, j, l);
        if (!K) continue;
        sum += kind == VertexKind::Gamma ? gamma_weight(I, j, *K, l, x, p)
                                         : delta_weight(I, j, *K, l, x, p);
    }
    IdentityReport rep;
    rep.identity = kind == VertexKind::Gamma ? "stochastic/gamma" : "stochastic/delta";
    std::ostringstream os;
    os << "I=" << vec_str(I) << " j=" << color_str(j) << " x=" << x.str() << " " << point_str(p);
    rep.instance = os.str();
    rep.left = sum;
    rep.right = Rat{1};
    return rep;
}

IdentityReport check_cap_stochastic(Color in, const Rat& x, const ParamPoint& p) {
    Rat sum{0};
    if (in == 0) {
        sum = cap_weight(CapVariant::Standard, 0, 0, x, p);
    } else {
        int a = in > 0 ? in : -in;
        sum = cap_weight(CapVariant::Standard, in, a, x, p) +
              cap_weight(CapVariant::Standard, in, -a, x, p);
    }
    IdentityReport rep;
    rep.identity = "stochastic/cap";
    std::ostringstream os;
    os << "in=" << color_str(in) << " x=" << x.str() << " " << point_str(p);
    rep.instance = os.str();
    rep.left = sum;
    rep.right = Rat{1};
    return rep;
}

IdentityReport check_ybe(RFamily family, const ColorVec& f, Color a, Color b, Color d, Color e,
                         const Rat& x, const Rat& y, const ParamPoint& p) {
    const int n = f.n();
    const bool x_gamma = family == RFamily::GG;                          // row at x
    const bool y_gamma = family == RFamily::GG || family == RFamily::DG; // row at y

    // Global conservation fixes the top vector c.
    Color cp1 = 0, cp2 = 0, cm1 = 0, cm2 = 0;
    switch (family) {
        case RFamily::GG: cp1 = a; cp2 = b; cm1 = d; cm2 = e; break;
        case RFamily::DD: cp1 = d; cp2 = e; cm1 = a; cm2 = b; break;
        case RFamily::DG: cp1 = a; cp2 = e; cm1 = b; cm2 = d; break;
    }
    ColorVec c = f;
    bool c_ok = true;
    if (cp1 != 0) c.add(cp1, +1);
    if (cp2 != 0) c.add(cp2, +1);
    if (cm1 != 0) c.add(cm1, -1);
    if (cm2 != 0) c.add(cm2, -1);
    c_ok = c.nonneg();

    IdentityReport rep;
    rep.identity = std::string("ybe/") + rfamily_str(family);
    std::ostringstream os;
    os << "f=" << vec_str(f) << " a,b,d,e=" << colors_str({a, b, d, e}) << " x=" << x.str()
       << " y=" << y.str() << " " << point_str(p);
    rep.instance = os.str();
    if (!c_ok) return rep;  // both sides empty sums

    const std::vector<Color> cols = all_colors(n);
    Rat left{0};
    for (Color i : cols) {
        auto h = x_gamma ? shift(f, i, e) : shift(f, e, i);
        if (!h) continue;
        for (Color g : cols) {
            Rat rw = r_weight(family, a, b, g, i, x, y, p, n);
            if (rw.is_zero()) continue;
            Rat sw = x_gamma ? gamma_weight(f, i, *h, e, x, p) : delta_weight(f, e, *h, i, x, p);
            if (sw.is_zero()) continue;
            Rat tw = y_gamma ? gamma_weight(*h, g, c, d, y, p) : delta_weight(*h, d, c, g, y, p);
            left += rw * sw * tw;
        }
    }
    Rat right{0};
    for (Color l : cols) {
        auto k = y_gamma ? shift(f, a, l) : shift(f, l, a);
        if (!k) continue;
        for (Color j : cols) {
            Rat rw = r_weight(family, l, j, d, e, x, y, p, n);
            if (rw.is_zero()) continue;
            Rat tw = y_gamma ? gamma_weight(f, a, *k, l, y, p) : delta_weight(f, l, *k, a, y, p);
            if (tw.is_zero()) continue;
            Rat sw = x_gamma ? gamma_weight(*k, b, c, j, x, p) : delta_weight(*k, j, c, b, x, p);
            right += rw * tw * sw;
        }
    }
    rep.left = left;
    rep.right = right;
    return rep;
}

IdentityReport check_reflection(Color e1, Color e2, Color e3, Color e4, const Rat& x, const Rat& y,
                                const ParamPoint& p, int n) {
    const std::vector<Color> cols = all_colors(n);
    Rat left{0};
    for (Color g2 : cols) {
        for (Color g1 : cols) {
            Rat r1 = r_weight(RFamily::DD, e2, e1, g2, g1, x, y, p, n);
            if (r1.is_zero()) continue;
            for (Color h1 : cols) {
                Rat cx = cap_weight(CapVariant::Standard, e4, h1, x, p);
                if (cx.is_zero()) continue;
                for (Color h3 : cols) {
                    Rat r2 = r_weight(RFamily::DG, e3, g1, h3, h1, x, y, p, n);
                    if (r2.is_zero()) continue;
                    Rat cy = cap_weight(CapVariant::Standard, h3, g2, y, p);
                    left += r1 * r2 * cx * cy;
                }
            }
        }
    }
    Rat right{0};
    for (Color g4 : cols) {
        for (Color g3 : cols) {
            Rat r1 = r_weight(RFamily::GG, e4, e3, g4, g3, y, x, p, n);
            if (r1.is_zero()) continue;
            for (Color h2 : cols) {
                Rat cy = cap_weight(CapVariant::Standard, g3, h2, y, p);
                if (cy.is_zero()) continue;
                for (Color h4 : cols) {
                    Rat r2 = r_weight(RFamily::DG, g4, e2, h4, h2, y, x, p, n);
                    if (r2.is_zero()) continue;
                    Rat cx = cap_weight(CapVariant::Standard, h4, e1, x, p);
                    right += r1 * r2 * cy * cx;
                }
            }
        }
    }
    IdentityReport rep;
    rep.identity = "reflection";
    std::ostringstream os;
    os << "eps=" << colors_str({e1, e2, e3, e4}) << " x=" << x.str() << " y=" << y.str() << " "
       << point_str(p);
    rep.instance = os.str();
    rep.left = left;
    rep.right = right;
    return rep;
}

Rat closed_form_value(const ModelSpec& spec) {
    const int n = spec.n, L = spec.L;
    if (!(spec.sigma == SignedPerm::identity(n)))
        throw DomainError("closed form requires the identity sigma");
    for (int i = 0; i < n; ++i) {
        if (spec.mu[i] >= 0) throw DomainError("closed form requires all destinations barred");
        if (i + 1 < n && -spec.mu[i] < -spec.mu[i + 1])
            throw DomainError("closed form requires weakly decreasing depths");
    }
    const Rat& s = spec.params.s;
    const Rat& t = spec.params.t;
    const Rat& q = spec.params.q;
    Rat val = t.pow(n);
    for (int i = 1; i <= n; ++i) {
        const Rat& x = spec.params.x[i - 1];
        val = val * phi((spec.params.r * x).inv(), spec.params);
        Rat ratio = (s - x) / (s * (Rat{1} - s * x));
        val = val * ratio.pow(L - spec.mu[i - 1] - 1);
        val = val * (Rat{0} - s * x) / (Rat{1} - s * x);
    }
    // Multiplicity factor: one descending product per repeated depth.
    const Rat alpha = (s * s).inv();
    for (int j = 1; j <= L; ++j) {
        int m = 0;
        for (int i = 0; i < n; ++i)
            if (-spec.mu[i] == j) ++m;
        for (int k = 0; k < m; ++k) val = val * (Rat{1} - alpha * q.pow(-k));
    }
    return val;
}

IdentityReport check_closed_form(const ModelSpec& spec) {
    IdentityReport rep;
    rep.identity = "closedform";
    rep.instance = spec_str(spec);
    rep.left = partition_function(spec, PfMode::DFS);
    rep.right = closed_form_value(spec);
    return rep;
}

IdentityReport check_exchange(const ModelSpec& spec, int i) {
    const int n = spec.n;
    if (i < 1 || i >= n) throw DomainError("exchange index must satisfy 1 <= i < n");
    const Color ci = spec.sigma.apply(i), cip = spec.sigma.apply(i + 1);
    if (color_compare(ci, cip, n) != Cmp::LT)
        throw DomainError("exchange requires rank(sigma(i)) < rank(sigma(i+1))");
    const Rat& xi = spec.params.x[i - 1];
    const Rat& xip = spec.params.x[i];
    if (xi == xip) throw PoleError("x_{i+1}-x_i", "exchange coefficients");

    const Rat& q = spec.params.q;
    ModelSpec swapped_sigma(spec.n, spec.L, compose(spec.sigma, simple_reflection(i, n)), spec.mu,
                            spec.params);
    ModelSpec swapped_x(spec.n, spec.L, spec.sigma, spec.mu, spec.params.swap_x(i));

    const Rat f_sig = partition_function(spec, PfMode::DFS);
    const Rat f_sig_sx = partition_function(swapped_x, PfMode::DFS);
    const Rat f_ssig = partition_function(swapped_sigma, PfMode::DFS);

    const int pow_lhs = 1 + (cip > 0 ? 1 : 0);
    const int pow_rhs = ci > 0 ? 1 : 0;
    IdentityReport rep;
    rep.identity = "exchange";
    std::ostringstream os;
    os << "i=" << i << " " << spec_str(spec);
    rep.instance = os.str();
    rep.left = q.pow(pow_lhs) * f_ssig;
    rep.right = q.pow(pow_rhs) * ((q - Rat{1}) * xip / (xip - xi) * f_sig +
                                  (xip - q * xi) / (xip - xi) * f_sig_sx);
    return rep;
}

IdentityReport check_inversion(const ModelSpec& spec) {
    const int n = spec.n, L = spec.L;
    const Color cn = spec.sigma.apply(n);
    if (cn < 0) throw DomainError("inversion requires an unbarred color on the bottom pair");
    const Rat& x = spec.params.x[n - 1];
    const Rat& s = spec.params.s;
    const Rat& r = spec.params.r;
    const Rat& nu = spec.params.nu;
    const Rat& t = spec.params.t;
    const Rat& q = spec.params.q;
    const Rat one{1};
    for (const Rat& bad : {Rat{0}, one, Rat{-1}, s, s.inv(), r, -r, r.inv(), -r.inv()})
        if (x == bad) throw PoleError("x_n", "inversion coefficients");
    if (t.is_zero()) throw PoleError("t", "inversion coefficients");

    ModelSpec flipped_sigma(spec.n, spec.L, compose(spec.sigma, simple_reflection(n, n)), spec.mu,
                            spec.params);
    ModelSpec inverted_x(spec.n, spec.L, spec.sigma, spec.mu, spec.params.invert_last_x());

    const Rat f_sig = partition_function(spec, PfMode::DFS);
    const Rat f_sig_inv = partition_function(inverted_x, PfMode::DFS);
    const Rat f_fsig = partition_function(flipped_sigma, PfMode::DFS);

    const Rat G = ((one - s * x) / (s - x)).pow(L);
    const Rat pref = (r - nu * t * x) * (r + nu.inv() * x) / (t * (one - x * x));

    IdentityReport rep;
    rep.identity = "inversion";
    rep.instance = spec_str(spec);
    rep.left = q * s.pow(-2 * L) * G * f_fsig;
    rep.right = pref * ((one - q * x * x) / (x * x - q) * G.inv() * f_sig_inv - G * f_sig) +
                G * f_sig;
    return rep;
}

IdentityReport check_cap_fusion(Color e1, Color e2, int marked, const Rat& x, const ParamPoint& p,
                                int n) {
    const Rat one{1};
    const Rat& q = p.q;
    Rat left{0};
    for (Color g : all_colors(n)) {
        for (Color d : all_colors(n)) {
            Rat cw = cap_weight(CapVariant::MarkedInverted, d, g, x, p, marked);
            if (cw.is_zero()) continue;
            left += r_weight(RFamily::DD, e1, e2, g, d, x.inv(), x, p, n) * cw;
        }
    }
    const Rat phi1 = phi((p.r * x).inv(), p);
    const Rat x2 = x * x;
    const Rat A = ((one - q) * x2 - (x2 - one) * (one - p.t * phi1)) / (x2 - q);
    const Rat B = q * (x2 - one) * p.t * phi1 / (x2 - q);
    Rat right = A * cap_weight(CapVariant::MarkedDirect, e1, e2, x, p, marked) -
                B * cap_weight(CapVariant::MarkedBarred, e1, e2, x, p, marked);

    IdentityReport rep;
    rep.identity = "capfusion";
    std::ostringstream os;
    os << "eps=" << colors_str({e1, e2}) << " marked=" << marked << " x=" << x.str() << " "
       << point_str(p);
    rep.instance = os.str();
    rep.left = left;
    rep.right = right;
    return rep;
}

double F_transform(const ModelSpec& spec) {
    const int n = spec.n, L = spec.L;
    const Rat& q = spec.params.q;
    const Rat& s = spec.params.s;
    const Rat& t = spec.params.t;
    int neg = 0;
    long rank_exp = static_cast<long>(length(spec.sigma));
    for (int j = 1; j <= n; ++j) {
        Color c = spec.sigma.apply(j);
        if (c > 0) rank_exp += n - j;
        if (c < 0) ++neg;
    }
    Rat val = q.pow(rank_exp);
    val = val * s.pow(-2 * L * neg);
    val = val * (t / q).pow(neg);
    for (int j = 1; j <= n; ++j) {
        const Rat& x = spec.params.x[j - 1];
        if (s == x) throw PoleError("s-x_j", "transform prefactor");
        val = val * ((Rat{1} - s * x) / (s - x)).pow(L);
    }
    val = val * partition_function(spec, PfMode::DFS);
    double out = val.to_double();
    for (int j = 1; j <= n; ++j) {
        const Rat& x = spec.params.x[j - 1];
        const Rat rad = (x * x - q) / (Rat{1} - q * x * x);
        if (rad.sign() <= 0)
            throw DomainError("transform radicand not positive at x" + std::to_string(j));
        out *= std::sqrt(rad.to_double());
    }
    return out;
}

FloatReport check_hecke(const ModelSpec& spec, int i) {
    const int n = spec.n;
    if (i < 1 || i > n) throw DomainError("operator index must satisfy 1 <= i <= n");
    const Rat& q = spec.params.q;
    FloatReport rep;
    std::ostringstream os;
    os << "i=" << i << " " << spec_str(spec);
    rep.instance = os.str();

    if (i < n) {
        const Color ci = spec.sigma.apply(i), cip = spec.sigma.apply(i + 1);
        if (color_compare(ci, cip, n) != Cmp::LT)
            throw DomainError("operator requires rank(sigma(i)) < rank(sigma(i+1))");
        if (spec.params.x[i - 1] == spec.params.x[i])
            throw PoleError("x_{i+1}-x_i", "transposition operator");
        rep.identity = "hecke/transposition";
        ModelSpec shifted(spec.n, spec.L, compose(spec.sigma, simple_reflection(i, n)), spec.mu,
                          spec.params);
        ModelSpec swapped(spec.n, spec.L, spec.sigma, spec.mu, spec.params.swap_x(i));
        const double g0 = F_transform(spec);
        const double g1 = F_transform(swapped);
        const Rat coef = (spec.params.x[i] - q * spec.params.x[i - 1]) /
                         (spec.params.x[i] - spec.params.x[i - 1]);
        rep.left = F_transform(shifted);
        rep.right = q.to_double() * g0 + coef.to_double() * (g1 - g0);
        return rep;
    }

    if (spec.sigma.apply(n) < 0)
        throw DomainError("operator requires an unbarred color on the bottom pair");
    rep.identity = "hecke/inversion";
    const Rat& x = spec.params.x[n - 1];
    if (x == Rat{1} || x == Rat{-1}) throw PoleError("1-x_n^2", "inversion operator");
    const Rat a = spec.params.nu * spec.params.t / spec.params.r;
    const Rat b = Rat{0} - spec.params.nu.inv() / spec.params.r;
    ModelSpec flipped(spec.n, spec.L, compose(spec.sigma, simple_reflection(n, n)), spec.mu,
                      spec.params);
    ModelSpec inverted(spec.n, spec.L, spec.sigma, spec.mu, spec.params.invert_last_x());
    const double g0 = F_transform(spec);
    const double g1 = F_transform(inverted);
    const Rat one{1};
    const Rat coef = (one - a * x) * (one - b * x) / (one - x * x);
    rep.left = F_transform(flipped);
    rep.right = (Rat{0} - a * b).to_double() * g0 + coef.to_double() * (g1 - g0);
    return rep;
}

Rat random_rational(std::mt19937_64& rng, int bound) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rat{num(rng), den(rng)};
}

Rat random_nonzero_rational(std::mt19937_64& rng, int bound) {
    for (;;) {
        Rat v = random_rational(rng, bound);
        if (!v.is_zero()) return v;
    }
}

ParamPoint random_param_point(std::mt19937_64& rng, int n, int bound) {
    for (;;) {
        Rat r = random_nonzero_rational(rng, bound);
        Rat s = random_nonzero_rational(rng, bound);
        Rat nu = random_nonzero_rational(rng, bound);
        Rat t = random_nonzero_rational(rng, bound);
        std::vector<Rat> xs;
        bool ok = true;
        for (int j = 0; j < n; ++j) {
            Rat x = random_nonzero_rational(rng, bound);
            for (const Rat& prev : xs)
                if (prev == x) ok = false;
            xs.push_back(x);
        }
        if (!ok) continue;
        return ParamPoint{r, s, nu, t, xs};
    }
}

}  // namespace uturn
