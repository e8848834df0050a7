// Exact rational arithmetic for the vertex-model engine.
//
// Rat wraps a GMP rational and keeps it in canonical form (positive
// denominator, reduced).  All failure modes are structured exceptions:
// DomainError for precondition violations, PoleError when a formula's
// denominator vanishes at the evaluation point (callers need to tell a
// pole apart from an honest zero).

#ifndef UTURN_RATIONAL_HPP
#define UTURN_RATIONAL_HPP

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace uturn {

class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class PoleError : public std::runtime_error {
public:
    PoleError(std::string factor, const std::string& context)
        : std::runtime_error("pole: factor '" + factor + "' vanishes (" + context + ")"),
          factor_(std::move(factor)) {}

    const std::string& factor() const { return factor_; }

private:
    std::string factor_;
};

class Rat {
public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}            // NOLINT: implicit by design, mirrors integer literals
    Rat(long n, long d) {
        if (d == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(n, d);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "p/q", optional leading '-'; decimal digits only.
    static Rat parse(const std::string& text);

    Rat operator-() const { return Rat(mpq_class(-v_), NoCanon{}); }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw DomainError("division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }

    Rat inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(mpq_class(1) / v_, NoCanon{});
    }

    // Integer power; 0^k with k<0 is a domain error, a^0 = 1.
    Rat pow(long k) const;

    std::string num_str() const { return v_.get_num().get_str(); }
    std::string den_str() const { return v_.get_den().get_str(); }
    std::string str() const {
        return v_.get_den() == 1 ? num_str() : num_str() + "/" + den_str();
    }

    // Nearest double; infinite results (magnitude beyond double range) are an error.
    double to_double() const {
        double d = v_.get_d();
        if (!std::isfinite(d)) throw DomainError("float embedding overflow: " + str());
        return d;
    }

    const mpq_class& raw() const { return v_; }

private:
    struct NoCanon {};
    Rat(mpq_class v, NoCanon) : v_(std::move(v)) {}
    mpq_class v_;
};

enum class RatOp { Add, Sub, Mul, Div };

inline Rat rat_arith(const Rat& a, const Rat& b, RatOp op) {
    switch (op) {
        case RatOp::Add: return a + b;
        case RatOp::Sub: return a - b;
        case RatOp::Mul: return a * b;
        case RatOp::Div: return a / b;
    }
    throw DomainError("unknown rational op");
}

inline Rat rat_pow(const Rat& a, long k) { return a.pow(k); }

inline double float_embed(const Rat& a) { return a.to_double(); }

inline Rat Rat::pow(long k) const {
    if (k == 0) return Rat(1);
    if (is_zero() && k < 0) throw DomainError("zero to a negative power");
    mpz_class num = v_.get_num();
    mpz_class den = v_.get_den();
    if (k < 0) {
        std::swap(num, den);
        if (sgn(den) < 0) { num = -num; den = -den; }
        k = -k;
    }
    mpz_class rn, rd;
    mpz_pow_ui(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(k));
    mpz_pow_ui(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(k));
    mpq_class out(rn);
    out /= mpq_class(rd);
    return Rat(std::move(out), NoCanon{});
}

inline Rat Rat::parse(const std::string& text) {
    auto bad = [&]() { return DomainError("cannot parse rational literal '" + text + "'"); };
    if (text.empty()) throw bad();
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw bad();
    if (num[0] == '+') num.erase(0, 1);
    mpq_class v;
    if (v.set_str(num + "/" + den, 10) != 0) throw bad();
    if (v.get_den() == 0) throw DomainError("rational with zero denominator");
    v.canonicalize();
    return Rat(std::move(v));
}

}  // namespace uturn

#endif
