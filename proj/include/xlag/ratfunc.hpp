#ifndef XLAG_RATFUNC_HPP
#define XLAG_RATFUNC_HPP

#include "xlag/poly.hpp"

namespace xlag {

/// Exact ratio of two polynomials, stored in canonical form:
/// gcd(num, den) constant, den normalized to coprime integer coefficients
/// with positive leading coefficient.
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly::constant(Rational(1))) {}
    RatFunc(Poly num, Poly den) {
        if (den.is_zero()) throw ZeroPolynomial("rational function with zero denominator");
        if (num.is_zero()) {
            num_ = Poly();
            den_ = Poly::constant(Rational(1));
            return;
        }
        Poly g = poly_gcd(num, den);
        num = divmod(num, g).first;
        den = divmod(den, g).first;
        Poly dn = den.normalized();
        // carry the denominator rescale into the numerator exactly
        Rational scale = dn.leading() / den.leading();
        num_ = scale * num;
        den_ = std::move(dn);
    }
    static RatFunc from_poly(Poly p) { return RatFunc(std::move(p), Poly::constant(Rational(1))); }
    static RatFunc constant(const Rational& c) { return from_poly(Poly::constant(c)); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
    Rational constant_value() const {
        if (!is_constant()) throw Error("rational function is not constant");
        return num_.is_zero() ? Rational(0) : num_.leading() / den_.leading();
    }
    bool is_polynomial() const { return den_.degree() == 0; }
    Poly as_polynomial() const {
        if (!is_polynomial()) throw Error("rational function is not a polynomial");
        return (Rational(1) / den_.leading()) * num_;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw ZeroPolynomial("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RatFunc operator*(const Rational& s, const RatFunc& r) {
        return RatFunc(s * r.num_, r.den_);
    }
    friend RatFunc operator*(const RatFunc& r, const Rational& s) { return s * r; }

    RatFunc derivative() const {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    double eval(double x) const { return num_.eval(x) / den_.eval(x); }
    Rational eval(const Rational& x) const {
        Rational d = den_.eval(x);
        if (d == 0) throw Error("rational function pole at evaluation point");
        return num_.eval(x) / d;
    }

    /// Cross-multiplication equality, immune to normalization choices.
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return (a.num_ * b.den_ - b.num_ * a.den_).is_zero();
    }

    std::string str(const std::string& var = "z") const {
        if (is_polynomial()) return as_polynomial().str(var);
        return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
    }

private:
    Poly num_;
    Poly den_;
};

inline bool ratfunc_equal(const RatFunc& a, const RatFunc& b) { return a == b; }

} // namespace xlag

#endif
