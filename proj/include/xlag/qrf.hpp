#ifndef XLAG_QRF_HPP
#define XLAG_QRF_HPP

#include <optional>

#include "xlag/ratfunc.hpp"

namespace xlag {

/// Quasi-rational function of x:
///
///   f(x) = x^p * e^{2 q z} * R(z),   z = omega x^2 / 2.
///
/// The class is closed under d/dx, products, quotients, and sums of terms
/// whose Gaussian exponents agree and whose x-powers differ by an even
/// integer (absorbed into R via z = omega x^2 / 2).
class QRF {
public:
    QRF() : xpow_(0), gauss_(0), rat_(), omega_(1) {}
    QRF(Rational xpow, Rational gauss, RatFunc rat, Rational omega)
        : xpow_(std::move(xpow)), gauss_(std::move(gauss)), rat_(std::move(rat)),
          omega_(std::move(omega)) {
        if (omega_ <= 0) throw Error("QRF requires omega > 0");
        if (rat_.is_zero()) {
            xpow_ = 0;
            gauss_ = 0;
        }
    }

    static QRF zero(const Rational& omega) { return QRF(0, 0, RatFunc(), omega); }
    static QRF constant(const Rational& c, const Rational& omega) {
        return QRF(0, 0, RatFunc::constant(c), omega);
    }

    const Rational& xpow() const { return xpow_; }
    const Rational& gauss() const { return gauss_; }
    const RatFunc& rat() const { return rat_; }
    const Rational& omega() const { return omega_; }
    bool is_zero() const { return rat_.is_zero(); }

    /// d/dx, using dz/dx = omega x = 2z/x:
    /// (p, q, R) -> (p-1, q, p R + 4 q z R + 2 z R').
    QRF derivative() const {
        if (is_zero()) return *this;
        RatFunc z = RatFunc::from_poly(Poly::identity());
        RatFunc r = xpow_ * rat_ + (4 * gauss_) * z * rat_ + Rational(2) * z * rat_.derivative();
        return QRF(xpow_ - 1, gauss_, std::move(r), omega_);
    }

    friend QRF operator*(const QRF& a, const QRF& b) {
        check_omega(a, b);
        if (a.is_zero() || b.is_zero()) return zero(a.omega_);
        return QRF(a.xpow_ + b.xpow_, a.gauss_ + b.gauss_, a.rat_ * b.rat_, a.omega_);
    }
    friend QRF operator/(const QRF& a, const QRF& b) {
        check_omega(a, b);
        if (b.is_zero()) throw ZeroPolynomial("division by zero QRF");
        if (a.is_zero()) return zero(a.omega_);
        return QRF(a.xpow_ - b.xpow_, a.gauss_ - b.gauss_, a.rat_ / b.rat_, a.omega_);
    }
    friend QRF operator*(const Rational& s, const QRF& f) {
        if (s == 0) return zero(f.omega_);
        return QRF(f.xpow_, f.gauss_, s * f.rat_, f.omega_);
    }
    friend QRF operator*(const QRF& f, const Rational& s) { return s * f; }
    QRF operator-() const { return Rational(-1) * (*this); }

    /// Addition requires matching Gaussian factors and an even-integer
    /// difference of x-powers; anything else is a structural error.
    friend QRF operator+(const QRF& a, const QRF& b) {
        check_omega(a, b);
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.gauss_ != b.gauss_)
            throw StructuralError("QRF sum with mismatched Gaussian factors");
        Rational diff = b.xpow_ - a.xpow_;
        if (!is_integer(diff) || !is_even(diff))
            throw StructuralError("QRF sum with x-power difference not an even integer");
        const QRF& lo = (a.xpow_ <= b.xpow_) ? a : b;
        const QRF& hi = (a.xpow_ <= b.xpow_) ? b : a;
        long d = half_integer_steps(hi.xpow_ - lo.xpow_);
        // x^{2d} = (2 z / omega)^d
        RatFunc shift = RatFunc::from_poly(
            Poly::monomial(static_cast<unsigned>(d), rat_pow(Rational(2) / lo.omega_, d)));
        return QRF(lo.xpow_, lo.gauss_, lo.rat_ + shift * hi.rat_, lo.omega_);
    }
    friend QRF operator-(const QRF& a, const QRF& b) { return a + (-b); }

    friend bool operator==(const QRF& a, const QRF& b) {
        if (a.is_zero() && b.is_zero()) return true;
        if (a.is_zero() || b.is_zero()) return false;
        if (a.omega_ != b.omega_ || a.gauss_ != b.gauss_) return false;
        Rational diff = b.xpow_ - a.xpow_;
        if (!is_integer(diff) || !is_even(diff)) return false;
        return (a - b).is_zero();
    }

    /// Reduce to a rational function of z; valid when gauss = 0 and the
    /// x-power is an even integer 2k (x^{2k} = (2z/omega)^k).
    RatFunc to_ratfunc_z() const {
        if (is_zero()) return RatFunc();
        if (gauss_ != 0)
            throw StructuralError("QRF with Gaussian factor is not rational in z");
        if (!is_integer(xpow_) || !is_even(xpow_))
            throw StructuralError("QRF with odd/non-integer x-power is not rational in z");
        long k = half_integer_steps(xpow_);
        RatFunc zk = RatFunc::from_poly(Poly::identity()) * (Rational(2) / omega_);
        RatFunc acc = rat_;
        for (long i = 0; i < k; ++i) acc = acc * zk;
        for (long i = 0; i > k; --i) acc = acc / zk;
        return acc;
    }

    std::optional<Rational> constant_value() const {
        if (is_zero()) return Rational(0);
        if (gauss_ != 0) return std::nullopt;
        if (!is_integer(xpow_) || !is_even(xpow_)) return std::nullopt;
        RatFunc r = to_ratfunc_z();
        if (!r.is_constant()) return std::nullopt;
        return r.constant_value();
    }

    double eval(double x) const {
        if (is_zero()) return 0.0;
        double z = to_double(omega_) * x * x / 2;
        return std::pow(x, to_double(xpow_)) * std::exp(2 * to_double(gauss_) * z) * rat_.eval(z);
    }

private:
    static void check_omega(const QRF& a, const QRF& b) {
        if (a.omega_ != b.omega_) throw StructuralError("QRF omega mismatch");
    }
    static bool is_even(const Rational& r) {
        return is_integer(r) && numerator(r) % 2 == 0;
    }
    static long half_integer_steps(const Rational& r) {
        return (numerator(r) / 2).convert_to<long>();
    }

    Rational xpow_;
    Rational gauss_;
    RatFunc rat_;
    Rational omega_;
};

/// Superpotential W = -phi'/phi of a seed; the Gaussian factors cancel.
inline QRF superpotential(const QRF& phi) {
    if (phi.is_zero()) throw DegenerateSeed("superpotential of the zero seed");
    return -(phi.derivative() / phi);
}

/// Descriptor of a radial-oscillator-type potential
///   V(x) = omega^2 x^2 / 4 + l(l+1)/x^2 + rat(z) + constant.
struct Potential {
    Rational omega;
    Rational l;          // angular momentum; rational so l' bookkeeping stays exact
    RatFunc rat;         // rational-in-z deformation, may be zero
    Rational constant{0};

    static Potential bare(const Rational& omega, const Rational& l) {
        return Potential{omega, l, RatFunc(), Rational(0)};
    }

    /// The potential itself as a QRF (gauss = 0, even x-powers only).
    QRF as_qrf() const {
        QRF osc(2, 0, RatFunc::constant(omega * omega / 4), omega);
        QRF acc = osc;
        if (l != 0 && l != -1)
            acc = acc + QRF(-2, 0, RatFunc::constant(l * (l + 1)), omega);
        if (!rat.is_zero()) acc = acc + QRF(0, 0, rat, omega);
        if (constant != 0) acc = acc + QRF::constant(constant, omega);
        return acc;
    }

    double eval(double x) const {
        double w = to_double(omega), ll = to_double(l);
        double z = w * x * x / 2;
        double v = w * w * x * x / 4 + ll * (ll + 1) / (x * x) + to_double(constant);
        if (!rat.is_zero()) v += rat.eval(z);
        return v;
    }
};

/// (-d^2/dx^2 + V) f, exactly, within the QRF algebra.
inline QRF apply_schrodinger(const Potential& V, const QRF& f) {
    if (f.is_zero()) return f;
    QRF second = f.derivative().derivative();
    QRF vf = QRF(2, 0, RatFunc::constant(V.omega * V.omega / 4), V.omega) * f;
    if (V.l != 0 && V.l != -1)
        vf = vf + QRF(-2, 0, RatFunc::constant(V.l * (V.l + 1)), V.omega) * f;
    if (!V.rat.is_zero()) vf = vf + QRF(0, 0, V.rat, V.omega) * f;
    if (V.constant != 0) vf = vf + V.constant * f;
    return vf - second;
}

/// True iff f solves (-d^2/dx^2 + V) f = E f exactly.
inline bool is_eigenfunction(const Potential& V, const QRF& f, const Rational& E) {
    return (apply_schrodinger(V, f) - E * f).is_zero();
}

} // namespace xlag

#endif
