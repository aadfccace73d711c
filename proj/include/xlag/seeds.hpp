#ifndef XLAG_SEEDS_HPP
#define XLAG_SEEDS_HPP

#include "xlag/laguerre.hpp"
#include "xlag/qrf.hpp"

namespace xlag {

enum class SeedKind { TypeI, TypeII };

struct SeedSpec {
    SeedKind kind;
    int l;          // angular momentum of the potential the seed solves
    int m;          // Laguerre index
    Rational omega;
};

struct Seed {
    QRF phi;
    Rational energy;
};

inline Rational alpha_of(int l) { return Rational(2 * l + 1, 2); }

/// Non-normalizable seed solutions of the radial oscillator V_l:
///   type I :  x^{l+1} e^{+omega x^2/4} L_m^(alpha)(-z),  E = -omega(alpha+2m+1)
///   type II:  x^{-l}  e^{-omega x^2/4} L_m^(-alpha)(z),  E = -omega(alpha-2m-1)
/// Type II requires alpha > m.
inline Seed make_seed(const SeedSpec& s) {
    if (s.l < 0 || s.m < 0) throw ConstraintViolation("seed requires l >= 0 and m >= 0");
    if (s.omega <= 0) throw ConstraintViolation("seed requires omega > 0");
    Rational alpha = alpha_of(s.l);
    if (s.kind == SeedKind::TypeI) {
        QRF phi(Rational(s.l + 1), Rational(1, 4),
                RatFunc::from_poly(laguerre_neg(s.m, alpha)), s.omega);
        return {phi, -s.omega * (alpha + 2 * s.m + 1)};
    }
    if (alpha <= s.m)
        throw ConstraintViolation("type II seed requires alpha = l + 1/2 > m");
    QRF phi(Rational(-s.l), Rational(-1, 4),
            RatFunc::from_poly(laguerre(s.m, -alpha)), s.omega);
    return {phi, -s.omega * (alpha - 2 * s.m - 1)};
}

} // namespace xlag

#endif
