#ifndef XLAG_LAGUERRE_HPP
#define XLAG_LAGUERRE_HPP

#include "xlag/poly.hpp"

namespace xlag {

/// Generalized Laguerre polynomial L_n^(a)(z) with exact rational a,
/// from the explicit sum
///   L_n^(a)(z) = sum_{k=0}^{n} (-1)^k C(n+a, n-k) z^k / k!.
/// The generalized binomial is a falling-factorial product, so half-integer
/// (and negative) a are handled exactly.
inline Poly laguerre(unsigned n, const Rational& a) {
    std::vector<Rational> cs(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = binom(Rational(n) + a, n - k) / factorial(k);
        cs[k] = (k % 2 == 0) ? c : -c;
    }
    return Poly(std::move(cs));
}

/// L_n^(a)(-z).
inline Poly laguerre_neg(unsigned n, const Rational& a) {
    return laguerre(n, a).compose_neg();
}

/// Residual of the Laguerre ODE z y'' + (a+1-z) y' + n y; zero for y = L_n^(a).
inline Poly laguerre_ode_residual(const Poly& y, const Rational& a, unsigned n) {
    const Poly z = Poly::identity();
    return z * y.derivative().derivative()
         + (Poly::constant(a + 1) - z) * y.derivative()
         + Rational(n) * y;
}

} // namespace xlag

#endif
