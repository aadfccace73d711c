#ifndef XLAG_QUADRATURE_HPP
#define XLAG_QUADRATURE_HPP

#include <algorithm>
#include <cmath>
#include <numeric>

#include "xlag/eop.hpp"
#include "xlag/tridiag.hpp"

namespace xlag {

struct QuadRule {
    std::vector<double> nodes;
    std::vector<double> weights;  // include the z^alpha e^{-z} factor
};

/// Generalized Gauss-Laguerre rule for weight z^alpha e^{-z} on (0, inf),
/// by Golub-Welsch on the Jacobi matrix:
///   a_i = 2i + alpha + 1,  b_i = sqrt((i+1)(i+1+alpha)),
/// weights = Gamma(alpha+1) * (first eigenvector component)^2.
inline QuadRule gauss_laguerre(int n, double alpha) {
    if (n < 1) throw ConstraintViolation("quadrature needs at least one node");
    std::vector<double> diag(n), off(n > 1 ? n - 1 : 0);
    for (int i = 0; i < n; ++i) diag[i] = 2.0 * i + alpha + 1.0;
    for (int i = 0; i + 1 < n; ++i) off[i] = std::sqrt((i + 1.0) * (i + 1.0 + alpha));
    std::vector<double> values, row0;
    tridiag_ql_first_row(diag, off, values, row0);
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    QuadRule rule;
    rule.nodes.reserve(values.size());
    rule.weights.reserve(values.size());
    double mu0 = std::tgamma(alpha + 1.0);
    for (std::size_t i : order) {
        rule.nodes.push_back(values[i]);
        rule.weights.push_back(mu0 * row0[i] * row0[i]);
    }
    return rule;
}

/// Integral of y1 y2 z^alpha e^{-z} / g^2 over (0, inf).
inline double eop_inner_product(const EopFamily& fam, const Poly& y1, const Poly& y2, int nodes) {
    QuadRule rule = gauss_laguerre(nodes, to_double(fam.alpha));
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        double z = rule.nodes[i];
        double g = fam.g.eval(z);
        if (std::abs(g) < 1e-12 * std::max(1.0, fam.g.eval_abs(z)))
            throw PoleEncountered("g vanishes at a quadrature node");
        acc += rule.weights[i] * y1.eval(z) * y2.eval(z) / (g * g);
    }
    return acc;
}

/// Inner product with a doubled-node convergence certificate: converged when
/// the two values agree to rel_tol relative to sqrt(norm1 * norm2).
inline double orthogonality_integral(const EopFamily& fam, const Poly& y1, const Poly& y2,
                                     int quad_nodes, double rel_tol = 1e-10) {
    double norm_scale = std::sqrt(eop_inner_product(fam, y1, y1, 2 * quad_nodes) *
                                  eop_inner_product(fam, y2, y2, 2 * quad_nodes));
    int n = quad_nodes;
    double prev = eop_inner_product(fam, y1, y2, n);
    for (int round = 0; round < 6; ++round) {
        n *= 2;
        double cur = eop_inner_product(fam, y1, y2, n);
        if (std::abs(cur - prev) <= rel_tol * norm_scale) return cur;
        prev = cur;
    }
    throw QuadratureNonConvergence("inner product did not stabilize under node doubling");
}

/// Unnormalized bound-state wavefunction eta_l(z) y(z) / g(z),
/// eta_l(z) = z^{(2 alpha + 1)/4} e^{-z/2}, z = omega x^2/2.
inline double wavefunction(const EopFamily& fam, const Poly& y, const Rational& omega, double x) {
    double z = to_double(omega) * x * x / 2;
    double g = fam.g.eval(z);
    if (std::abs(g) < 1e-12 * std::max(1.0, fam.g.eval_abs(z)))
        throw PoleEncountered("g vanishes at x = " + std::to_string(x));
    double a = to_double(fam.alpha);
    return std::pow(z, (2 * a + 1) / 4) * std::exp(-z / 2) * y.eval(z) / g;
}

/// Classical Laguerre norm Gamma(n+alpha+1)/n! (control value for g = 1).
inline double laguerre_norm(int n, double alpha) {
    return std::exp(std::lgamma(n + alpha + 1.0) - std::lgamma(n + 1.0));
}

} // namespace xlag

#endif
