#ifndef XLAG_TRIDIAG_HPP
#define XLAG_TRIDIAG_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "xlag/errors.hpp"

namespace xlag {

/// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off)
/// strictly below lambda, by the LDL^T sign count.
inline std::size_t tridiag_count_below(const std::vector<double>& diag,
                                       const std::vector<double>& off, double lambda) {
    const double tiny = 1e-300;
    std::size_t count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double b2 = i == 0 ? 0.0 : off[i - 1] * off[i - 1];
        d = (diag[i] - lambda) - b2 / d;
        if (d == 0.0) d = tiny;
        if (d < 0.0) ++count;
    }
    return count;
}

/// The k smallest eigenvalues, by bisection on the Sturm count.
inline std::vector<double> tridiag_smallest_eigenvalues(const std::vector<double>& diag,
                                                        const std::vector<double>& off,
                                                        std::size_t k) {
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < diag.size(); ++i) {
        double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) +
                   (i + 1 < diag.size() ? std::abs(off[i]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    std::vector<double> eigs(k);
    for (std::size_t j = 0; j < k; ++j) {
        double a = lo, b = hi;
        for (int it = 0; it < 200 && (b - a) > 1e-13 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
            double mid = 0.5 * (a + b);
            if (tridiag_count_below(diag, off, mid) >= j + 1) b = mid;
            else a = mid;
        }
        eigs[j] = 0.5 * (a + b);
    }
    return eigs;
}

/// Eigenvector for a known eigenvalue, by inverse iteration with a tridiagonal
/// solve (partial pivoting between adjacent rows).
inline std::vector<double> tridiag_eigenvector(const std::vector<double>& diag,
                                               const std::vector<double>& off,
                                               double lambda) {
    const std::size_t n = diag.size();
    // shift slightly off the eigenvalue so the solve stays finite
    double scale = 0.0;
    for (double d : diag) scale = std::max(scale, std::abs(d));
    double shifted = lambda + 1e-11 * (1.0 + scale);

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int sweep = 0; sweep < 3; ++sweep) {
        // solve (T - shifted I) u = v by Gaussian elimination with row swaps
        std::vector<double> a(n), b(n > 1 ? n - 1 : 0), c(n > 1 ? n - 1 : 0),
            d2(n > 2 ? n - 2 : 0, 0.0), rhs = v;
        for (std::size_t i = 0; i < n; ++i) a[i] = diag[i] - shifted;
        for (std::size_t i = 0; i + 1 < n; ++i) { b[i] = off[i]; c[i] = off[i]; }
        for (std::size_t i = 0; i + 1 < n; ++i) {
            if (std::abs(c[i]) > std::abs(a[i])) {
                std::swap(a[i], c[i]);
                std::swap(b[i], a[i + 1]);
                if (i + 2 < n) std::swap(d2[i], b[i + 1]);
                std::swap(rhs[i], rhs[i + 1]);
            }
            if (a[i] == 0.0) a[i] = 1e-300;
            double m = c[i] / a[i];
            a[i + 1] -= m * b[i];
            if (i + 2 < n) b[i + 1] -= m * d2[i];
            rhs[i + 1] -= m * rhs[i];
        }
        if (a[n - 1] == 0.0) a[n - 1] = 1e-300;
        std::vector<double> u(n);
        u[n - 1] = rhs[n - 1] / a[n - 1];
        if (n > 1) u[n - 2] = (rhs[n - 2] - b[n - 2] * u[n - 1]) / a[n - 2];
        for (std::size_t ii = n; ii-- > 2;) {
            std::size_t i = ii - 2;
            u[i] = (rhs[i] - b[i] * u[i + 1] - (i + 2 < n ? d2[i] * u[i + 2] : 0.0)) / a[i];
        }
        double norm = 0.0;
        for (double x : u) norm += x * x;
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / norm;
    }
    return v;
}

/// Full symmetric tridiagonal eigensystem returning only eigenvalues and
/// the first row of the eigenvector matrix (all the Golub-Welsch step needs).
/// Implicit-shift QL; the first-row vector rides along the rotations.
inline void tridiag_ql_first_row(std::vector<double> diag, std::vector<double> off,
                                 std::vector<double>& values, std::vector<double>& first_row) {
    const std::size_t n = diag.size();
    std::vector<double> e(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) e[i] = off[i];
    std::vector<double> q0(n, 0.0);
    q0[0] = 1.0;

    for (std::size_t l = 0; l < n; ++l) {
        for (int iter = 0;; ++iter) {
            std::size_t m = l;
            for (; m + 1 < n; ++m) {
                double dd = std::abs(diag[m]) + std::abs(diag[m + 1]);
                if (std::abs(e[m]) <= 1e-16 * dd) break;
            }
            if (m == l) break;
            if (iter >= 50) throw ConvergenceFailure("QL iteration did not converge");
            double g = (diag[l + 1] - diag[l]) / (2.0 * e[l]);
            double r = std::hypot(g, 1.0);
            g = diag[m] - diag[l] + e[l] / (g + (g >= 0 ? std::abs(r) : -std::abs(r)));
            double s = 1.0, c = 1.0, p = 0.0;
            for (std::size_t i = m; i-- > l;) {
                double f = s * e[i], bb = c * e[i];
                r = std::hypot(f, g);
                e[i + 1] = r;
                if (r == 0.0) {
                    diag[i + 1] -= p;
                    e[m] = 0.0;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * bb;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - bb;
                double t = q0[i + 1];
                q0[i + 1] = s * q0[i] + c * t;
                q0[i] = c * q0[i] - s * t;
            }
            if (r == 0.0 && m > l + 1) continue;
            diag[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    values = std::move(diag);
    first_row = std::move(q0);
}

} // namespace xlag

#endif
