#ifndef XLAG_SCHRODINGER_HPP
#define XLAG_SCHRODINGER_HPP

#include <span>

#include "xlag/qrf.hpp"
#include "xlag/tridiag.hpp"

namespace xlag {

struct SolverConfig {
    double x_max = 12.0;     // in units of omega^{-1/2}; scaled by omega internally
    int n_points = 4000;
    bool extrapolate = true;
    int n_eigen = 5;

    void validate() const {
        if (x_max <= 0) throw ConstraintViolation("x_max must be > 0");
        if (n_points < 100) throw ConstraintViolation("n_points must be >= 100");
        if (n_eigen < 1) throw ConstraintViolation("n_eigen must be >= 1");
    }
    double domain_length(const Rational& omega) const {
        return x_max / std::sqrt(to_double(omega));
    }
};

struct SpectrumReport {
    std::vector<double> eigenvalues;
    std::vector<Rational> formula_values;  // filled by callers that know the formula
    double max_rel_error = 0.0;
};

/// Evaluates the potential on a grid, guarding against denominator zeros
/// (admissible g never has one; tripping this signals a construction bug).
inline std::vector<double> sample_potential(const Potential& V, std::span<const double> xs) {
    std::vector<double> out(xs.size());
    const Poly& den = V.rat.den();
    double w = to_double(V.omega);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double z = w * xs[i] * xs[i] / 2;
        if (!V.rat.is_zero()) {
            double scale = den.eval_abs(z);
            if (std::abs(den.eval(z)) < 1e-12 * std::max(1.0, scale))
                throw PoleEncountered("potential denominator vanishes near x = " +
                                      std::to_string(xs[i]));
        }
        out[i] = V.eval(xs[i]);
    }
    return out;
}

namespace detail {

inline std::vector<double> fd_eigenvalues(const Potential& V, double x_max,
                                          int n_points, int n_eigen) {
    double h = x_max / (n_points + 1);
    std::vector<double> xs(n_points);
    for (int j = 0; j < n_points; ++j) xs[j] = (j + 1) * h;
    std::vector<double> vs = sample_potential(V, xs);
    std::vector<double> diag(n_points), off(n_points - 1, -1.0 / (h * h));
    for (int j = 0; j < n_points; ++j) diag[j] = 2.0 / (h * h) + vs[j];
    return tridiag_smallest_eigenvalues(diag, off, static_cast<std::size_t>(n_eigen));
}

} // namespace detail

/// Dirichlet finite-difference eigensolve on (0, x_max]. With extrapolation,
/// Richardson-combines the h and h/2 grids (error model h^2).
inline SpectrumReport eig_solve(const Potential& V, const SolverConfig& cfg) {
    cfg.validate();
    double x_max = cfg.domain_length(V.omega);
    std::vector<double> coarse = detail::fd_eigenvalues(V, x_max, cfg.n_points, cfg.n_eigen);
    SpectrumReport rep;
    if (!cfg.extrapolate) {
        rep.eigenvalues = std::move(coarse);
        return rep;
    }
    // 2n+1 interior points exactly halve the spacing
    std::vector<double> fine =
        detail::fd_eigenvalues(V, x_max, 2 * cfg.n_points + 1, cfg.n_eigen);
    rep.eigenvalues.resize(coarse.size());
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        if (std::abs(fine[i] - coarse[i]) > 1e-3)
            throw ConvergenceFailure("two-grid eigenvalue estimates differ by " +
                                     std::to_string(std::abs(fine[i] - coarse[i])));
        rep.eigenvalues[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    }
    return rep;
}

/// Interior sign changes of the nu-th finite-difference eigenfunction.
inline int eigenfunction_sign_changes(const Potential& V, const SolverConfig& cfg, int nu) {
    cfg.validate();
    double x_max = cfg.domain_length(V.omega);
    int n = cfg.n_points;
    double h = x_max / (n + 1);
    std::vector<double> xs(n);
    for (int j = 0; j < n; ++j) xs[j] = (j + 1) * h;
    std::vector<double> vs = sample_potential(V, xs);
    std::vector<double> diag(n), off(n - 1, -1.0 / (h * h));
    for (int j = 0; j < n; ++j) diag[j] = 2.0 / (h * h) + vs[j];
    auto eigs = tridiag_smallest_eigenvalues(diag, off, static_cast<std::size_t>(nu) + 1);
    auto v = tridiag_eigenvector(diag, off, eigs.back());
    double peak = 0.0;
    for (double c : v) peak = std::max(peak, std::abs(c));
    int changes = 0;
    int prev = 0;
    for (double c : v) {
        if (std::abs(c) < 1e-8 * peak) continue;  // ignore tail noise
        int s = c > 0 ? 1 : -1;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

} // namespace xlag

#endif
