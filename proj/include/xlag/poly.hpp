#ifndef XLAG_POLY_HPP
#define XLAG_POLY_HPP

#include <cmath>
#include <initializer_list>
#include <span>
#include <sstream>
#include <utility>
#include <vector>

#include "xlag/rational.hpp"

namespace xlag {

/// Dense univariate polynomial with exact rational coefficients.
/// coeffs()[k] is the coefficient of z^k; no trailing zeros are stored.
/// The zero polynomial has an empty coefficient vector and degree() == -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> cs) : coeffs_(std::move(cs)) { trim(); }
    Poly(std::initializer_list<Rational> cs) : coeffs_(cs) { trim(); }

    static Poly zero() { return Poly(); }
    static Poly constant(const Rational& c) { return Poly({c}); }
    static Poly identity() { return Poly({Rational(0), Rational(1)}); }  // z
    static Poly monomial(unsigned deg, const Rational& c = Rational(1)) {
        std::vector<Rational> cs(deg + 1);
        cs[deg] = c;
        return Poly(std::move(cs));
    }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational coeff(unsigned k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }
    Rational leading() const {
        if (is_zero()) throw ZeroPolynomial("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    /// Coefficient of the lowest nonzero power (sign of p(0+)).
    Rational trailing() const {
        if (is_zero()) throw ZeroPolynomial("trailing coefficient of zero polynomial");
        for (const auto& c : coeffs_)
            if (c != 0) return c;
        return Rational(0);  // unreachable
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) + b.coeff(i);
        return Poly(std::move(cs));
    }
    friend Poly operator-(const Poly& a, const Poly& b) {
        std::vector<Rational> cs(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < cs.size(); ++i) cs[i] = a.coeff(i) - b.coeff(i);
        return Poly(std::move(cs));
    }
    Poly operator-() const {
        std::vector<Rational> cs(coeffs_);
        for (auto& c : cs) c = -c;
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Rational& s, const Poly& p) {
        if (s == 0) return Poly();
        std::vector<Rational> cs(p.coeffs_);
        for (auto& c : cs) c *= s;
        return Poly(std::move(cs));
    }
    friend Poly operator*(const Poly& p, const Rational& s) { return s * p; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    Poly derivative() const {
        if (coeffs_.size() <= 1) return Poly();
        std::vector<Rational> cs(coeffs_.size() - 1);
        for (std::size_t k = 1; k < coeffs_.size(); ++k)
            cs[k - 1] = Rational(k) * coeffs_[k];
        return Poly(std::move(cs));
    }

    /// p(-z); an involution that flips the sign of odd-degree coefficients.
    Poly compose_neg() const {
        std::vector<Rational> cs(coeffs_);
        for (std::size_t k = 1; k < cs.size(); k += 2) cs[k] = -cs[k];
        return Poly(std::move(cs));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
    double eval(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + to_double(*it);
        return acc;
    }
    /// Sum of |c_k| x^k, a magnitude scale for relative pole tests.
    double eval_abs(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + std::abs(to_double(*it));
        return acc;
    }

    /// Scale to coprime integer coefficients with a positive leading one.
    Poly normalized() const {
        if (is_zero()) return Poly();
        Integer num_gcd(0), den_lcm(1);
        for (const auto& c : coeffs_) {
            if (c == 0) continue;
            num_gcd = boost::multiprecision::gcd(num_gcd, numerator(c));
            den_lcm = boost::multiprecision::lcm(den_lcm, denominator(c));
        }
        Rational scale = Rational(den_lcm) / Rational(num_gcd);
        if (leading() < 0) scale = -scale;
        return scale * (*this);
    }

    Poly monic() const {
        if (is_zero()) throw ZeroPolynomial("monic of zero polynomial");
        return (Rational(1) / leading()) * (*this);
    }

    std::string str(const std::string& var = "z") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (int k = degree(); k >= 0; --k) {
            const Rational c = coeff(k);
            if (c == 0) continue;
            if (!first) os << (c > 0 ? " + " : " - ");
            else if (c < 0) os << "-";
            first = false;
            Rational a = rat_abs(c);
            if (a != 1 || k == 0) os << to_string(a);
            if (k > 0) {
                if (a != 1) os << "*";
                os << var;
                if (k > 1) os << "^" << k;
            }
        }
        return os.str();
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// Euclidean division over the rational coefficient field.
inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by zero polynomial");
    std::vector<Rational> rem(a.coeffs());
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<Rational> quot(a.degree() - db + 1);
    for (int k = a.degree(); k >= db; --k) {
        Rational q = rem[k] / b.leading();
        if (q == 0) continue;
        quot[k - db] = q;
        for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeff(j);
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
}

/// Monic polynomial gcd (Euclid over the rational field).
inline Poly poly_gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return Poly();
    return a.monic();
}

inline Poly squarefree_part(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("squarefree part of zero polynomial");
    if (p.degree() == 0) return Poly::constant(Rational(1));
    Poly g = poly_gcd(p, p.derivative());
    return divmod(p, g).first;
}

/// k-ary Wronskian in z: det of the matrix whose row i holds the i-th
/// derivative of each input polynomial.
inline Poly wronskian(std::span<const Poly> fs) {
    const std::size_t k = fs.size();
    if (k == 0) throw Error("wronskian of empty list");
    // derivative table
    std::vector<std::vector<Poly>> d(k, std::vector<Poly>(k));
    for (std::size_t j = 0; j < k; ++j) {
        d[0][j] = fs[j];
        for (std::size_t i = 1; i < k; ++i) d[i][j] = d[i - 1][j].derivative();
    }
    // Laplace expansion; k <= 3 in practice so this stays cheap.
    std::vector<std::size_t> cols(k);
    for (std::size_t j = 0; j < k; ++j) cols[j] = j;
    struct Rec {
        const std::vector<std::vector<Poly>>& d;
        Poly expand(std::size_t row, std::vector<std::size_t>& cols) {
            if (cols.size() == 1) return d[row][cols[0]];
            Poly acc;
            for (std::size_t j = 0; j < cols.size(); ++j) {
                std::size_t c = cols[j];
                std::vector<std::size_t> rest;
                rest.reserve(cols.size() - 1);
                for (std::size_t t = 0; t < cols.size(); ++t)
                    if (t != j) rest.push_back(cols[t]);
                Poly sub = expand(row + 1, rest);
                Poly term = d[row][c] * sub;
                acc = (j % 2 == 0) ? acc + term : acc - term;
            }
            return acc;
        }
    } rec{d};
    return rec.expand(0, cols);
}

inline Poly wronskian(const Poly& f, const Poly& g) {
    const Poly fs[] = {f, g};
    return wronskian(std::span<const Poly>(fs, 2));
}

namespace detail {

inline int sign_at_zero_plus(const Poly& p) {
    return p.is_zero() ? 0 : sign(p.trailing());
}
inline int sign_at_infinity(const Poly& p) {
    return p.is_zero() ? 0 : sign(p.leading());
}

inline int sign_variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

} // namespace detail

/// Number of distinct real roots of p in the open interval (0, inf),
/// by a Sturm sequence of the square-free part evaluated at 0+ and +inf.
inline unsigned count_positive_roots(const Poly& p) {
    if (p.is_zero()) throw ZeroPolynomial("count_positive_roots of zero polynomial");
    Poly p0 = squarefree_part(p);
    if (p0.degree() <= 0) return 0;
    std::vector<Poly> chain{p0, p0.derivative()};
    while (!chain.back().is_zero()) {
        const Poly& a = chain[chain.size() - 2];
        const Poly& b = chain.back();
        chain.push_back(-divmod(a, b).second);
    }
    chain.pop_back();
    std::vector<int> at0, atinf;
    at0.reserve(chain.size());
    atinf.reserve(chain.size());
    for (const Poly& q : chain) {
        at0.push_back(detail::sign_at_zero_plus(q));
        atinf.push_back(detail::sign_at_infinity(q));
    }
    int v0 = detail::sign_variations(at0);
    int vinf = detail::sign_variations(atinf);
    return static_cast<unsigned>(v0 - vinf);
}

} // namespace xlag

#endif
