#pragma once

// Dense univariate polynomials over a field (in practice the rationals).

#include "numeric.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace dslice {

template <class T>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
    DensePoly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

    static DensePoly constant(T v) { return DensePoly(std::vector<T>{std::move(v)}); }
    static DensePoly monomial(T v, std::size_t degree) {
        std::vector<T> c(degree + 1, T(0));
        c[degree] = std::move(v);
        return DensePoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<T>& coeffs() const { return c_; }
    T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
    const T& leading() const { return c_.back(); }

    friend bool operator==(const DensePoly&, const DensePoly&) = default;

    DensePoly operator-() const {
        DensePoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend DensePoly operator+(const DensePoly& a, const DensePoly& b) {
        std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
        return DensePoly(std::move(c));
    }
    friend DensePoly operator-(const DensePoly& a, const DensePoly& b) { return a + (-b); }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        }
        return DensePoly(std::move(c));
    }
    friend DensePoly operator*(const T& s, const DensePoly& a) {
        return DensePoly::constant(s) * a;
    }

    /// Quotient and remainder; divisor must be nonzero.
    friend std::pair<DensePoly, DensePoly> divmod(const DensePoly& f, const DensePoly& d) {
        if (d.is_zero()) throw Error("polynomial division by zero");
        std::vector<T> rem = f.c_;
        if (f.degree() < d.degree()) return {DensePoly{}, f};
        std::vector<T> q(f.c_.size() - d.c_.size() + 1, T(0));
        const T& lead = d.c_.back();
        for (long i = static_cast<long>(q.size()) - 1; i >= 0; --i) {
            T factor = rem[i + d.c_.size() - 1] / lead;
            q[i] = factor;
            if (factor == 0) continue;
            for (std::size_t j = 0; j < d.c_.size(); ++j) rem[i + j] -= factor * d.c_[j];
        }
        rem.resize(d.c_.size() - 1);
        return {DensePoly(std::move(q)), DensePoly(std::move(rem))};
    }
    friend DensePoly operator%(const DensePoly& f, const DensePoly& d) { return divmod(f, d).second; }
    friend DensePoly operator/(const DensePoly& f, const DensePoly& d) { return divmod(f, d).first; }

    DensePoly monic() const {
        if (is_zero()) return {};
        DensePoly r = *this;
        T lead = leading();
        for (auto& x : r.c_) x /= lead;
        return r;
    }

    DensePoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<T> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * T(static_cast<long>(i));
        return DensePoly(std::move(d));
    }

    template <class U>
    U evaluate(const U& x) const {
        U acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + U(*it);
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<T> c_;
};

using RationalPoly = DensePoly<Rational>;

/// Monic gcd; gcd(0, 0) = 0.
template <class T>
DensePoly<T> poly_gcd(DensePoly<T> a, DensePoly<T> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, u) with u*a = g (mod m), g = gcd(a, m) monic.
template <class T>
std::pair<DensePoly<T>, DensePoly<T>> poly_half_gcdex(const DensePoly<T>& a, const DensePoly<T>& m) {
    DensePoly<T> r0 = m, r1 = a % m;
    DensePoly<T> u0{}, u1 = DensePoly<T>::constant(T(1));
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        auto u = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u);
    }
    T lead = r0.leading();
    return {r0.monic(), DensePoly<T>::constant(T(1) / lead) * u0};
}

/// Square-free part (over a characteristic-zero field).
template <class T>
DensePoly<T> squarefree_part(const DensePoly<T>& f) {
    if (f.degree() <= 0) return f.monic();
    return (f / poly_gcd(f, f.derivative())).monic();
}

inline std::string to_string(const RationalPoly& p, const std::string& var = "x") {
    if (p.is_zero()) return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (!unit || i == 0) out += to_string(mag);
        if (i >= 1) {
            if (!unit) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace detail {
inline int mobius(unsigned long n) {
    int result = 1;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}
}  // namespace detail

/// Cyclotomic polynomial Phi_n, integer coefficients stored as rationals.
inline RationalPoly cyclotomic_polynomial(unsigned long n) {
    if (n == 0) throw Error("cyclotomic_polynomial: order must be positive");
    // Phi_n = prod_{d | n} (x^d - 1)^{mu(n/d)}
    RationalPoly num = RationalPoly::constant(Rational(1));
    RationalPoly den = RationalPoly::constant(Rational(1));
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        int mu = detail::mobius(n / d);
        if (mu == 0) continue;
        RationalPoly f = RationalPoly::monomial(Rational(1), d) - RationalPoly::constant(Rational(1));
        if (mu > 0) num = num * f;
        else den = den * f;
    }
    return num / den;
}

inline unsigned long euler_phi(unsigned long n) {
    unsigned long result = n;
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace dslice
