#pragma once

// Exact arithmetic in Q(zeta_m) with the embedding zeta -> e^{2 pi i / m}, and
// certified signs of real elements.

#include "numeric.hpp"
#include "poly.hpp"

#include <cmath>
#include <numeric>
#include <complex>
#include <memory>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace dslice {

/// omega = e^{2 pi i k / m} with 0 < k < m and gcd(k, m) = 1.
class RootOfUnity {
public:
    RootOfUnity(long k, long m) {
        if (m <= 0) throw Error("root of unity: order must be positive");
        k %= m;
        if (k < 0) k += m;
        if (k == 0) throw Error("root of unity: omega = 1 is excluded");
        long g = std::gcd(k, m);
        k_ = k / g;
        m_ = m / g;
    }

    long k() const { return k_; }
    long m() const { return m_; }
    Rational turn() const { return Rational(k_, m_); }
    RootOfUnity conjugate() const { return {m_ - k_, m_}; }
    std::complex<double> value() const {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(m_);
        return {std::cos(theta), std::sin(theta)};
    }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
    friend bool operator<(const RootOfUnity& a, const RootOfUnity& b) { return a.turn() < b.turn(); }

private:
    long k_ = 1;
    long m_ = 2;
};

inline std::string to_string(const RootOfUnity& w) { return std::to_string(w.k()) + "/" + std::to_string(w.m()); }

/// Parses `k/m`.
inline RootOfUnity parse_root_of_unity(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) throw Error("root of unity must be written k/m, got '" + text + "'");
    try {
        std::size_t used1 = 0, used2 = 0;
        long k = std::stol(text.substr(0, slash), &used1);
        long m = std::stol(text.substr(slash + 1), &used2);
        if (used1 != slash || used2 != text.size() - slash - 1) throw Error("trailing characters");
        return {k, m};
    } catch (const std::logic_error&) {
        throw Error("root of unity must be written k/m, got '" + text + "'");
    }
}

class CyclotomicField {
public:
    explicit CyclotomicField(unsigned long m) : m_(m), phi_(euler_phi(m)), modulus_(cyclotomic_polynomial(m)) {
        if (m_ >= 3) setup_real_embedding();
    }

    static std::shared_ptr<const CyclotomicField> make(unsigned long m) {
        return std::make_shared<const CyclotomicField>(m);
    }

    unsigned long order() const { return m_; }
    unsigned long degree() const { return phi_; }
    const RationalPoly& modulus() const { return modulus_; }

    /// Remainder mod Phi_m: exponents are first folded mod m (zeta^m = 1), then a monic
    /// long division finishes the job without any coefficient division.
    RationalPoly reduce(const RationalPoly& p) const {
        if (p.degree() < static_cast<long>(phi_)) return p;
        std::vector<Rational> c(std::min<std::size_t>(p.coeffs().size(), m_), Rational(0));
        for (std::size_t i = 0; i < p.coeffs().size(); ++i)
            if (p.coeffs()[i] != 0) c[i % m_] += p.coeffs()[i];
        const auto& q = modulus_.coeffs();
        for (std::size_t top = c.size(); top-- > phi_;) {
            if (c[top] == 0) continue;
            const Rational lead = c[top];
            for (std::size_t k = 0; k < phi_; ++k)
                if (q[k] != 0) c[top - phi_ + k] -= lead * q[k];
            c[top] = 0;
        }
        c.resize(std::min(c.size(), phi_));
        return RationalPoly(std::move(c));
    }

    /// zeta^j, reduced.
    RationalPoly zeta_power(long j) const {
        long e = j % static_cast<long>(m_);
        if (e < 0) e += static_cast<long>(m_);
        return power_mod(static_cast<unsigned long>(e));
    }

    RationalPoly inverse(const RationalPoly& a) const {
        if (a.is_zero()) throw Error("division by zero in cyclotomic field");
        auto [g, u] = poly_half_gcdex(a, modulus_);
        if (g.degree() != 0) throw Error("element is not invertible");
        return reduce(u);
    }

    /// zeta -> zeta^-1 = zeta^(m-1).
    RationalPoly conjugate(const RationalPoly& a) const {
        if (m_ <= 2 || a.degree() <= 0) return a;
        std::vector<Rational> c(m_, Rational(0));
        for (std::size_t i = 0; i < a.coeffs().size(); ++i) c[(m_ - i % m_) % m_] += a.coeffs()[i];
        return reduce(RationalPoly(std::move(c)));
    }

    /// Sign of a real element under the designated embedding, certified by
    /// interval refinement of c = 2cos(2 pi / m).
    int real_sign(const RationalPoly& a) const {
        if (a.is_zero()) return 0;
        if (m_ <= 2) return sign(a.coeffs().front());
        // a(zeta) = a_0 + 1/2 sum_k a_k C_k(c) where C_k(c) = 2cos(2 pi k/m).
        RationalPoly g = RationalPoly::constant(a.coeff(0));
        for (std::size_t k = 1; k < a.coeffs().size(); ++k)
            g = g + RationalPoly::constant(a.coeffs()[k] / 2) * chebyshev(k);
        if (g.is_zero()) throw Error("real_sign: element is not real");
        if (real_min_poly_.degree() == 1) {
            Rational c = -real_min_poly_.coeff(0) / real_min_poly_.coeff(1);
            int s = sign(g.evaluate(c));
            if (s == 0) throw Error("real_sign: element is not real");
            return s;
        }
        Rational lo = lo_, hi = hi_;
        int s_lo = sign(real_min_poly_.evaluate(lo));
        for (int iter = 0; iter < 4096; ++iter) {
            auto [vlo, vhi] = interval_eval(g, lo, hi);
            if (vlo > 0) return 1;
            if (vhi < 0) return -1;
            Rational mid = (lo + hi) / 2;
            int s_mid = sign(real_min_poly_.evaluate(mid));
            if (s_mid == s_lo) lo = mid;
            else hi = mid;
        }
        throw Error("real_sign: refinement did not separate the value from zero");
    }

    /// Numerical value of an element under the embedding.
    std::complex<double> embed(const RationalPoly& a) const {
        std::complex<double> z = std::polar(1.0, 2.0 * std::numbers::pi / static_cast<double>(m_)), acc = 0;
        for (long i = a.degree(); i >= 0; --i) acc = acc * z + to_double(a.coeffs()[static_cast<std::size_t>(i)]);
        return acc;
    }

    /// Minimal polynomial of 2cos(2 pi/m) (m >= 3).
    const RationalPoly& real_minimal_polynomial() const { return real_min_poly_; }

private:
    RationalPoly power_mod(unsigned long e) const {
        RationalPoly result = reduce(RationalPoly::constant(Rational(1)));
        RationalPoly base = reduce(RationalPoly::monomial(Rational(1), 1));
        while (e) {
            if (e & 1) result = reduce(result * base);
            base = reduce(base * base);
            e >>= 1;
        }
        return result;
    }

    // C_0 = 2, C_1 = c, C_{k+1} = c C_k - C_{k-1}.
    const RationalPoly& chebyshev(std::size_t k) const {
        return chebyshev_.at(k);
    }

    void setup_real_embedding() {
        const std::size_t half = phi_ / 2;
        const RationalPoly c = RationalPoly::monomial(Rational(1), 1);
        chebyshev_.push_back(RationalPoly::constant(Rational(2)));
        chebyshev_.push_back(c);
        for (std::size_t k = 2; k < std::max<std::size_t>(phi_, half + 1); ++k)
            chebyshev_.push_back(c * chebyshev_[k - 1] - chebyshev_[k - 2]);
        // x^-h Phi_m(x) = p_h + sum_j p_{h+j} (x^j + x^-j), and x^j + x^-j = C_j(c).
        real_min_poly_ = RationalPoly::constant(modulus_.coeff(half));
        for (std::size_t j = 1; j <= half; ++j)
            real_min_poly_ = real_min_poly_ + RationalPoly::constant(modulus_.coeff(half + j)) * chebyshev_[j];
        if (real_min_poly_.degree() <= 1) return;

        // c = 2cos(2 pi/m) is the largest conjugate; the next one sits at 2cos(2 pi j/m)
        // for the next unit j. Bracket c between the midpoint and 2.
        const double tau = 2.0 * std::numbers::pi / static_cast<double>(m_);
        unsigned long next = 2;
        while (std::gcd(next, m_) != 1) ++next;
        const double c0 = 2.0 * std::cos(tau), c1 = 2.0 * std::cos(tau * static_cast<double>(next));
        lo_ = rational_from_double(c0 - (c0 - c1) / 2);
        hi_ = Rational(2);
        if (sign(real_min_poly_.evaluate(lo_)) * sign(real_min_poly_.evaluate(hi_)) >= 0)
            throw Error("failed to isolate 2cos(2pi/m) for m = " + std::to_string(m_));
        // Narrow the bracket once so that most sign queries need a single evaluation.
        const int s_lo = sign(real_min_poly_.evaluate(lo_));
        for (int iter = 0; iter < 64; ++iter) {
            Rational mid = (lo_ + hi_) / 2;
            // irreducible of degree >= 2, so never zero at a rational point
            (sign(real_min_poly_.evaluate(mid)) == s_lo ? lo_ : hi_) = mid;
        }
    }

    static std::pair<Rational, Rational> interval_eval(const RationalPoly& g, const Rational& lo,
                                                       const Rational& hi) {
        Rational rlo = 0, rhi = 0;
        for (long i = g.degree(); i >= 0; --i) {
            // [rlo, rhi] * [lo, hi]
            Rational p1 = rlo * lo, p2 = rlo * hi, p3 = rhi * lo, p4 = rhi * hi;
            rlo = std::min({p1, p2, p3, p4});
            rhi = std::max({p1, p2, p3, p4});
            const Rational& c = g.coeffs()[static_cast<std::size_t>(i)];
            rlo += c;
            rhi += c;
        }
        return {rlo, rhi};
    }

    unsigned long m_;
    unsigned long phi_;
    RationalPoly modulus_;
    RationalPoly real_min_poly_;
    std::vector<RationalPoly> chebyshev_;
    Rational lo_, hi_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_m). A null field marks a rational constant usable in any field.
class CyclotomicElement {
public:
    CyclotomicElement() = default;
    CyclotomicElement(long v) : value_(RationalPoly::constant(Rational(v))) {}  // NOLINT
    CyclotomicElement(const Rational& v) : value_(RationalPoly::constant(v)) {}  // NOLINT
    CyclotomicElement(const Integer& v) : value_(RationalPoly::constant(Rational(v))) {}  // NOLINT
    CyclotomicElement(FieldPtr field, RationalPoly value)
        : field_(std::move(field)), value_(field_ ? field_->reduce(value) : std::move(value)) {}

    static CyclotomicElement zeta_power(const FieldPtr& field, long j) { return {field, field->zeta_power(j)}; }

    const FieldPtr& field() const { return field_; }
    const RationalPoly& value() const { return value_; }
    bool is_zero() const { return value_.is_zero(); }
    bool is_rational() const { return value_.degree() <= 0; }
    Rational rational_value() const {
        if (!is_rational()) throw Error("element is not rational");
        return value_.coeff(0);
    }

    CyclotomicElement conjugate() const {
        if (!field_) return *this;
        return {field_, field_->conjugate(value_)};
    }
    bool is_real() const { return conjugate() == *this; }
    int sign() const {
        if (is_rational()) return dslice::sign(value_.coeff(0));
        if (!is_real()) throw Error("sign of a non-real cyclotomic element");
        return field_->real_sign(value_);
    }
    CyclotomicElement inverse() const {
        if (is_zero()) throw Error("division by zero in cyclotomic field");
        if (is_rational()) return {field_, RationalPoly::constant(Rational(1) / value_.coeff(0))};
        return {field_, field_->inverse(value_)};
    }
    std::complex<double> embed() const {
        if (!field_) return to_double(value_.coeff(0));
        return field_->embed(value_);
    }

    friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) { return a.value_ == b.value_; }

    CyclotomicElement operator-() const { return {field_, -value_}; }
    friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
        return {join(a, b), a.value_ + b.value_};
    }
    friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
        return {join(a, b), a.value_ - b.value_};
    }
    friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
        return {join(a, b), a.value_ * b.value_};
    }
    friend CyclotomicElement operator/(const CyclotomicElement& a, const CyclotomicElement& b) {
        return a * b.inverse();
    }
    CyclotomicElement& operator+=(const CyclotomicElement& o) { return *this = *this + o; }
    CyclotomicElement& operator-=(const CyclotomicElement& o) { return *this = *this - o; }
    CyclotomicElement& operator*=(const CyclotomicElement& o) { return *this = *this * o; }

private:
    static FieldPtr join(const CyclotomicElement& a, const CyclotomicElement& b) {
        if (a.field_ && b.field_ && a.field_->order() != b.field_->order())
            throw Error("cyclotomic elements from different fields");
        return a.field_ ? a.field_ : b.field_;
    }

    FieldPtr field_;
    RationalPoly value_;
};

inline std::string to_string(const CyclotomicElement& e) {
    if (e.is_rational()) return to_string(e.rational_value());
    return "(" + to_string(e.value(), "z") + ")";
}

}  // namespace dslice
