#pragma once

// Levine-Tristram signatures sigma(omega) = sign((1 - omega) psi + (1 - conj(omega)) psi^T),
// signature profiles, the hyperbolicity obstruction and the Bing-double bound.

#include "cyclotomic.hpp"
#include "matrix.hpp"
#include "poly.hpp"
#include "seifert.hpp"

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dslice {

class UncertifiableSign : public Error {
public:
    using Error::Error;
};

/// Exact Hermitian matrix over Q(zeta_m).
struct HermitianMatrix {
    RootOfUnity omega;
    FieldPtr field;
    Matrix<CyclotomicElement> entries;

    std::size_t size() const { return entries.rows(); }

    bool is_hermitian() const {
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = 0; j < size(); ++j)
                if (!(entries(i, j).conjugate() == entries(j, i))) return false;
        return true;
    }
};

inline HermitianMatrix hermitian_matrix(const SeifertMatrix& m, const RootOfUnity& w) {
    auto field = CyclotomicField::make(static_cast<unsigned long>(w.m()));
    const CyclotomicElement one(1);
    const CyclotomicElement a = one - CyclotomicElement::zeta_power(field, w.k());
    const CyclotomicElement a_bar = one - CyclotomicElement::zeta_power(field, -w.k());
    const std::size_t n = m.size();
    Matrix<CyclotomicElement> h(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Integer& x = m.psi()(i, j);
            const Integer& y = m.psi()(j, i);
            h(i, j) = a * CyclotomicElement(x) + a_bar * CyclotomicElement(y);
        }
    return {w, field, std::move(h)};
}

/// Characteristic polynomial det(x I - A) of a square matrix over a commutative ring,
/// coefficients in ascending order (monic). Division free (Berkowitz).
template <class E>
std::vector<E> berkowitz_characteristic_polynomial(const Matrix<E>& a, const E& zero, const E& one) {
    const std::size_t n = a.rows();
    std::vector<E> p{one};  // descending while building
    for (std::size_t k = 1; k <= n; ++k) {
        const std::size_t r = k - 1;  // new row/column index
        // first Toeplitz column: 1, -a_rr, -row A^0 col, ..., -row A^{k-2} col
        std::vector<E> t{one, zero - a(r, r)};
        std::vector<E> v(r, zero);
        for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
        for (std::size_t j = 0; j + 1 < k; ++j) {
            E dot = zero;
            for (std::size_t i = 0; i < r; ++i) dot += a(r, i) * v[i];
            t.push_back(zero - dot);
            if (j + 2 < k) {
                std::vector<E> w(r, zero);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t l = 0; l < r; ++l) w[i] += a(i, l) * v[l];
                v = std::move(w);
            }
        }
        std::vector<E> next(k + 1, zero);
        for (std::size_t i = 0; i <= k; ++i)
            for (std::size_t j = 0; j < p.size() && j <= i; ++j) next[i] += t[i - j] * p[j];
        p = std::move(next);
    }
    std::reverse(p.begin(), p.end());
    return p;
}

namespace detail {

// Z[zeta_m] with dense coefficient vectors; only ring operations, no normalization.
class IntegerCyclotomicRing {
public:
    explicit IntegerCyclotomicRing(FieldPtr field) : field_(std::move(field)) {
        for (const auto& c : field_->modulus().coeffs()) modulus_.push_back(numerator(c));
    }

    const FieldPtr& field() const { return field_; }

    std::vector<Integer> multiply(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
        const std::size_t m = field_->order(), phi = field_->degree();
        if (a.empty() || b.empty()) return {};
        std::vector<Integer> c(std::min(a.size() + b.size() - 1, m));
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) c[(i + j) % m] += a[i] * b[j];
        }
        for (std::size_t top = c.size(); top-- > phi;) {
            if (c[top] == 0) continue;
            const Integer lead = c[top];
            for (std::size_t k = 0; k < phi; ++k)
                if (modulus_[k] != 0) c[top - phi + k] -= lead * modulus_[k];
            c[top] = 0;
        }
        trim(c);
        return c;
    }

    static void trim(std::vector<Integer>& c) {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }

private:
    FieldPtr field_;
    std::vector<Integer> modulus_;
};

// Element of Z[zeta_m]; the empty coefficient vector is zero.
struct IntegerCyclotomic {
    const IntegerCyclotomicRing* ring = nullptr;
    std::vector<Integer> c;

    bool is_zero() const { return c.empty(); }

    IntegerCyclotomic& operator+=(const IntegerCyclotomic& o) {
        if (c.size() < o.c.size()) c.resize(o.c.size());
        for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
        IntegerCyclotomicRing::trim(c);
        return *this;
    }
    friend IntegerCyclotomic operator-(IntegerCyclotomic a, const IntegerCyclotomic& b) {
        if (a.c.size() < b.c.size()) a.c.resize(b.c.size());
        for (std::size_t i = 0; i < b.c.size(); ++i) a.c[i] -= b.c[i];
        IntegerCyclotomicRing::trim(a.c);
        return a;
    }
    friend IntegerCyclotomic operator*(const IntegerCyclotomic& a, const IntegerCyclotomic& b) {
        return {a.ring, a.ring->multiply(a.c, b.c)};
    }

    CyclotomicElement to_element() const {
        std::vector<Rational> r(c.begin(), c.end());
        return {ring->field(), RationalPoly(std::move(r))};
    }
};

}  // namespace detail

/// Characteristic polynomial det(x I - H), coefficients in ascending order (monic).
inline std::vector<CyclotomicElement> characteristic_polynomial(const HermitianMatrix& hm) {
    return berkowitz_characteristic_polynomial(hm.entries, CyclotomicElement(0), CyclotomicElement(1));
}

/// Signature by exact congruence diagonalization (LDL*), pivot signs certified.
/// Needs a field inverse per pivot, so it is slow for large m; kept as a cross-check.
inline int signature_by_congruence(const HermitianMatrix& hm) {
    Matrix<CyclotomicElement> a = hm.entries;
    const std::size_t n = a.rows();
    std::vector<bool> done(n, false);
    int result = 0;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t piv = n;
        for (std::size_t i = 0; i < n && piv == n; ++i)
            if (!done[i] && !a(i, i).is_zero()) piv = i;
        if (piv == n) {
            // Zero diagonal: find an off-diagonal entry and create a nonzero pivot
            // by the congruence row_j += h_jk row_k, col_j += conj(h_jk) col_k.
            std::size_t pj = n, pk = n;
            for (std::size_t j = 0; j < n && pj == n; ++j) {
                if (done[j]) continue;
                for (std::size_t k = 0; k < n; ++k)
                    if (!done[k] && k != j && !a(j, k).is_zero()) {
                        pj = j;
                        pk = k;
                        break;
                    }
            }
            if (pj == n) break;  // the remaining block is zero
            const CyclotomicElement alpha = a(pj, pk);
            const CyclotomicElement alpha_bar = alpha.conjugate();
            for (std::size_t l = 0; l < n; ++l)
                if (!done[l]) a(pj, l) += alpha * a(pk, l);
            for (std::size_t l = 0; l < n; ++l)
                if (!done[l]) a(l, pj) += alpha_bar * a(l, pk);
            piv = pj;
        }
        const CyclotomicElement d = a(piv, piv);
        result += d.sign();
        done[piv] = true;
        const CyclotomicElement d_inv = d.inverse();
        for (std::size_t j = 0; j < n; ++j) {
            if (done[j] || a(j, piv).is_zero()) continue;
            const CyclotomicElement f = a(j, piv) * d_inv;
            for (std::size_t l = 0; l < n; ++l) {
                if (done[l] || a(piv, l).is_zero()) continue;
                a(j, l) -= f * a(piv, l);
            }
            a(j, piv) = CyclotomicElement();
        }
        for (std::size_t l = 0; l < n; ++l)
            if (!done[l]) a(piv, l) = CyclotomicElement();
    }
    return result;
}

namespace detail {

// Index sets of the connected components of the graph {i ~ j : h_ij != 0}.
inline std::vector<std::vector<std::size_t>> hermitian_components(const Matrix<CyclotomicElement>& h) {
    const std::size_t n = h.rows();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        out.emplace_back();
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(out.size() - 1);
        while (!stack.empty()) {
            std::size_t i = stack.back();
            stack.pop_back();
            out.back().push_back(i);
            for (std::size_t j = 0; j < n; ++j)
                if (comp[j] < 0 && !h(i, j).is_zero()) {
                    comp[j] = comp[s];
                    stack.push_back(j);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

// Sign changes in a coefficient sign sequence, zeros skipped.
inline int sign_changes(const std::vector<int>& signs) {
    int changes = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace detail

/// Exact signature. The matrix is split into its connected blocks; on each block the
/// characteristic polynomial is computed without division, and since it is real-rooted
/// Descartes' rule counts positive and negative eigenvalues exactly.
inline int signature(const HermitianMatrix& hm) {
    int total = 0;
    for (const auto& idx : detail::hermitian_components(hm.entries)) {
        if (idx.size() == 1) {
            total += hm.entries(idx[0], idx[0]).sign();
            continue;
        }
        // Clear denominators with a positive integer (signature unchanged), then work in Z[zeta].
        Integer den = 1;
        for (std::size_t i : idx)
            for (std::size_t j : idx)
                for (const auto& q : hm.entries(i, j).value().coeffs())
                    den = boost::multiprecision::lcm(den, denominator(q));
        detail::IntegerCyclotomicRing ring(hm.field);
        const detail::IntegerCyclotomic zero{&ring, {}}, one{&ring, {Integer(1)}};
        Matrix<detail::IntegerCyclotomic> block(idx.size(), idx.size(), zero);
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) {
                const auto& v = hm.entries(idx[i], idx[j]).value();
                const auto reduced = hm.field->reduce(v);
                for (const auto& q : reduced.coeffs()) block(i, j).c.push_back(numerator(q * Rational(den)));
                detail::IntegerCyclotomicRing::trim(block(i, j).c);
            }
        std::vector<CyclotomicElement> cp;
        for (const auto& e : berkowitz_characteristic_polynomial(block, zero, one)) cp.push_back(e.to_element());
        std::vector<int> pos, neg;
        for (std::size_t i = 0; i < cp.size(); ++i) {
            int s = cp[i].sign();
            pos.push_back(s);
            neg.push_back(i % 2 ? -s : s);
        }
        total += detail::sign_changes(pos) - detail::sign_changes(neg);
    }
    return total;
}

inline int signature_at(const SeifertMatrix& m, const RootOfUnity& w) {
    if (m.size() == 0) return 0;
    return signature(hermitian_matrix(m, w));
}

/// Characteristic polynomial with rational coefficients; throws if some coefficient is irrational.
inline RationalPoly rational_characteristic_polynomial(const HermitianMatrix& hm) {
    std::vector<Rational> c;
    for (const auto& e : characteristic_polynomial(hm)) c.push_back(e.rational_value());
    return RationalPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Numeric mode

inline Eigen::MatrixXcd numeric_hermitian_matrix(const SeifertMatrix& m, std::complex<double> omega) {
    const auto n = static_cast<Eigen::Index>(m.size());
    Eigen::MatrixXcd h(n, n);
    const std::complex<double> a = 1.0 - omega, a_bar = 1.0 - std::conj(omega);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) {
            double x = static_cast<double>(m.psi()(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
            double y = static_cast<double>(m.psi()(static_cast<std::size_t>(j), static_cast<std::size_t>(i)));
            h(i, j) = a * x + a_bar * y;
        }
    return h;
}

/// Double-precision signature at e^{2 pi i turn}. Eigenvalues within
/// max(10^-precision, 64 n eps |H|) of zero raise UncertifiableSign.
inline int numeric_signature(const SeifertMatrix& m, double turn, int precision_digits = 8) {
    if (m.size() == 0) return 0;
    const std::complex<double> omega = std::polar(1.0, 2.0 * std::numbers::pi * turn);
    Eigen::MatrixXcd h = numeric_hermitian_matrix(m, omega);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw UncertifiableSign("eigenvalue computation failed");
    const double scale = std::max(1.0, h.norm());
    const double tol = std::max(std::pow(10.0, -precision_digits),
                                64.0 * static_cast<double>(m.size()) * std::numeric_limits<double>::epsilon() * scale);
    int sig = 0;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
        double ev = solver.eigenvalues()(i);
        if (std::abs(ev) <= tol)
            throw UncertifiableSign("eigenvalue " + std::to_string(ev) + " cannot be separated from zero");
        sig += ev > 0 ? 1 : -1;
    }
    return sig;
}

inline int numeric_signature(const SeifertMatrix& m, const RootOfUnity& w, int precision_digits = 8) {
    return numeric_signature(m, static_cast<double>(w.k()) / static_cast<double>(w.m()), precision_digits);
}

// ---------------------------------------------------------------------------
// Alexander polynomial and profiles

/// det(psi - x psi^T), by evaluation at 0..n and interpolation.
inline RationalPoly alexander_polynomial(const SeifertMatrix& m) {
    const std::size_t n = m.size();
    const IntMatrix& psi = m.psi();
    const IntMatrix psi_t = psi.transpose();
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i <= n; ++i) {
        Integer x(i);
        xs.emplace_back(x);
        ys.emplace_back(determinant(psi - x * psi_t));
    }
    // Newton divided differences.
    std::vector<Rational> coef = ys;
    for (std::size_t j = 1; j < coef.size(); ++j)
        for (std::size_t i = coef.size() - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    RationalPoly result;
    for (std::size_t i = coef.size(); i-- > 0;) {
        RationalPoly factor{-xs[i], Rational(1)};
        result = result * factor + RationalPoly::constant(coef[i]);
    }
    return result;
}

/// Fraction with the smallest denominator strictly inside (a, b), 0 <= a < b.
inline Rational simplest_between(const Rational& a, const Rational& b) {
    if (!(a < b)) throw Error("simplest_between: empty interval");
    Integer fl = numerator(a) / denominator(a);
    if (Rational(fl) > a) fl -= 1;  // floor for negatives
    if (Rational(fl + 1) < b) return Rational(fl + 1);
    Rational a1 = a - Rational(fl), b1 = b - Rational(fl);
    if (a1 == 0) {
        Rational inv = Rational(1) / b1;
        Integer q = numerator(inv) / denominator(inv) + 1;
        return Rational(fl) + Rational(Integer(1), q);
    }
    return Rational(fl) + Rational(1) / simplest_between(Rational(1) / b1, Rational(1) / a1);
}

struct ProfileArc {
    Rational from;  // turns; 0 and 1 denote omega = 1
    Rational to;
    RootOfUnity sample;
    int value = 0;
};

struct ProfileJump {
    bool exact = true;
    std::optional<RootOfUnity> point;  // exact jumps
    std::optional<int> value;          // signature at the point (exact jumps only)
    Rational bracket_lo;               // equal to the point's turn for exact jumps
    Rational bracket_hi;
    double approx_turn = 0.0;
};

struct SignatureProfile {
    RationalPoly alexander;
    long resolution = 0;
    std::vector<ProfileArc> arcs;
    std::vector<ProfileJump> jumps;
};

/// Largest m with phi(m) <= degree (every cyclotomic factor has order at most this).
inline long default_resolution(const RationalPoly& alexander) {
    long deg = std::max<long>(alexander.degree(), 2);
    long best = 2;
    for (long m = 2; m <= 2 * deg * deg + 2; ++m)
        if (static_cast<long>(euler_phi(static_cast<unsigned long>(m))) <= deg) best = m;
    return best;
}

namespace detail {

inline std::vector<double> unit_circle_root_turns(const RationalPoly& p) {
    std::vector<double> out;
    if (p.degree() < 1) return out;
    RationalPoly monic = p.monic();
    const auto d = static_cast<Eigen::Index>(monic.degree());
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
    for (Eigen::Index i = 1; i < d; ++i) companion(i, i - 1) = 1.0;
    for (Eigen::Index i = 0; i < d; ++i) companion(i, d - 1) = -to_double(monic.coeff(static_cast<std::size_t>(i)));
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    for (Eigen::Index i = 0; i < d; ++i) {
        std::complex<double> z = solver.eigenvalues()(i);
        if (std::abs(std::abs(z) - 1.0) > 1e-7) continue;
        double turn = std::arg(z) / (2.0 * std::numbers::pi);
        if (turn < 0) turn += 1.0;
        if (turn < 1e-9 || turn > 1.0 - 1e-9) continue;
        out.push_back(turn);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

/// Piecewise-constant signature function on the circle. Jump candidates are the
/// unit-circle roots of det(psi - x psi^T): roots of unity of order <= resolution
/// are exact, other roots are located numerically and bracketed.
inline SignatureProfile signature_profile(const SeifertMatrix& m, long resolution = 0) {
    SignatureProfile prof;
    prof.alexander = alexander_polynomial(m);
    prof.resolution = resolution > 0 ? resolution : default_resolution(prof.alexander);

    std::map<Rational, int> memo;
    auto value_at = [&](const RootOfUnity& w) {
        Rational key = std::min(w.turn(), Rational(1) - w.turn());  // sigma(w) = sigma(conj w)
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        int v = signature_at(m, w);
        memo.emplace(key, v);
        return v;
    };

    std::vector<ProfileJump> jumps;
    if (prof.alexander.is_zero()) {
        // Degenerate: every root of unity up to the resolution is a breakpoint.
        for (long q = 2; q <= prof.resolution; ++q)
            for (long k = 1; k < q; ++k)
                if (std::gcd(k, q) == 1) {
                    RootOfUnity w(k, q);
                    jumps.push_back({true, w, std::nullopt, w.turn(), w.turn(), to_double(w.turn())});
                }
    } else {
        RationalPoly rest = prof.alexander;
        for (long q = 2; q <= prof.resolution; ++q) {
            if (static_cast<long>(euler_phi(static_cast<unsigned long>(q))) > rest.degree()) continue;
            RationalPoly phi = cyclotomic_polynomial(static_cast<unsigned long>(q));
            bool hit = false;
            for (;;) {
                auto [quot, rem] = divmod(rest, phi);
                if (!rem.is_zero()) break;
                rest = quot;
                hit = true;
            }
            if (!hit) continue;
            for (long k = 1; k < q; ++k)
                if (std::gcd(k, q) == 1) {
                    RootOfUnity w(k, q);
                    jumps.push_back({true, w, std::nullopt, w.turn(), w.turn(), to_double(w.turn())});
                }
        }
        for (double turn : detail::unit_circle_root_turns(squarefree_part(rest))) {
            ProfileJump j;
            j.exact = false;
            j.approx_turn = turn;
            Rational center = rational_from_double(turn);
            Rational width = Rational(Integer(1), Integer(1) << 20);
            j.bracket_lo = std::max(center - width, Rational(Integer(1), Integer(1) << 40));
            j.bracket_hi = std::min(center + width, Rational(1) - Rational(Integer(1), Integer(1) << 40));
            jumps.push_back(j);
        }
    }
    std::sort(jumps.begin(), jumps.end(), [](const auto& a, const auto& b) { return a.bracket_lo < b.bracket_lo; });
    // Merge approximate brackets that overlap their neighbours.
    std::vector<ProfileJump> merged;
    for (auto& j : jumps) {
        if (!merged.empty() && !(merged.back().bracket_hi < j.bracket_lo)) {
            if (!merged.back().exact && !j.exact) {
                merged.back().bracket_hi = std::max(merged.back().bracket_hi, j.bracket_hi);
                continue;
            }
            if (!j.exact) continue;  // an exact root already sits inside this bracket
            if (!merged.back().exact) merged.pop_back();
        }
        merged.push_back(j);
    }
    for (auto& j : merged)
        if (j.exact) j.value = value_at(*j.point);

    Rational prev = 0;
    for (std::size_t i = 0; i <= merged.size(); ++i) {
        Rational next = i < merged.size() ? merged[i].bracket_lo : Rational(1);
        if (prev < next) {
            Rational mid = simplest_between(prev, next);
            RootOfUnity w(static_cast<long>(numerator(mid)), static_cast<long>(denominator(mid)));
            prof.arcs.push_back({prev, next, w, value_at(w)});
        }
        if (i < merged.size()) prev = merged[i].bracket_hi;
    }
    prof.jumps = std::move(merged);
    return prof;
}

/// Exact jump points followed by arc samples.
inline std::vector<RootOfUnity> auto_test_set(const SignatureProfile& prof) {
    std::vector<RootOfUnity> out;
    for (const auto& j : prof.jumps)
        if (j.exact) out.push_back(*j.point);
    for (const auto& a : prof.arcs) out.push_back(a.sample);
    return out;
}

inline std::vector<RootOfUnity> auto_test_set(const SeifertMatrix& m, long resolution = 0) {
    return auto_test_set(signature_profile(m, resolution));
}

enum class HyperbolicVerdict { Violated, VanishesOnTestSet };

inline std::string to_string(HyperbolicVerdict v) {
    return v == HyperbolicVerdict::Violated ? "Violated" : "VanishesOnTestSet";
}

struct HyperbolicCertificate {
    HyperbolicVerdict verdict = HyperbolicVerdict::VanishesOnTestSet;
    std::optional<std::pair<RootOfUnity, int>> witness;
    std::vector<RootOfUnity> tested_points;
};

/// A hyperbolic matrix has vanishing signature everywhere; a nonzero value certifies
/// that the matrix is not hyperbolic.
inline HyperbolicCertificate hyperbolic_obstruction(const SeifertMatrix& m, const std::vector<RootOfUnity>& test_set) {
    if (test_set.empty()) throw Error("hyperbolic_obstruction: empty test set");
    HyperbolicCertificate cert;
    for (const auto& w : test_set) {
        cert.tested_points.push_back(w);
        int s = signature_at(m, w);
        if (s != 0) {
            cert.verdict = HyperbolicVerdict::Violated;
            cert.witness = {w, s};
            return cert;
        }
    }
    return cert;
}

struct DsBound {
    int bound = 0;
    std::optional<RootOfUnity> witness;
    int witness_signature = 0;
};

/// max over the test set of 2|sigma(omega)|, a lower bound for the doubly slice genus
/// of the Bing double when m is the Seifert matrix of a slice knot.
inline DsBound bing_double_ds_bound(const SeifertMatrix& m, const std::vector<RootOfUnity>& test_set) {
    DsBound best;
    for (const auto& w : test_set) {
        int s = signature_at(m, w);
        if (2 * std::abs(s) > best.bound) {
            best.bound = 2 * std::abs(s);
            best.witness = w;
            best.witness_signature = s;
        }
    }
    return best;
}

}  // namespace dslice
