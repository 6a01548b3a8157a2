#pragma once

// Multivariable Laurent polynomials with integer coefficients.

#include "numeric.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dslice {

class LaurentPolynomial {
public:
    using Exponents = std::vector<Integer>;
    using Terms = std::map<Exponents, Integer>;

    /// The zero polynomial.
    LaurentPolynomial() = default;
    LaurentPolynomial(long c) : LaurentPolynomial(Integer(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPolynomial(const Integer& c) {  // NOLINT(google-explicit-constructor)
        if (c != 0) terms_.emplace(Exponents{}, c);
    }

    static LaurentPolynomial variable(const std::string& name, const Integer& exponent = 1) {
        return monomial(1, {{name, exponent}});
    }

    static LaurentPolynomial monomial(const Integer& coeff, const std::map<std::string, Integer>& exps) {
        LaurentPolynomial p;
        for (const auto& [name, e] : exps) {
            check_identifier(name);
            p.vars_.push_back(name);
        }
        Exponents key;
        for (const auto& [name, e] : exps) key.push_back(e);
        if (coeff != 0) p.terms_.emplace(std::move(key), coeff);
        p.canonicalize();
        return p;
    }

    /// Build from explicit variable order and terms; normalizes.
    static LaurentPolynomial from_terms(std::vector<std::string> vars, const Terms& terms) {
        LaurentPolynomial p;
        std::vector<std::size_t> order(vars.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](auto a, auto b) { return vars[a] < vars[b]; });
        for (std::size_t i = 0; i < order.size(); ++i) {
            check_identifier(vars[order[i]]);
            if (i && vars[order[i]] == vars[order[i - 1]]) throw Error("duplicate variable " + vars[order[i]]);
            p.vars_.push_back(vars[order[i]]);
        }
        for (const auto& [e, c] : terms) {
            if (e.size() != vars.size()) throw Error("exponent vector length mismatch");
            Exponents key(vars.size());
            for (std::size_t i = 0; i < order.size(); ++i) key[i] = e[order[i]];
            p.terms_[key] += c;
        }
        p.canonicalize();
        return p;
    }

    const std::vector<std::string>& variables() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Integer constant_value() const {
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.empty() ? Integer(0) : terms_.begin()->second;
    }

    /// A single term with coefficient +-1.
    bool is_unit_monomial() const {
        return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
    }

    /// Exponent of `var` in a monomial (0 when absent).
    Integer exponent_of(const std::string& var) const {
        if (terms_.size() != 1) throw Error("exponent_of: not a monomial");
        auto it = std::find(vars_.begin(), vars_.end(), var);
        if (it == vars_.end()) return 0;
        return terms_.begin()->first[static_cast<std::size_t>(it - vars_.begin())];
    }

    LaurentPolynomial unit_inverse() const {
        if (!is_unit_monomial()) throw Error("only unit monomials are invertible");
        LaurentPolynomial r = *this;
        Terms t;
        for (const auto& [e, c] : terms_) {
            Exponents neg(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
            t.emplace(std::move(neg), c);
        }
        r.terms_ = std::move(t);
        return r;
    }

    LaurentPolynomial pow(long k) const {
        if (k < 0) return unit_inverse().pow(-k);
        LaurentPolynomial result(1), base = *this;
        while (k) {
            if (k & 1) result = result * base;
            base = base * base;
            k >>= 1;
        }
        return result;
    }

    friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    LaurentPolynomial operator-() const {
        LaurentPolynomial r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    friend LaurentPolynomial operator+(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        auto [vars, ea, eb] = align(a, b);
        Terms t = ea;
        for (auto& [e, c] : eb) t[e] += c;
        return build(std::move(vars), std::move(t));
    }
    friend LaurentPolynomial operator-(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        return a + (-b);
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        auto [vars, ea, eb] = align(a, b);
        Terms t;
        for (const auto& [e1, c1] : ea)
            for (const auto& [e2, c2] : eb) {
                Exponents e(vars.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                t[e] += c1 * c2;
            }
        return build(std::move(vars), std::move(t));
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) { return *this = *this + o; }
    LaurentPolynomial& operator-=(const LaurentPolynomial& o) { return *this = *this - o; }
    LaurentPolynomial& operator*=(const LaurentPolynomial& o) { return *this = *this * o; }

private:
    static void check_identifier(const std::string& name) {
        if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
            throw Error("invalid variable name '" + name + "'");
        for (char ch : name)
            if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
                throw Error("invalid variable name '" + name + "'");
    }

    static LaurentPolynomial build(std::vector<std::string> vars, Terms terms) {
        LaurentPolynomial p;
        p.vars_ = std::move(vars);
        p.terms_ = std::move(terms);
        p.canonicalize();
        return p;
    }

    // Re-express both operands over the union of their variables.
    static std::tuple<std::vector<std::string>, Terms, Terms> align(const LaurentPolynomial& a,
                                                                    const LaurentPolynomial& b) {
        if (a.vars_ == b.vars_) return {a.vars_, a.terms_, b.terms_};
        std::vector<std::string> vars;
        std::set_union(a.vars_.begin(), a.vars_.end(), b.vars_.begin(), b.vars_.end(),
                       std::back_inserter(vars));
        return {vars, a.remap(vars), b.remap(vars)};
    }

    Terms remap(const std::vector<std::string>& vars) const {
        std::vector<std::size_t> pos(vars_.size());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            pos[i] = static_cast<std::size_t>(std::lower_bound(vars.begin(), vars.end(), vars_[i]) - vars.begin());
        Terms out;
        for (const auto& [e, c] : terms_) {
            Exponents ne(vars.size(), Integer(0));
            for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
            out.emplace(std::move(ne), c);
        }
        return out;
    }

    // Drop zero coefficients and variables that no longer occur.
    void canonicalize() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (it->second == 0) it = terms_.erase(it);
            else ++it;
        }
        std::vector<bool> used(vars_.size(), false);
        for (const auto& [e, c] : terms_)
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) used[i] = true;
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
        std::vector<std::string> vars;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (used[i]) vars.push_back(vars_[i]);
        Terms t;
        for (const auto& [e, c] : terms_) {
            Exponents ne;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (used[i]) ne.push_back(e[i]);
            t[ne] += c;
        }
        vars_ = std::move(vars);
        terms_ = std::move(t);
    }

    std::vector<std::string> vars_;
    Terms terms_;
};

/// Substitutes unit monomials (or +-1) for variables, simultaneously.
inline LaurentPolynomial specialize(const LaurentPolynomial& p,
                                    const std::map<std::string, LaurentPolynomial>& assignments) {
    for (const auto& [var, value] : assignments) {
        if (value.is_zero()) throw Error("cannot specialize " + var + " at 0: units must stay invertible");
        if (!value.is_unit_monomial())
            throw Error("cannot specialize " + var + ": value must be +-1 or a unit monomial");
    }
    if (assignments.empty()) return p;
    const auto& vars = p.variables();
    LaurentPolynomial result;
    for (const auto& [e, c] : p.terms()) {
        LaurentPolynomial term(c);
        std::map<std::string, Integer> kept;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            auto it = assignments.find(vars[i]);
            if (it == assignments.end()) {
                kept[vars[i]] = e[i];
            } else {
                term *= it->second.pow(static_cast<long>(to_int64(e[i])));
            }
        }
        term *= LaurentPolynomial::monomial(1, kept);
        result += term;
    }
    return result;
}

inline std::string to_string(const LaurentPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    const auto& vars = p.variables();
    for (const auto& [e, c] : p.terms()) {
        bool first = out.empty();
        if (c < 0) out += first ? "-" : " - ";
        else if (!first) out += " + ";
        Integer mag = abs(c);
        std::string body;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!body.empty()) body += "*";
            body += vars[i];
            if (e[i] != 1) body += "^" + e[i].str();
        }
        if (body.empty()) out += mag.str();
        else if (mag == 1) out += body;
        else out += mag.str() + "*" + body;
    }
    return out;
}

namespace detail {

class LaurentParser {
public:
    explicit LaurentParser(std::string_view text) : s_(text) {}

    LaurentPolynomial parse() {
        LaurentPolynomial p = sum();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return p;
    }

private:
    LaurentPolynomial sum() {
        skip();
        LaurentPolynomial acc;
        bool negate = false;
        if (peek() == '+' || peek() == '-') negate = (get() == '-');
        LaurentPolynomial t = product();
        acc = negate ? -t : t;
        for (;;) {
            skip();
            if (peek() != '+' && peek() != '-') break;
            bool minus = get() == '-';
            LaurentPolynomial next = product();
            acc = minus ? acc - next : acc + next;
        }
        return acc;
    }

    LaurentPolynomial product() {
        LaurentPolynomial acc = factor();
        for (;;) {
            skip();
            if (peek() != '*') break;
            get();
            acc *= factor();
        }
        return acc;
    }

    LaurentPolynomial factor() {
        skip();
        LaurentPolynomial base;
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            base = LaurentPolynomial(integer());
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                name += s_[pos_++];
            base = LaurentPolynomial::variable(name);
        } else if (c == '(') {
            get();
            base = sum();
            skip();
            if (get() != ')') fail("expected ')'");
        } else {
            fail("expected a term");
        }
        skip();
        if (peek() == '^') {
            get();
            skip();
            bool neg = false;
            if (peek() == '-' || peek() == '+') neg = (get() == '-');
            skip();
            if (peek() == '(') {
                get();
                skip();
                if (peek() == '-' || peek() == '+') neg = (get() == '-') != neg;
                Integer e = integer();
                skip();
                if (get() != ')') fail("expected ')'");
                return base.pow(static_cast<long>(to_int64(neg ? Integer(-e) : e)));
            }
            Integer e = integer();
            if (neg && !base.is_unit_monomial()) fail("negative power of a non-unit");
            return base.pow(static_cast<long>(to_int64(neg ? Integer(-e) : e)));
        }
        return base;
    }

    Integer integer() {
        skip();
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) digits += s_[pos_++];
        if (digits.empty()) fail("expected an integer");
        return Integer(digits);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return pos_ < s_.size() ? s_[pos_++] : '\0'; }
    [[noreturn]] void fail(const std::string& what) const {
        throw Error("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                    std::string(s_) + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the textual syntax `-3*s^-2*t^4 + 2*s - 1`; inverse of to_string.
inline LaurentPolynomial parse_laurent(std::string_view text) {
    return detail::LaurentParser(text).parse();
}

// ---------------------------------------------------------------------------
// One-variable arithmetic over Q[x^{+-1}]

/// A one-variable Laurent polynomial written as x^shift * poly(x), poly(0) != 0.
struct UnivariateForm {
    std::string var;  // empty for constants
    Integer shift = 0;
    RationalPoly poly;
};

inline UnivariateForm to_univariate(const LaurentPolynomial& p) {
    if (p.variables().size() > 1)
        throw Error("expected a one-variable polynomial, got " + to_string(p));
    UnivariateForm f;
    if (p.is_zero()) return f;
    if (p.is_constant()) {
        f.poly = RationalPoly::constant(Rational(p.constant_value()));
        return f;
    }
    f.var = p.variables().front();
    f.shift = p.terms().begin()->first.front();  // terms are ordered by exponent
    Integer top = p.terms().rbegin()->first.front();
    auto span = to_int64(top - f.shift);
    if (span > (1 << 24)) throw Error("exponent span too large for dense arithmetic");
    std::vector<Rational> c(static_cast<std::size_t>(span) + 1, Rational(0));
    for (const auto& [e, coeff] : p.terms()) c[static_cast<std::size_t>(to_int64(e.front() - f.shift))] = coeff;
    f.poly = RationalPoly(std::move(c));
    return f;
}

/// Integer-coefficient Laurent polynomial proportional to poly (content removed, positive lead).
inline LaurentPolynomial primitive_laurent(const RationalPoly& poly, const std::string& var,
                                           const Integer& shift = 0) {
    if (poly.is_zero()) return {};
    Integer den = 1;
    for (const auto& c : poly.coeffs()) den = boost::multiprecision::lcm(den, denominator(c));
    std::vector<Integer> ints;
    Integer content = 0;
    for (const auto& c : poly.coeffs()) {
        Integer v = numerator(c * Rational(den));
        ints.push_back(v);
        content = gcd(content, v);
    }
    if (poly.leading() < 0) content = -content;
    LaurentPolynomial::Terms terms;
    for (std::size_t i = 0; i < ints.size(); ++i) {
        if (ints[i] == 0) continue;
        terms.emplace(LaurentPolynomial::Exponents{shift + Integer(i)}, ints[i] / content);
    }
    if (var.empty()) return LaurentPolynomial(terms.begin()->second);
    return LaurentPolynomial::from_terms({var}, terms);
}

namespace detail {
inline std::string common_variable(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    std::set<std::string> vars(a.variables().begin(), a.variables().end());
    vars.insert(b.variables().begin(), b.variables().end());
    if (vars.size() > 1) throw Error("one-variable operation applied to multivariable input");
    return vars.empty() ? std::string() : *vars.begin();
}
}  // namespace detail

/// Exact division result in Q[x^{+-1}]: f = quotient * d + remainder (remainder reduced).
struct DivisionResult {
    bool divides = false;
    RationalPoly quotient;
    RationalPoly remainder;
};

inline DivisionResult divide_univariate(const LaurentPolynomial& d, const LaurentPolynomial& f) {
    detail::common_variable(d, f);
    if (d.is_zero()) throw Error("divides: zero divisor");
    // Units x^k are dropped: divisibility only depends on the polynomial parts.
    UnivariateForm df = to_univariate(d), ff = to_univariate(f);
    auto [q, r] = divmod(ff.poly, df.poly);
    return {r.is_zero(), q, r};
}

/// True iff f = q*d for a one-variable Laurent polynomial q over the rationals.
inline bool divides(const LaurentPolynomial& d, const LaurentPolynomial& f) {
    return divide_univariate(d, f).divides;
}

/// Greatest common divisor in Q[x^{+-1}], normalized to a primitive integer polynomial
/// with no monomial factor and positive leading coefficient. Zero for an all-zero list.
inline LaurentPolynomial univariate_gcd(const std::vector<LaurentPolynomial>& polys) {
    std::string var;
    RationalPoly g;
    for (const auto& p : polys) {
        if (p.variables().size() > 1) throw Error("univariate_gcd: multivariable input " + to_string(p));
        if (!p.variables().empty()) {
            if (!var.empty() && var != p.variables().front())
                throw Error("univariate_gcd: inputs use different variables");
            var = p.variables().front();
        }
        if (p.is_zero()) continue;
        g = poly_gcd(g, to_univariate(p).poly);
    }
    if (g.degree() == 0) return LaurentPolynomial(1);
    return primitive_laurent(g, var);
}

/// Membership of target in the ideal of Q[x^{+-1}] generated by `generators`.
inline bool ideal_membership_single_var(const LaurentPolynomial& target,
                                        const std::vector<LaurentPolynomial>& generators) {
    std::set<std::string> vars(target.variables().begin(), target.variables().end());
    for (const auto& g : generators) vars.insert(g.variables().begin(), g.variables().end());
    if (vars.size() > 1) throw Error("ideal membership: multivariable input");
    if (target.is_zero()) return true;
    LaurentPolynomial g = univariate_gcd(generators);
    if (g.is_zero()) return false;
    return divides(g, target);
}

}  // namespace dslice
