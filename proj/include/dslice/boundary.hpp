#pragma once

// Fox-calculus boundary-link obstruction, and the 4-strand pretzel family
// L_{p,n} = P(2p+1, 2n, -2n, -2p-1).

#include "foxcalc.hpp"
#include "laurent.hpp"

#include <future>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dslice {

struct PretzelParams {
    long p = 1;
    long n = 1;

    PretzelParams(long p_, long n_) : p(p_), n(n_) {
        if (p < 1 || n < 1) throw Error("pretzel parameters must satisfy p >= 1 and n >= 1");
    }
};

enum class Verdict { Obstructed, Inconclusive };

inline std::string to_string(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "Inconclusive"; }

inline Verdict parse_verdict(const std::string& s) {
    if (s == "Obstructed") return Verdict::Obstructed;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw Error("unknown verdict '" + s + "'");
}

struct ObstructionReport {
    Verdict verdict = Verdict::Inconclusive;
    std::string variable;                                // the surviving variable
    LaurentPolynomial target;                            // specialized longitude derivative
    std::vector<LaurentPolynomial> generators_specialized;  // one per relator
    LaurentPolynomial gcd;                               // generator of the specialized ideal
    std::optional<std::string> witness;

    friend bool operator==(const ObstructionReport&, const ObstructionReport&) = default;
};

/// Verdict recomputed from the stored target and generators alone.
inline Verdict recheck_verdict(const ObstructionReport& r) {
    return ideal_membership_single_var(r.target, r.generators_specialized) ? Verdict::Inconclusive
                                                                           : Verdict::Obstructed;
}

inline Presentation pretzel_presentation(const PretzelParams& params) {
    const auto a = GroupWord::generator("a"), b = GroupWord::generator("b");
    const auto c = GroupWord::generator("c"), d = GroupWord::generator("d");
    const auto ai = a.inverse(), bi = b.inverse(), ci = c.inverse(), di = d.inverse();
    const long p = params.p, n = params.n;

    // (ab^-1)^p aba^-1 (ba^-1)^p, a conjugate of b.
    GroupWord twist_b = (a * bi).pow(p) * a * b * ai * (b * ai).pow(p);
    // (ad^-1)^p ad^-1a^-1 (da^-1)^p, a conjugate of d^-1.
    GroupWord twist_d = (a * di).pow(p) * a * di * ai * (d * ai).pow(p);
    GroupWord r1 = twist_b * twist_d;
    // c^-1 (bc^-1)^n c (cb^-1)^n carries the (t^-1 - 1)(1 + st^-1 + ...) part of d_b(r2).
    GroupWord r2 = ci * (b * ci).pow(n) * c * (c * bi).pow(n) * r1;

    AbelianizationMap ab;
    ab.set("a", LaurentPolynomial::variable("s", -1));
    ab.set("b", LaurentPolynomial::variable("s"));
    ab.set("c", LaurentPolynomial::variable("t"));
    ab.set("d", LaurentPolynomial::variable("s"));

    std::vector<Relator> relators{
        {"r1", r1, {}},
        {"r2", r2, {}},
        {"r3", std::nullopt, {"b"}},  // a word in a, c, d only
    };
    // Longitude of the unknotted component with c ignored (its t = 1 reduction).
    GroupWord longitude = b.pow(n) * d.pow(-n);
    return Presentation({"a", "b", "c", "d"}, std::move(relators), std::move(ab), longitude, std::string("b"));
}

/// Closed forms of d_b(r1) and d_b(r2).
inline std::pair<LaurentPolynomial, LaurentPolynomial> relator_derivative_closed_form(const PretzelParams& params) {
    const auto s = LaurentPolynomial::variable("s");
    const auto t_inv = LaurentPolynomial::variable("t", -1);
    LaurentPolynomial alternating;
    for (long k = 0; k <= 2 * params.p; ++k) alternating += (k % 2 ? -s.pow(k) : s.pow(k));
    LaurentPolynomial first = s.pow(-2 * params.p - 1) * alternating;
    LaurentPolynomial geometric;
    for (long k = 0; k < params.n; ++k) geometric += (s * t_inv).pow(k);
    LaurentPolynomial second = first + (t_inv - LaurentPolynomial(1)) * geometric;
    return {first, second};
}

inline ObstructionReport longitude_obstruction(const Presentation& pres) {
    if (!pres.longitude()) throw Error("longitude_obstruction: presentation has no longitude");
    if (!pres.distinguished_generator()) throw Error("longitude_obstruction: no distinguished generator");
    const std::string& g = *pres.distinguished_generator();
    const auto& ab = pres.abelianization();

    const auto& image = ab.image(g);
    if (image.variables().size() != 1)
        throw Error("longitude_obstruction: distinguished generator must abelianize to a power of one variable");
    ObstructionReport report;
    report.variable = image.variables().front();

    // Every other meridian variable is set to 1.
    std::map<std::string, LaurentPolynomial> at_one;
    for (const auto& [gen, img] : ab.images())
        for (const auto& v : img.variables())
            if (v != report.variable) at_one.emplace(v, LaurentPolynomial(1));

    report.target = specialize(fox_derivative(*pres.longitude(), g, ab), at_one);
    for (const auto& r : pres.relators())
        report.generators_specialized.push_back(specialize(fox_derivative(r, g, ab), at_one));
    report.gcd = univariate_gcd(report.generators_specialized);

    bool member = ideal_membership_single_var(report.target, report.generators_specialized);
    report.verdict = member ? Verdict::Inconclusive : Verdict::Obstructed;
    if (!member) {
        std::string rem = report.gcd.is_zero()
                              ? to_string(report.target)
                              : to_string(divide_univariate(report.gcd, report.target).remainder, report.variable);
        report.witness = "ideal generated by " + to_string(report.gcd) + "; remainder of target: " + rem;
    } else if (!report.target.is_zero()) {
        report.witness = to_string(report.gcd) + " divides the target";
    } else {
        report.witness = "target is zero";
    }
    return report;
}

/// Closed-form criterion: obstructed iff n is not a multiple of 2(2p+1).
inline bool pretzel_closed_form_obstructed(const PretzelParams& params) {
    return params.n % (2 * (2 * params.p + 1)) != 0;
}

inline bool is_pretzel_boundary_obstructed(const PretzelParams& params) {
    return longitude_obstruction(pretzel_presentation(params)).verdict == Verdict::Obstructed;
}

struct PretzelScanRow {
    long p = 0;
    long n = 0;
    Verdict verdict = Verdict::Inconclusive;
    bool closed_form_obstructed = false;
    bool agree() const { return (verdict == Verdict::Obstructed) == closed_form_obstructed; }
};

/// Runs the pipeline on the grid [1, p_max] x [1, n_max]; rows are ordered by (p, n).
inline std::vector<PretzelScanRow> pretzel_scan(long p_max, long n_max) {
    if (p_max < 1 || n_max < 1) throw Error("pretzel_scan: bounds must be positive");
    std::vector<std::future<std::vector<PretzelScanRow>>> jobs;
    for (long p = 1; p <= p_max; ++p) {
        jobs.push_back(std::async(std::launch::async, [p, n_max] {
            std::vector<PretzelScanRow> rows;
            for (long n = 1; n <= n_max; ++n) {
                PretzelParams params(p, n);
                auto report = longitude_obstruction(pretzel_presentation(params));
                rows.push_back({p, n, report.verdict, pretzel_closed_form_obstructed(params)});
            }
            return rows;
        }));
    }
    std::vector<PretzelScanRow> out;
    for (auto& j : jobs) {
        auto rows = j.get();
        out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
}

}  // namespace dslice
