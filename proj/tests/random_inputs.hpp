// Seeded generators shared by the property tests and the acceptance binary.
#pragma once

#include <dslice/dslice.hpp>

#include <random>
#include <string>
#include <vector>

namespace dslice::testing {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long range) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -range, range);
    return m;
}

/// A product of random elementary integer matrices (determinant +-1).
inline IntMatrix random_unimodular(Rng& rng, std::size_t n, int steps = 6) {
    IntMatrix p = IntMatrix::identity(n);
    if (n < 2) return p;
    for (int s = 0; s < steps; ++s) {
        auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
        auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
        if (j >= i) ++j;
        Integer c = uniform(rng, -1, 1);
        for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    }
    if (uniform(rng, 0, 1)) {
        for (std::size_t k = 0; k < n; ++k) p(0, k) = -p(0, k);
    }
    return p;
}

/// Random psi of even rank with psi + eps psi^T unimodular: a congruence of a standard
/// block sum, plus a term killed by symmetrization.
inline SeifertMatrix random_admissible(Rng& rng, std::size_t rank, int eps) {
    IntMatrix base(rank, rank);
    for (std::size_t i = 0; i + 1 < rank; i += 2) {
        base(i, i + 1) = 1;
        if (eps == 1 && uniform(rng, 0, 1)) base(i, i) = uniform(rng, -2, 2);  // diagonal adds 2c to b, keep it even
        if (eps == 1) base(i + 1, i + 1) = 0;
    }
    IntMatrix p = random_unimodular(rng, rank);
    IntMatrix psi = p.transpose() * base * p;
    // s with s + eps s^T = 0: symmetric for eps = -1, skew for eps = +1.
    IntMatrix s(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = i; j < rank; ++j) {
            if (i == j && eps == 1) continue;
            Integer v = uniform(rng, -3, 3);
            s(i, j) = v;
            s(j, i) = eps == -1 ? v : Integer(-v);
        }
    return {psi + s, eps};
}

inline RootOfUnity random_root(Rng& rng, long max_order = 24) {
    long m = uniform(rng, 2, max_order);
    long k = 0;
    do k = uniform(rng, 1, m - 1);
    while (std::gcd(k, m) != 1);
    return {k, m};
}

inline GroupWord random_word(Rng& rng, const std::vector<std::string>& gens, std::size_t max_len) {
    std::vector<Letter> letters;
    auto len = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_len)));
    for (std::size_t i = 0; i < len; ++i)
        letters.push_back({gens[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(gens.size()) - 1))],
                           uniform(rng, 0, 1) ? 1 : -1});
    return GroupWord(letters);
}

/// Images s^i t^j with small exponents.
inline AbelianizationMap random_abelianization(Rng& rng, const std::vector<std::string>& gens) {
    AbelianizationMap m;
    for (const auto& g : gens)
        m.set(g, LaurentPolynomial::monomial(1, {{"s", uniform(rng, -2, 2)}, {"t", uniform(rng, -2, 2)}}));
    return m;
}

inline LaurentPolynomial random_univariate(Rng& rng, const std::string& var, long max_deg, long range) {
    LaurentPolynomial p;
    long lo = uniform(rng, -3, 3);
    long deg = uniform(rng, 0, max_deg);
    for (long e = 0; e <= deg; ++e)
        p = p + LaurentPolynomial::monomial(uniform(rng, -range, range), {{var, lo + e}});
    return p;
}

inline LaurentPolynomial random_bivariate(Rng& rng, int terms, long range) {
    LaurentPolynomial p;
    for (int i = 0; i < terms; ++i)
        p = p + LaurentPolynomial::monomial(uniform(rng, -range, range),
                                            {{"s", uniform(rng, -3, 3)}, {"t", uniform(rng, -3, 3)}});
    return p;
}

}  // namespace dslice::testing
