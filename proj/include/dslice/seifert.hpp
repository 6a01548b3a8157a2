#pragma once

// Integer Seifert matrices, epsilon-symmetric Seifert forms (N, b, t) and
// metabolic / hyperbolic sublattices.

#include "matrix.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dslice {

class NonUnimodular : public Error {
public:
    explicit NonUnimodular(Integer det)
        : Error("psi + epsilon*psi^T is not unimodular (determinant " + det.str() + ")"), determinant_(std::move(det)) {}
    const Integer& determinant() const { return determinant_; }

private:
    Integer determinant_;
};

class SeifertMatrix {
public:
    SeifertMatrix() = default;
    SeifertMatrix(IntMatrix psi, int epsilon) : psi_(std::move(psi)), epsilon_(epsilon) {
        if (!psi_.is_square()) throw Error("Seifert matrix must be square");
        if (epsilon_ != 1 && epsilon_ != -1) throw Error("epsilon must be +1 or -1");
    }

    const IntMatrix& psi() const { return psi_; }
    int epsilon() const { return epsilon_; }
    std::size_t size() const { return psi_.rows(); }

    /// b = psi + epsilon * psi^T
    IntMatrix pairing() const { return psi_ + Integer(epsilon_) * psi_.transpose(); }

    bool is_admissible() const { return abs(determinant(pairing())) == 1; }

    SeifertMatrix transposed() const { return {psi_.transpose(), epsilon_}; }

    friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

private:
    IntMatrix psi_;
    int epsilon_ = -1;
};

struct SeifertForm {
    std::size_t rank = 0;
    IntMatrix b;
    IntMatrix t;
    int epsilon = -1;

    bool is_epsilon_symmetric() const { return b.transpose() == Integer(epsilon) * b; }
    bool is_unimodular() const { return abs(determinant(b)) == 1; }
    /// t^T b = b (I - t), the matrix form of b(tx)(y) = b(x)((1 - t)y).
    bool satisfies_form_axiom() const {
        return t.transpose() * b == b * (IntMatrix::identity(rank) - t);
    }
    bool is_valid() const { return is_epsilon_symmetric() && is_unimodular() && satisfies_form_axiom(); }

    friend bool operator==(const SeifertForm&, const SeifertForm&) = default;
};

/// N = Z^n, b = psi + epsilon psi^T, t = b^-1 psi.
inline SeifertForm form_from_matrix(const SeifertMatrix& m) {
    IntMatrix b = m.pairing();
    Integer det = determinant(b);
    if (abs(det) != 1) throw NonUnimodular(det);
    return {m.size(), b, unimodular_inverse(b) * m.psi(), m.epsilon()};
}

inline SeifertMatrix connected_sum(const SeifertMatrix& m1, const SeifertMatrix& m2) {
    if (m1.epsilon() != m2.epsilon()) throw Error("connected_sum: epsilon mismatch");
    return {block_diagonal(m1.psi(), m2.psi()), m1.epsilon()};
}

/// Seifert matrix of K # K^r.
inline SeifertMatrix reverse_sum(const SeifertMatrix& m) {
    return {block_diagonal(m.psi(), m.psi().transpose()), m.epsilon()};
}

/// A sublattice of Z^n given by basis columns.
class Sublattice {
public:
    Sublattice() = default;
    explicit Sublattice(IntMatrix basis) : basis_(std::move(basis)) {}

    /// From a list of basis vectors, all of dimension `ambient`.
    static Sublattice from_vectors(std::size_t ambient, const std::vector<std::vector<Integer>>& vectors) {
        IntMatrix b(ambient, vectors.size());
        for (std::size_t j = 0; j < vectors.size(); ++j) {
            if (vectors[j].size() != ambient) throw Error("sublattice: basis vector has wrong dimension");
            for (std::size_t i = 0; i < ambient; ++i) b(i, j) = vectors[j][i];
        }
        return Sublattice(std::move(b));
    }

    /// span{e_i : i in indices}
    static Sublattice coordinate(std::size_t ambient, const std::vector<std::size_t>& indices) {
        IntMatrix b(ambient, indices.size());
        for (std::size_t j = 0; j < indices.size(); ++j) b(indices[j], j) = 1;
        return Sublattice(std::move(b));
    }

    const IntMatrix& basis() const { return basis_; }
    std::size_t ambient_dimension() const { return basis_.rows(); }
    std::size_t rank() const { return basis_.cols(); }

    bool is_independent() const { return dslice::rank(basis_) == rank(); }
    /// Direct summand of Z^n: all Smith invariant factors equal 1.
    bool is_primitive() const {
        if (!is_independent()) return false;
        auto inv = smith_invariants(basis_);
        return std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d == 1; });
    }

    friend bool operator==(const Sublattice&, const Sublattice&) = default;

private:
    IntMatrix basis_;
};

inline std::string to_string(const Sublattice& l) {
    std::string out = "span{";
    for (std::size_t j = 0; j < l.rank(); ++j) {
        out += j ? ", (" : "(";
        for (std::size_t i = 0; i < l.ambient_dimension(); ++i) out += (i ? "," : "") + l.basis()(i, j).str();
        out += ")";
    }
    return out + "}";
}

/// Half-rank, primitive and psi-isotropic (x^T psi y = 0 on the basis).
inline bool verify_metabolizer(const SeifertMatrix& m, const Sublattice& l) {
    if (l.ambient_dimension() != m.size()) throw Error("verify_metabolizer: dimension mismatch");
    if (m.size() % 2 != 0) return false;
    if (l.rank() != m.size() / 2) return false;
    if (!l.is_primitive()) return false;
    return (l.basis().transpose() * m.psi() * l.basis()).is_zero();
}

namespace detail {

// Depth-first enumeration of Hermite-normal-form bases (rows in echelon form,
// positive pivots, entries above a pivot reduced into [0, pivot)) of
// psi-isotropic sublattices of half rank.
class MetabolizerSearch {
public:
    using Vec = std::vector<std::int64_t>;

    MetabolizerSearch(const SeifertMatrix& m, long bound, std::function<bool(const Sublattice&)> visit)
        : n_(m.size()), k_(m.size() / 2), bound_(bound), visit_(std::move(visit)) {
        psi_.assign(n_ * n_, 0);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) psi_[i * n_ + j] = to_int64(m.psi()(i, j));
        values_.push_back(0);
        for (long v = 1; v <= bound; ++v) {
            values_.push_back(v);
            values_.push_back(-v);
        }
    }

    void run() {
        if (n_ % 2 != 0) return;
        std::vector<std::size_t> pivots(k_);
        // Pivot columns in lexicographic order.
        std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t idx, std::size_t from) {
            if (idx == k_) {
                pivots_ = pivots;
                rows_.assign(k_, Vec(n_, 0));
                return fill_row(k_);
            }
            for (std::size_t c = from; c + (k_ - idx) <= n_; ++c) {
                pivots[idx] = c;
                if (!choose(idx + 1, c + 1)) return false;
            }
            return true;
        };
        choose(0, 0);
    }

private:
    std::int64_t form(const Vec& x, const Vec& y) const {
        std::int64_t acc = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (!x[i]) continue;
            for (std::size_t j = 0; j < n_; ++j) acc += x[i] * psi_[i * n_ + j] * y[j];
        }
        return acc;
    }

    // Rows are filled bottom-up so that the reduced entries of a row are known.
    // Returns false to abort the whole search.
    bool fill_row(std::size_t count) {
        if (count == 0) return emit();
        const std::size_t r = count - 1;
        Vec& row = rows_[r];
        std::fill(row.begin(), row.end(), 0);
        std::function<bool(std::size_t)> col = [&](std::size_t j) -> bool {
            if (j == n_) {
                if (form(row, row) != 0) return true;
                for (std::size_t o = r + 1; o < k_; ++o)
                    if (form(row, rows_[o]) != 0 || form(rows_[o], row) != 0) return true;
                return fill_row(r);
            }
            if (j < pivots_[r]) return col(j + 1);
            if (j == pivots_[r]) {
                for (long v = 1; v <= bound_; ++v) {
                    row[j] = v;
                    if (!col(j + 1)) return false;
                }
                row[j] = 0;
                return true;
            }
            for (std::size_t o = r + 1; o < k_; ++o)
                if (pivots_[o] == j) {
                    for (std::int64_t v = 0; v < rows_[o][j]; ++v) {
                        row[j] = v;
                        if (!col(j + 1)) return false;
                    }
                    row[j] = 0;
                    return true;
                }
            for (long v : values_) {
                row[j] = v;
                if (!col(j + 1)) return false;
            }
            row[j] = 0;
            return true;
        };
        return col(0);
    }

    bool emit() {
        std::vector<std::vector<Integer>> vecs;
        for (const auto& row : rows_) vecs.emplace_back(row.begin(), row.end());
        Sublattice l = Sublattice::from_vectors(n_, vecs);
        if (!l.is_primitive()) return true;
        return visit_(l);
    }

    std::size_t n_, k_;
    long bound_;
    std::function<bool(const Sublattice&)> visit_;
    std::vector<std::int64_t> psi_;
    std::vector<long> values_;
    std::vector<std::size_t> pivots_;
    std::vector<Vec> rows_;
};

}  // namespace detail

/// Every metabolizer whose Hermite-normal-form basis has entries in [-bound, bound],
/// stopping after `limit` results (0 = unlimited).
inline std::vector<Sublattice> enumerate_metabolizers(const SeifertMatrix& m, long bound, std::size_t limit = 0) {
    if (bound < 1) throw Error("metabolizer search bound must be at least 1");
    std::vector<Sublattice> found;
    if (m.size() % 2 != 0) return found;
    if (m.size() == 0) return {Sublattice(IntMatrix(0, 0))};
    detail::MetabolizerSearch search(m, bound, [&](const Sublattice& l) {
        found.push_back(l);
        return limit == 0 || found.size() < limit;
    });
    search.run();
    return found;
}

/// First metabolizer found within the bound; nullopt means "not found", not "non-metabolic".
inline std::optional<Sublattice> search_metabolizer(const SeifertMatrix& m, long bound) {
    auto found = enumerate_metabolizers(m, bound, 1);
    if (found.empty()) return std::nullopt;
    return found.front();
}

/// N = L1 (+) L2 with each L_i t-invariant and equal to its own b-orthogonal complement.
inline bool verify_hyperbolic_splitting(const SeifertForm& f, const Sublattice& l1, const Sublattice& l2) {
    if (l1.ambient_dimension() != f.rank || l2.ambient_dimension() != f.rank)
        throw Error("verify_hyperbolic_splitting: dimension mismatch");
    if (l1.rank() + l2.rank() != f.rank) return false;
    IntMatrix combined = hconcat(l1.basis(), l2.basis());
    if (f.rank == 0) return true;
    if (abs(determinant(combined)) != 1) return false;
    // L_perp has rank n - rank(L) and is saturated, so L_perp = L iff L is
    // b-isotropic of half rank (L is a direct summand here).
    if (l1.rank() != l2.rank()) return false;
    IntMatrix cinv = unimodular_inverse(combined);
    const std::size_t k = l1.rank();
    auto invariant = [&](const Sublattice& l, std::size_t other_begin) {
        IntMatrix coords = cinv * f.t * l.basis();
        for (std::size_t i = other_begin; i < other_begin + k; ++i)
            for (std::size_t j = 0; j < coords.cols(); ++j)
                if (coords(i, j) != 0) return false;
        return true;
    };
    if (!invariant(l1, k) || !invariant(l2, 0)) return false;
    for (const auto* l : {&l1, &l2})
        if (!(l->basis().transpose() * f.b * l->basis()).is_zero()) return false;
    return true;
}

}  // namespace dslice
