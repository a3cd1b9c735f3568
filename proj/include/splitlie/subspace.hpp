#pragma once

#include "splitlie/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace splitlie {

/// Subspace of K^n held as a canonical RREF basis (full row rank, pivot
/// columns strictly increasing). Canonicality makes equality structural,
/// which every direct-sum check in the decomposition machinery relies on.
class Subspace {
public:
    static Subspace zero(std::size_t ambient);
    static Subspace full(std::size_t ambient);
    /// Canonicalizes an arbitrary spanning set (zero rows dropped).
    static Subspace span(std::size_t ambient, const std::vector<Vec>& rows);
    static Subspace span(const Matrix& rows);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    Vec basis_row(std::size_t r) const { return basis_.row(r); }
    std::vector<Vec> basis_rows() const;

    bool is_zero() const { return dim() == 0; }
    bool is_full() const { return dim() == ambient_; }

    /// Residual of v after reduction against the basis; zero iff v lies in the subspace.
    Vec reduce(const Vec& v) const;
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    /// Coordinates of v in the RREF basis, if v lies in the subspace.
    std::optional<Vec> coords_of(const Vec& v) const;

    friend Subspace sum(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }
    friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

private:
    Subspace(std::size_t ambient, Matrix basis, std::vector<std::size_t> pivots)
        : ambient_(ambient), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Null space {v : m·v = 0} as a canonical Subspace.
Subspace kernel(const Matrix& m);

/// Sum of a list of subspaces (zero subspace for an empty list needs `ambient`).
Subspace sum_all(std::size_t ambient, const std::vector<Subspace>& parts);

} // namespace splitlie
