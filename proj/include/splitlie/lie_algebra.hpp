#pragma once

#include "splitlie/matrix.hpp"
#include "splitlie/subspace.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace splitlie {

/// Structure constants: (i, j) with i < j maps to the coefficient vector of
/// [e_i, e_j]. Alternation is by storage convention, not data.
using BracketTable = std::map<std::pair<std::size_t, std::size_t>, Vec>;

/// Finite-dimensional Lie algebra over Q presented by structure constants,
/// with a designated Cartan sub-basis. Immutable; the constructor validates
/// the Jacobi identity, so every instance is an actual Lie algebra.
class LieAlgebra {
public:
    LieAlgebra(std::size_t dim, std::vector<std::string> basis_names, BracketTable brackets,
               std::vector<std::size_t> cartan_indices);

    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }
    const BracketTable& bracket_table() const { return table_; }
    const std::vector<std::size_t>& cartan_indices() const { return cartan_; }

    /// [e_i, e_j] for arbitrary i, j (sign handled by convention).
    Vec bracket_basis(std::size_t i, std::size_t j) const;
    Vec bracket(const Vec& x, const Vec& y) const;

    /// Matrix of ad_x : v -> [x, v].
    Matrix ad_basis(std::size_t i) const;
    Matrix ad(const Vec& x) const;

    /// Span of [xs, ys] over basis pairs of the two subspaces.
    Subspace bracket_space(const Subspace& xs, const Subspace& ys) const;

    Subspace center() const;
    Subspace derived() const;
    bool is_perfect() const;
    bool is_ideal(const Subspace& s) const;
    bool is_subalgebra(const Subspace& s) const;

    bool validate_jacobi() const { return !jacobi_failure(dim_, table_).has_value(); }

    /// First basis triple i<j<k violating the Jacobi identity, if any.
    /// Usable on raw tables before construction.
    static std::optional<std::array<std::size_t, 3>> jacobi_failure(std::size_t dim,
                                                                    const BracketTable& table);

    bool structurally_equal(const LieAlgebra& o) const {
        return dim_ == o.dim_ && table_ == o.table_ && cartan_ == o.cartan_;
    }

private:
    std::size_t dim_;
    std::vector<std::string> names_;
    BracketTable table_;
    std::vector<std::size_t> cartan_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

} // namespace splitlie
