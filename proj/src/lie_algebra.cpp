#include "splitlie/lie_algebra.hpp"

#include "splitlie/errors.hpp"

#include <set>

namespace splitlie {

namespace {

Vec bracket_from_table(std::size_t dim, const BracketTable& table, std::size_t i, std::size_t j) {
    if (i == j)
        return Vec(dim);
    const bool flip = i > j;
    auto it = table.find(flip ? std::make_pair(j, i) : std::make_pair(i, j));
    if (it == table.end())
        return Vec(dim);
    return flip ? vec_neg(it->second) : it->second;
}

} // namespace

LieAlgebra::LieAlgebra(std::size_t dim, std::vector<std::string> basis_names, BracketTable brackets,
                       std::vector<std::size_t> cartan_indices)
    : dim_(dim), names_(std::move(basis_names)), table_(std::move(brackets)),
      cartan_(std::move(cartan_indices)) {
    if (dim_ == 0)
        throw Error(ErrorKind::InvalidInput, "algebra dimension must be positive");
    if (names_.size() != dim_)
        throw Error(ErrorKind::InvalidInput, "basis name count != dim");
    for (const auto& [key, coeffs] : table_) {
        if (key.first >= key.second)
            throw Error(ErrorKind::InvalidInput, "bracket key requires i < j");
        if (key.second >= dim_)
            throw Error(ErrorKind::InvalidInput, "bracket key index out of range");
        if (coeffs.size() != dim_)
            throw Error(ErrorKind::InvalidInput, "bracket coefficient vector length != dim");
    }
    if (cartan_.empty())
        throw Error(ErrorKind::InvalidInput, "cartan_indices must be nonempty");
    std::set<std::size_t> seen;
    for (std::size_t c : cartan_) {
        if (c >= dim_)
            throw Error(ErrorKind::InvalidInput, "cartan index out of range");
        if (!seen.insert(c).second)
            throw Error(ErrorKind::InvalidInput, "cartan indices must be distinct");
    }
    if (auto bad = jacobi_failure(dim_, table_)) {
        const auto& [i, j, k] = *bad;
        throw Error(ErrorKind::JacobiFailure,
                    "Jacobi identity fails on basis triple (" + names_[i] + ", " + names_[j] +
                        ", " + names_[k] + ") = (" + std::to_string(i) + "," + std::to_string(j) +
                        "," + std::to_string(k) + ")");
    }
}

std::optional<std::array<std::size_t, 3>> LieAlgebra::jacobi_failure(std::size_t dim,
                                                                     const BracketTable& table) {
    auto bb = [&](std::size_t i, std::size_t j) { return bracket_from_table(dim, table, i, j); };
    auto bv = [&](const Vec& x, std::size_t k) {
        Vec acc(dim);
        for (std::size_t i = 0; i < dim; ++i)
            if (!x[i].is_zero())
                acc = vec_add(acc, vec_scale(x[i], bb(i, k)));
        return acc;
    };
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (std::size_t k = j + 1; k < dim; ++k) {
                // [[i,j],k] + [[j,k],i] + [[k,i],j] = 0
                Vec s = bv(bb(i, j), k);
                s = vec_add(s, bv(bb(j, k), i));
                s = vec_add(s, bv(bb(k, i), j));
                if (!vec_is_zero(s))
                    return std::array<std::size_t, 3>{i, j, k};
            }
    return std::nullopt;
}

Vec LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
    if (i >= dim_ || j >= dim_)
        throw Error(ErrorKind::InvalidInput, "basis index out of range");
    return bracket_from_table(dim_, table_, i, j);
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "bracket operand length != dim");
    Vec acc(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim_; ++j) {
            if (y[j].is_zero())
                continue;
            acc = vec_add(acc, vec_scale(x[i] * y[j], bracket_basis(i, j)));
        }
    }
    return acc;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const {
    Matrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
        Vec image = bracket_basis(i, j);
        for (std::size_t r = 0; r < dim_; ++r)
            m.at(r, j) = image[r];
    }
    return m;
}

Matrix LieAlgebra::ad(const Vec& x) const {
    if (x.size() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "ad operand length != dim");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i)
        if (!x[i].is_zero())
            m = m + ad_basis(i).scaled(x[i]);
    return m;
}

Subspace LieAlgebra::bracket_space(const Subspace& xs, const Subspace& ys) const {
    if (xs.ambient_dim() != dim_ || ys.ambient_dim() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "subspace ambient != dim");
    std::vector<Vec> rows;
    for (std::size_t a = 0; a < xs.dim(); ++a)
        for (std::size_t b = 0; b < ys.dim(); ++b)
            rows.push_back(bracket(xs.basis_row(a), ys.basis_row(b)));
    return Subspace::span(dim_, rows);
}

Subspace LieAlgebra::center() const {
    // c is central iff ad_{e_i}(c) = 0 for all i: kernel of the stacked ads.
    Matrix stacked(dim_ * dim_, dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        Matrix adi = ad_basis(i);
        for (std::size_t r = 0; r < dim_; ++r)
            for (std::size_t c = 0; c < dim_; ++c)
                stacked.at(i * dim_ + r, c) = adi.at(r, c);
    }
    return kernel(stacked);
}

Subspace LieAlgebra::derived() const {
    std::vector<Vec> rows;
    for (const auto& [key, coeffs] : table_)
        rows.push_back(coeffs);
    return Subspace::span(dim_, rows);
}

bool LieAlgebra::is_perfect() const { return derived().is_full() && center().is_zero(); }

bool LieAlgebra::is_ideal(const Subspace& s) const {
    if (s.ambient_dim() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "subspace ambient != dim");
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t r = 0; r < s.dim(); ++r) {
            Vec image = bracket_basis_vec(i, s.basis_row(r));
            if (!s.contains(image))
                return false;
        }
    return true;
}

bool LieAlgebra::is_subalgebra(const Subspace& s) const {
    if (s.ambient_dim() != dim_)
        throw Error(ErrorKind::DimensionMismatch, "subspace ambient != dim");
    for (std::size_t a = 0; a < s.dim(); ++a)
        for (std::size_t b = a + 1; b < s.dim(); ++b)
            if (!s.contains(bracket(s.basis_row(a), s.basis_row(b))))
                return false;
    return true;
}

Vec LieAlgebra::bracket_basis_vec(std::size_t i, const Vec& y) const {
    Vec acc(dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        if (!y[j].is_zero())
            acc = vec_add(acc, vec_scale(y[j], bracket_basis(i, j)));
    return acc;
}

} // namespace splitlie
