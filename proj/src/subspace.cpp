#include "splitlie/subspace.hpp"

#include "splitlie/errors.hpp"

namespace splitlie {

Subspace Subspace::zero(std::size_t ambient) {
    return Subspace(ambient, Matrix(0, ambient), {});
}

Subspace Subspace::full(std::size_t ambient) {
    std::vector<std::size_t> pivots(ambient);
    for (std::size_t i = 0; i < ambient; ++i)
        pivots[i] = i;
    return Subspace(ambient, Matrix::identity(ambient), std::move(pivots));
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vec>& rows) {
    return span(Matrix::from_rows(rows, ambient));
}

Subspace Subspace::span(const Matrix& rows) {
    RrefResult rr = rref_with_pivots(rows);
    const std::size_t k = rr.pivots.size();
    Matrix basis(k, rows.cols());
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t c = 0; c < rows.cols(); ++c)
            basis.at(r, c) = rr.mat.at(r, c);
    return Subspace(rows.cols(), std::move(basis), std::move(rr.pivots));
}

std::vector<Vec> Subspace::basis_rows() const {
    std::vector<Vec> rows;
    rows.reserve(dim());
    for (std::size_t r = 0; r < dim(); ++r)
        rows.push_back(basis_.row(r));
    return rows;
}

Vec Subspace::reduce(const Vec& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorKind::DimensionMismatch, "vector/ambient mismatch");
    Vec r = v;
    // One pass suffices against an RREF basis: each pivot column appears in
    // exactly one basis row.
    for (std::size_t i = 0; i < dim(); ++i) {
        const Rational c = r[pivots_[i]];
        if (c.is_zero())
            continue;
        for (std::size_t j = 0; j < ambient_; ++j)
            r[j] -= c * basis_.at(i, j);
    }
    return r;
}

bool Subspace::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_ != ambient_)
        throw Error(ErrorKind::DimensionMismatch, "ambient dimension mismatch");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_row(r)))
            return false;
    return true;
}

std::optional<Vec> Subspace::coords_of(const Vec& v) const {
    if (v.size() != ambient_)
        throw Error(ErrorKind::DimensionMismatch, "vector/ambient mismatch");
    Vec coords(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        coords[i] = v[pivots_[i]];
    // Verify: with an RREF basis the pivot entries determine the only candidate.
    Vec recon(ambient_);
    for (std::size_t i = 0; i < dim(); ++i)
        if (!coords[i].is_zero())
            for (std::size_t j = 0; j < ambient_; ++j)
                recon[j] += coords[i] * basis_.at(i, j);
    if (recon != v)
        return std::nullopt;
    return coords;
}

Subspace sum(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw Error(ErrorKind::DimensionMismatch, "ambient dimension mismatch");
    Matrix stacked(a.dim() + b.dim(), a.ambient_);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_; ++c)
            stacked.at(r, c) = a.basis_.at(r, c);
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < a.ambient_; ++c)
            stacked.at(a.dim() + r, c) = b.basis_.at(r, c);
    return Subspace::span(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_)
        throw Error(ErrorKind::DimensionMismatch, "ambient dimension mismatch");
    const std::size_t n = a.ambient_;
    // Zassenhaus: row-reduce [A|A; B|0]; rows with zero left half carry the
    // intersection in their right half.
    Matrix z(a.dim() + b.dim(), 2 * n);
    for (std::size_t r = 0; r < a.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c) {
            z.at(r, c) = a.basis_.at(r, c);
            z.at(r, n + c) = a.basis_.at(r, c);
        }
    for (std::size_t r = 0; r < b.dim(); ++r)
        for (std::size_t c = 0; c < n; ++c)
            z.at(a.dim() + r, c) = b.basis_.at(r, c);
    RrefResult rr = rref_with_pivots(std::move(z));
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] < n)
            continue; // left half nonzero
        Vec right(n);
        for (std::size_t c = 0; c < n; ++c)
            right[c] = rr.mat.at(r, n + c);
        rows.push_back(std::move(right));
    }
    return Subspace::span(n, rows);
}

Subspace kernel(const Matrix& m) {
    RrefResult rr = rref_with_pivots(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : rr.pivots)
        is_pivot[p] = true;
    std::vector<Vec> rows;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        Vec v(n);
        v[f] = Rational(1);
        for (std::size_t r = 0; r < rr.pivots.size(); ++r)
            v[rr.pivots[r]] = -rr.mat.at(r, f);
        rows.push_back(std::move(v));
    }
    return Subspace::span(n, rows);
}

Subspace sum_all(std::size_t ambient, const std::vector<Subspace>& parts) {
    std::vector<Vec> rows;
    for (const auto& p : parts) {
        if (p.ambient_dim() != ambient)
            throw Error(ErrorKind::DimensionMismatch, "ambient dimension mismatch");
        for (std::size_t r = 0; r < p.dim(); ++r)
            rows.push_back(p.basis_row(r));
    }
    return Subspace::span(ambient, rows);
}

} // namespace splitlie
