#include "splitlie/matrix.hpp"

#include "splitlie/errors.hpp"

#include <algorithm>
#include <utility>

namespace splitlie {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw Error(ErrorKind::DimensionMismatch, "row length mismatch");
        for (std::size_t c = 0; c < cols; ++c)
            m.at(r, c) = rows[r][c];
    }
    return m;
}

Vec Matrix::row(std::size_t r) const {
    Vec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        v[c] = at(r, c);
    return v;
}

Vec Matrix::col(std::size_t c) const {
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = at(r, c);
    return v;
}

bool Matrix::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix sum shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] + o.e_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix difference shape mismatch");
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = e_[i] - o.e_[i];
    return r;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i)
        r.e_[i] = c * e_[i];
    return r;
}

Matrix Matrix::transposed() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

Vec Matrix::mul_vec(const Vec& v) const {
    if (v.size() != cols_)
        throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape mismatch");
    Vec r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!at(i, j).is_zero() && !v[j].is_zero())
                r[i] += at(i, j) * v[j];
    return r;
}

RrefResult rref_with_pivots(Matrix m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows; ++col) {
        std::size_t piv = lead;
        while (piv < rows && m.at(piv, col).is_zero())
            ++piv;
        if (piv == rows)
            continue;
        if (piv != lead)
            for (std::size_t c = 0; c < cols; ++c)
                std::swap(m.at(piv, c), m.at(lead, c));
        const Rational inv = Rational(1) / m.at(lead, col);
        for (std::size_t c = col; c < cols; ++c)
            m.at(lead, c) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || m.at(r, col).is_zero())
                continue;
            const Rational f = m.at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                m.at(r, c) -= f * m.at(lead, c);
        }
        pivots.push_back(col);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return rref_with_pivots(m).mat; }

std::size_t rank(const Matrix& m) { return rref_with_pivots(m).pivots.size(); }

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
    if (b.size() != a.rows())
        throw Error(ErrorKind::DimensionMismatch, "solve shape mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j)
            aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    RrefResult rr = rref_with_pivots(std::move(aug));
    Vec x(a.cols());
    for (std::size_t r = 0; r < rr.pivots.size(); ++r) {
        if (rr.pivots[r] == a.cols())
            return std::nullopt; // pivot in the augmented column: inconsistent
        x[rr.pivots[r]] = rr.mat.at(r, a.cols());
    }
    return x;
}

} // namespace splitlie
