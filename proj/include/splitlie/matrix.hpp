#pragma once

#include "splitlie/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace splitlie {

/// Dense row-major matrix over the rationals. Vectors are column vectors:
/// `mul_vec` computes m·v, so column j holds the image of the j-th basis vector.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }

    Vec row(std::size_t r) const;
    Vec col(std::size_t c) const;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    Matrix transposed() const;
    Vec mul_vec(const Vec& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> e_;
};

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots; // pivot column of each nonzero row, strictly increasing
};

/// Reduced row-echelon form (Gauss-Jordan, exact). Preserves shape; zero rows sink.
RrefResult rref_with_pivots(Matrix m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Solves a·x = b; free variables are set to 0. nullopt when inconsistent.
std::optional<Vec> solve(const Matrix& a, const Vec& b);

} // namespace splitlie
