#pragma once

#include "splitlie/functional.hpp"
#include "splitlie/matrix.hpp"
#include "splitlie/subspace.hpp"

#include <utility>
#include <vector>

namespace splitlie {

/// All rational eigenvalues with algebraic multiplicity, sorted ascending.
/// Throws NotSplitOverField unless the rational eigenspaces exhaust the space
/// (i.e. the matrix is diagonalizable over Q).
std::vector<Rational> rational_eigenvalues(const Matrix& m);

/// Distinct rational eigenvalues with their eigenspaces, sorted by eigenvalue.
/// Same error contract as rational_eigenvalues.
std::vector<std::pair<Rational, Subspace>> eigenspaces(const Matrix& m);

/// Common eigenspace decomposition of a commuting family. Entry i of each
/// Functional is the eigenvalue of ms[i]; results sorted lexicographically.
/// Throws NonCommuting / NotSplitOverField.
std::vector<std::pair<Functional, Subspace>> joint_eigenspaces(const std::vector<Matrix>& ms);

/// Characteristic polynomial coefficients c[0..n], c[n] = 1, of a square
/// matrix: p(x) = sum c[k] x^k. Exact (Faddeev-LeVerrier).
std::vector<Rational> characteristic_polynomial(const Matrix& m);

} // namespace splitlie
