#pragma once

#include <vector>

#include "scl/numbers.hpp"

namespace scl {

/// Small dense matrix of exact rationals, row-major.
using QMat = std::vector<std::vector<Rat>>;

QMat qmat_from_rows(const std::vector<std::vector<long long>>& rows);

/// Positive semidefiniteness of a symmetric matrix, exact.
/// Pivots on a nonzero diagonal entry and takes Schur complements; a
/// remaining block with zero diagonal must itself be zero.
bool is_positive_semidefinite(QMat a);

/// Positive definiteness of a symmetric matrix, exact (LDL pivots all > 0).
bool is_positive_definite(QMat a);

/// Rank over Q by Gaussian elimination.
int matrix_rank(QMat a);

Rat determinant(QMat a);

/// Inverse over Q; throws std::invalid_argument if singular.
QMat inverse(QMat a);

}  // namespace scl
