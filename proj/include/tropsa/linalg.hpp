#pragma once

#include "tropsa/matrix.hpp"

#include <optional>
#include <vector>

namespace tropsa::linalg {

/*
 * Fraction-free (Bareiss) row echelon form of an integer matrix.
 *
 * Rows of the input are first scaled by the lcm of their denominators, which
 * changes neither the rank nor the right kernel. Pivots are chosen in the
 * leftmost column that has a nonzero entry at or below the current row, and
 * within that column the first such row. The result is deterministic.
 */
struct Echelon {
    std::vector<IntegerVector> rows;       // echelon rows; zero rows trimmed
    std::vector<std::size_t> pivot_columns;
    std::size_t cols = 0;
};

// The row update loop below each pivot runs under OpenMP once the remaining
// block is large enough to be worth the fork.
Echelon bareiss(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Plain rational Gauss elimination. An independent route used to
// cross-check the fraction-free one.
std::size_t rank_gauss(const RationalMatrix& m);

// Basis of {x : M x = 0}. One vector per free column, each primitive with
// first nonzero entry positive.
std::vector<IntegerVector> kernel_basis(const RationalMatrix& m);

// Basis of {y : y^T M = 0}, same normalization.
std::vector<IntegerVector> left_kernel_basis(const RationalMatrix& m);

// Some x with M x = 0 and every x_i >= 1, or nullopt when the kernel misses
// the open positive orthant. Exact phase-one simplex with Bland's rule.
std::optional<RationalVector> strictly_positive_kernel_point(const RationalMatrix& m);

// Primitive integer basis of the row space, in echelon order.
std::vector<IntegerVector> row_space_basis(const std::vector<IntegerVector>& vectors, std::size_t dim);

// Solve A x = b exactly; nullopt when inconsistent. Any solution when the
// system is underdetermined (free variables set to zero).
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

std::optional<RationalMatrix> inverse(const RationalMatrix& a);

namespace serial {

// Same elimination as linalg::bareiss with no OpenMP. Kept as the reference
// the parallel path is tested and benchmarked against.
Echelon bareiss(const RationalMatrix& m);
std::size_t rank(const RationalMatrix& m);

} // namespace serial

} // namespace tropsa::linalg
