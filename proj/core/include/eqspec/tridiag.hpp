#pragma once

#include <cstddef>
#include <vector>

namespace eqspec {

// Symmetric tridiagonal matrix: diagonal d[0..n-1], off-diagonal e[0..n-2].
struct TridiagonalSym {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    std::size_t size() const noexcept { return diagonal.size(); }
};

struct EigenPairs {
    std::vector<double> values;              // ascending
    std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]
};

// k lowest eigenpairs of a symmetric tridiagonal matrix.
// Eigenvalues by Sturm-sequence bisection (deterministic), eigenvectors by
// shifted inverse iteration, re-orthogonalized pairwise and normalized so
// that weight * sum v_i^2 = 1 (weight = grid spacing for grid functions,
// 1 for the plain l2 inner product). Sign convention: the first component
// exceeding 1e-6 * max|v| is positive.
// Throws NumericError carrying the failing index on non-convergence.
EigenPairs eigensolve(const TridiagonalSym& m, std::size_t k, double weight = 1.0);

// Number of eigenvalues strictly below x (Sturm count); exposed for tests.
std::size_t sturm_count(const TridiagonalSym& m, double x);

}  // namespace eqspec
