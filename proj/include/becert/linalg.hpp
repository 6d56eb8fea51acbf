#pragma once

#include <vector>

#include "becert/complex_matrix.hpp"

namespace becert {

/// Default relative rank cutoff. Exact kernels of the states handled here sit
/// at machine precision, well below 1e-10 * max(1, lambda_max), while the
/// smallest genuine eigenvalues are O(eps) for any eps >= 1e-6.
inline constexpr double kDefaultRankTol = 1e-10;

/// Hermiticity tolerance accepted by the eigensolver (max |M - M^dagger| entry).
inline constexpr double kHermitianTol = 1e-12;

struct EigResult {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // unitary; column k pairs with eigenvalues[k]
};

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Converges when the off-diagonal Frobenius mass drops below
/// 1e-14 * ||M||_F; capped at 100 sweeps.
///
/// Throws NotHermitianError if the input is not Hermitian to kHermitianTol,
/// NoConvergenceError if the sweep cap is exceeded.
EigResult hermitian_eig(const ComplexMatrix& m);

/// Singular values in descending order, computed from the eigenvalues of the
/// smaller Gram matrix. Eigenvalues in [-1e-12, 0) are clamped to zero.
std::vector<double> singular_values(const ComplexMatrix& m);

/// Sum of singular values (nuclear norm).
double trace_norm(const ComplexMatrix& m);

/// Orthonormal basis of the span of eigenvectors whose eigenvalues exceed
/// tol * max(1, lambda_max).
struct RangeBasis {
    int dim = 0;                  // ambient dimension
    std::vector<CVector> vectors; // orthonormal
    double tol = kDefaultRankTol; // rank cutoff used

    int rank() const { return static_cast<int>(vectors.size()); }
};

RangeBasis orthonormal_range(const ComplexMatrix& m, double tol = kDefaultRankTol);

struct SubspaceCheck {
    bool member = false;
    double residual = 0.0; // ||v - P v|| / ||v||
};

/// Projects v onto the basis and reports the relative residual.
/// Throws ZeroVectorError for ||v|| = 0.
SubspaceCheck subspace_contains(const RangeBasis& basis, const CVector& v, double tol);

/// Orthonormal basis of the linear span of the given vectors, via the
/// eigendecomposition of the normalized Gram accumulation. The resulting rank
/// does not depend on input ordering. Zero vectors are skipped.
RangeBasis span_of(const std::vector<CVector>& vectors, double tol = kDefaultRankTol);

} // namespace becert
