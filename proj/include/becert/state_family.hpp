#pragma once

#include <utility>

#include "becert/complex_matrix.hpp"

namespace becert {

/// Parameters (a, b, c, d, eps) selecting one state of the 4x4 family.
/// Valid parameters satisfy |a|^2+|b|^2+|c|^2+|d|^2 = 1 (to 1e-12) and
/// 0 <= eps <= 1; only then is the constructed matrix a state.
struct FamilyParams {
    Complex a;
    Complex b;
    Complex c;
    Complex d;
    double eps = 0.0;

    /// a = b = c = d = 1/2.
    static FamilyParams symmetric(double eps);

    /// Rescales (a, b, c, d) to satisfy the normalization constraint.
    static FamilyParams normalized(Complex a, Complex b, Complex c, Complex d, double eps);

    double norm_sq() const;

    /// Throws NormalizationError / EpsRangeError on violation.
    void validate() const;
};

inline constexpr double kNormalizationTol = 1e-12;

/// Antisymmetric 4x4 coefficient matrix
///   [  0   b1   a  -c ]
///   [ -b1  0    c   d ]
///   [ -a  -c    0  -c1 ]
///   [  c  -d   c1   0 ]
ComplexMatrix antisym_coeff_matrix(Complex a, Complex c, Complex d, Complex b1, Complex c1);

/// Standard antisymmetric forms: block-diagonal and anti-diagonal pair layout.
ComplexMatrix standard_form_a1(Complex lambda1, Complex lambda2);
ComplexMatrix standard_form_a2(Complex lambda1, Complex lambda2);

/// Vectorization of a 4x4 coefficient matrix: amplitude at 4*i + j is A(i,j),
/// with the product basis ordered e1*e1, e1*e2, ..., e4*e4.
CVector pure_from_coeffs(const ComplexMatrix& coeffs);

/// The four generator vectors, unnormalized exactly as printed:
///   psi_b(sign) = [0, sign*b, 0, 0, -sign*b, 0,...,0, -c, 0, 0, c, 0]
///   psi_a(sign) = [0, 0, sign*a, 0, 0, 0, 0, d, -sign*a, 0,...,0, -d, 0, 0]
CVector psi_b(int sign, Complex b, Complex c);
CVector psi_a(int sign, Complex a, Complex d);

/// Equal mixtures of the +/- projectors. Trace is 2(|b|^2+|c|^2) resp.
/// 2(|a|^2+|d|^2), so these are not yet normalized states.
ComplexMatrix rho_b(Complex b, Complex c);
ComplexMatrix rho_a(Complex a, Complex d);

/// A validated 16x16 density matrix on the (4,4) bipartite split:
/// Hermitian to 1e-12, unit trace to 1e-12, smallest eigenvalue >= -1e-10.
class DensityMatrix {
public:
    static constexpr int kSubsystemDim = 4;
    static constexpr int kTotalDim = 16;

    /// Validates and wraps. Throws StateValidationError on violation.
    static DensityMatrix from_matrix(ComplexMatrix m);

    const ComplexMatrix& matrix() const { return m_; }
    std::pair<int, int> dims() const { return {kSubsystemDim, kSubsystemDim}; }

private:
    explicit DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {}
    ComplexMatrix m_;
};

/// rho_0 = (rho_a + rho_b) / 2; a rank-4 state under the normalization
/// constraint.
DensityMatrix rho0(const FamilyParams& params);

/// Diagonal separable part: 1/4 at the four e_i * e_i diagonal positions.
DensityMatrix diag_separable();

/// rho(eps) = (1 - eps) * diag_separable() + eps * rho_0.
DensityMatrix family_state(const FamilyParams& params);

/// family_state at a = b = c = d = 1/2.
DensityMatrix symmetric_instance(double eps);

} // namespace becert
