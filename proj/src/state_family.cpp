#include "becert/state_family.hpp"

#include <cmath>
#include <string>

#include "becert/errors.hpp"
#include "becert/linalg.hpp"

namespace becert {

FamilyParams FamilyParams::symmetric(double eps) { return {0.5, 0.5, 0.5, 0.5, eps}; }

FamilyParams FamilyParams::normalized(Complex a, Complex b, Complex c, Complex d, double eps) {
    const double n = std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
    if (n == 0.0) throw NormalizationError("family parameters are all zero");
    return {a / n, b / n, c / n, d / n, eps};
}

double FamilyParams::norm_sq() const {
    return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d);
}

void FamilyParams::validate() const {
    if (!(eps >= 0.0 && eps <= 1.0))
        throw EpsRangeError("eps = " + std::to_string(eps) + " outside [0, 1]");
    const double n = norm_sq();
    if (!std::isfinite(n)) throw NormalizationError("family parameters are not finite");
    if (std::abs(n - 1.0) > kNormalizationTol)
        throw NormalizationError("|a|^2+|b|^2+|c|^2+|d|^2 = " + std::to_string(n) +
                                 " violates the unit constraint");
}

ComplexMatrix antisym_coeff_matrix(Complex a, Complex c, Complex d, Complex b1, Complex c1) {
    ComplexMatrix m(4, 4);
    m(0, 1) = b1;
    m(0, 2) = a;
    m(0, 3) = -c;
    m(1, 0) = -b1;
    m(1, 2) = c;
    m(1, 3) = d;
    m(2, 0) = -a;
    m(2, 1) = -c;
    m(2, 3) = -c1;
    m(3, 0) = c;
    m(3, 1) = -d;
    m(3, 2) = c1;
    return m;
}

ComplexMatrix standard_form_a1(Complex lambda1, Complex lambda2) {
    ComplexMatrix m(4, 4);
    m(0, 1) = lambda1;
    m(1, 0) = -lambda1;
    m(2, 3) = lambda2;
    m(3, 2) = -lambda2;
    return m;
}

ComplexMatrix standard_form_a2(Complex lambda1, Complex lambda2) {
    ComplexMatrix m(4, 4);
    m(0, 2) = lambda1;
    m(1, 3) = lambda2;
    m(2, 0) = -lambda1;
    m(3, 1) = -lambda2;
    return m;
}

CVector pure_from_coeffs(const ComplexMatrix& coeffs) {
    if (coeffs.rows() != 4 || coeffs.cols() != 4)
        throw BadDimsError("pure_from_coeffs: coefficient matrix must be 4x4");
    CVector v(16);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) v[4 * i + j] = coeffs(i, j);
    return v;
}

CVector psi_b(int sign, Complex b, Complex c) {
    return pure_from_coeffs(standard_form_a1(double(sign) * b, -c));
}

CVector psi_a(int sign, Complex a, Complex d) {
    return pure_from_coeffs(standard_form_a2(double(sign) * a, d));
}

ComplexMatrix rho_b(Complex b, Complex c) {
    const CVector plus = psi_b(+1, b, c);
    const CVector minus = psi_b(-1, b, c);
    ComplexMatrix m = outer(plus, plus);
    m += outer(minus, minus);
    m *= 0.5;
    return m;
}

ComplexMatrix rho_a(Complex a, Complex d) {
    const CVector plus = psi_a(+1, a, d);
    const CVector minus = psi_a(-1, a, d);
    ComplexMatrix m = outer(plus, plus);
    m += outer(minus, minus);
    m *= 0.5;
    return m;
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix m) {
    if (m.rows() != kTotalDim || m.cols() != kTotalDim)
        throw StateValidationError("density matrix must be 16x16");
    if (!m.all_finite()) throw StateValidationError("density matrix has non-finite entries");
    if (!m.is_hermitian(1e-12)) throw StateValidationError("density matrix is not Hermitian");
    const Complex tr = m.trace();
    if (std::abs(tr - Complex(1.0, 0.0)) > 1e-12)
        throw StateValidationError("density matrix trace differs from 1");
    const EigResult eig = hermitian_eig(m);
    if (eig.eigenvalues.front() < -1e-10)
        throw StateValidationError("density matrix has eigenvalue below -1e-10");
    return DensityMatrix(std::move(m));
}

DensityMatrix rho0(const FamilyParams& params) {
    params.validate();
    ComplexMatrix m = rho_a(params.a, params.d);
    m += rho_b(params.b, params.c);
    m *= 0.5;
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix diag_separable() {
    ComplexMatrix m(16, 16);
    for (int k : {0, 5, 10, 15}) m(k, k) = 0.25;
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix family_state(const FamilyParams& params) {
    params.validate();
    ComplexMatrix m = diag_separable().matrix();
    m *= (1.0 - params.eps);
    ComplexMatrix mixed = rho0(params).matrix();
    mixed *= params.eps;
    m += mixed;
    return DensityMatrix::from_matrix(std::move(m));
}

DensityMatrix symmetric_instance(double eps) { return family_state(FamilyParams::symmetric(eps)); }

} // namespace becert
