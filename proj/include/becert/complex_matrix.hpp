#pragma once

#include <complex>
#include <vector>

namespace becert {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major. The sizes in this library are tiny
/// (4x4 and 16x16), so everything is stored by value and copied freely.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Complex& operator()(int r, int c) const {
        return data_[static_cast<std::size_t>(r) * cols_ + c];
    }

    const std::vector<Complex>& data() const { return data_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_hermitian(double tol) const;
    bool all_finite() const;

    CVector column(int c) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Kronecker product: entry ((i*p + k), (j*q + l)) = a(i,j) * b(k,l).
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
CVector kron(const CVector& a, const CVector& b);

/// Rank-one outer product u v^dagger.
ComplexMatrix outer(const CVector& u, const CVector& v);

/// Inner product <u, v>, conjugate-linear in the first argument.
Complex inner(const CVector& u, const CVector& v);

double norm(const CVector& v);
CVector normalized(const CVector& v);
CVector operator*(const ComplexMatrix& m, const CVector& v);

/// Standard basis vector e_k (0-based) of dimension n.
CVector basis_vector(int n, int k);

} // namespace becert
