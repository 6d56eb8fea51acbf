#include "becert/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "becert/errors.hpp"

namespace becert {

namespace {

double off_diagonal_mass(const ComplexMatrix& a) {
    double s = 0.0;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (r != c) s += std::norm(a(r, c));
    return std::sqrt(s);
}

} // namespace

EigResult hermitian_eig(const ComplexMatrix& m) {
    if (!m.is_square()) throw NotHermitianError("hermitian_eig: matrix is not square");
    if (!m.all_finite()) throw NotHermitianError("hermitian_eig: matrix has non-finite entries");
    if (!m.is_hermitian(kHermitianTol))
        throw NotHermitianError("hermitian_eig: matrix is not Hermitian within 1e-12");

    const int n = m.rows();
    // Work on the Hermitian average so roundoff asymmetry cannot accumulate.
    ComplexMatrix a(n, n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

    ComplexMatrix v = ComplexMatrix::identity(n);
    const double norm_scale = a.frobenius_norm();
    const double threshold = 1e-14 * norm_scale;

    constexpr int kMaxSweeps = 100;
    bool converged = norm_scale == 0.0 || off_diagonal_mass(a) <= threshold;
    for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a(p, q);
                const double abs_apq = std::abs(apq);
                if (abs_apq < 1e-280) {
                    a(p, q) = a(q, p) = 0.0;
                    continue;
                }
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double tau = (aqq - app) / (2.0 * abs_apq);
                const double sign_tau = tau >= 0.0 ? 1.0 : -1.0;
                const double t = sign_tau / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const Complex s = (t * c) * (apq / abs_apq);

                // Rows p and q: A <- J^dagger A.
                for (int k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk - s * aqk;
                    a(q, k) = std::conj(s) * apk + c * aqk;
                }
                // Columns p and q: A <- A J, and accumulate V <- V J.
                for (int k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = c * akp - std::conj(s) * akq;
                    a(k, q) = s * akp + c * akq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = c * vkp - std::conj(s) * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
                a(p, q) = a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
        converged = off_diagonal_mass(a) <= threshold;
    }
    if (!converged) throw NoConvergenceError("hermitian_eig: sweep cap exceeded");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int i, int j) { return a(i, i).real() < a(j, j).real(); });

    EigResult result;
    result.eigenvalues.resize(static_cast<std::size_t>(n));
    result.eigenvectors = ComplexMatrix(n, n);
    for (int k = 0; k < n; ++k) {
        result.eigenvalues[k] = a(order[k], order[k]).real();
        for (int r = 0; r < n; ++r) result.eigenvectors(r, k) = v(r, order[k]);
    }
    return result;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    const bool tall = m.rows() >= m.cols();
    const ComplexMatrix gram = tall ? m.adjoint() * m : m * m.adjoint();
    EigResult eig = hermitian_eig(gram);

    // Gram eigenvalues of exact kernel directions carry O(eps * lambda_max)
    // noise which the square root would blow up to ~1e-8; values inside the
    // noise band are therefore exact zeros. Anything below the band means the
    // solve itself failed.
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : std::max(0.0, eig.eigenvalues.back());
    const double noise_band = 1e-12 * std::max(1.0, lambda_max);

    std::vector<double> values;
    values.reserve(eig.eigenvalues.size());
    for (auto it = eig.eigenvalues.rbegin(); it != eig.eigenvalues.rend(); ++it) {
        double lambda = *it;
        if (lambda < -noise_band)
            throw NoConvergenceError("singular_values: Gram eigenvalue below the noise band");
        if (lambda <= noise_band) lambda = 0.0;
        values.push_back(std::sqrt(lambda));
    }
    return values;
}

double trace_norm(const ComplexMatrix& m) {
    const std::vector<double> sv = singular_values(m);
    return std::accumulate(sv.begin(), sv.end(), 0.0);
}

RangeBasis orthonormal_range(const ComplexMatrix& m, double tol) {
    EigResult eig = hermitian_eig(m);
    const double lambda_max = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
    const double cutoff = tol * std::max(1.0, lambda_max);

    RangeBasis basis;
    basis.dim = m.rows();
    basis.tol = tol;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k)
        if (eig.eigenvalues[k] > cutoff)
            basis.vectors.push_back(eig.eigenvectors.column(static_cast<int>(k)));
    return basis;
}

SubspaceCheck subspace_contains(const RangeBasis& basis, const CVector& v, double tol) {
    if (static_cast<int>(v.size()) != basis.dim)
        throw BadDimsError("subspace_contains: vector dimension differs from basis");
    const double vnorm = norm(v);
    if (vnorm == 0.0) throw ZeroVectorError("subspace_contains: zero vector");

    CVector residual_vec(v);
    for (const CVector& b : basis.vectors) {
        const Complex coeff = inner(b, v);
        for (std::size_t i = 0; i < residual_vec.size(); ++i) residual_vec[i] -= coeff * b[i];
    }
    SubspaceCheck check;
    check.residual = norm(residual_vec) / vnorm;
    check.member = check.residual <= tol;
    return check;
}

RangeBasis span_of(const std::vector<CVector>& vectors, double tol) {
    int dim = 0;
    for (const CVector& v : vectors)
        if (!v.empty()) {
            dim = static_cast<int>(v.size());
            break;
        }
    if (dim == 0) return RangeBasis{0, {}, tol};

    ComplexMatrix gram(dim, dim);
    for (const CVector& v : vectors) {
        if (static_cast<int>(v.size()) != dim)
            throw BadDimsError("span_of: vectors have mixed dimensions");
        const double n = norm(v);
        if (n == 0.0) continue;
        for (int r = 0; r < dim; ++r) {
            const Complex vr = v[r] / n;
            if (vr == Complex(0.0, 0.0)) continue;
            for (int c = 0; c < dim; ++c) gram(r, c) += vr * std::conj(v[c] / n);
        }
    }
    return orthonormal_range(gram, tol);
}

} // namespace becert
