#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "becert/complex_matrix.hpp"
#include "becert/state_family.hpp"

namespace becert::testutil {

inline double uniform_pm1(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * (2.0 / 9007199254740992.0) - 1.0;
}

inline Complex random_complex(std::mt19937_64& rng) {
    return {uniform_pm1(rng), uniform_pm1(rng)};
}

inline ComplexMatrix random_matrix(int rows, int cols, std::mt19937_64& rng) {
    ComplexMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m(r, c) = random_complex(rng);
    return m;
}

inline ComplexMatrix random_hermitian(int n, std::mt19937_64& rng) {
    ComplexMatrix m = random_matrix(n, n, rng);
    ComplexMatrix h = m;
    h += m.adjoint();
    h *= 0.5;
    return h;
}

/// Random unitary from modified Gram-Schmidt on a random matrix.
inline ComplexMatrix random_unitary(int n, std::mt19937_64& rng) {
    std::vector<CVector> cols;
    while (static_cast<int>(cols.size()) < n) {
        CVector v(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) v[i] = random_complex(rng);
        for (const CVector& u : cols) {
            const Complex coeff = inner(u, v);
            for (int i = 0; i < n; ++i) v[i] -= coeff * u[i];
        }
        if (norm(v) < 1e-6) continue;
        cols.push_back(normalized(v));
    }
    ComplexMatrix u(n, n);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) u(r, c) = cols[c][r];
    return u;
}

inline FamilyParams random_params(std::mt19937_64& rng, double eps_lo = 0.0,
                                  double eps_hi = 1.0) {
    FamilyParams p = FamilyParams::normalized(random_complex(rng), random_complex(rng),
                                              random_complex(rng), random_complex(rng), 0.0);
    p.eps = eps_lo + (uniform_pm1(rng) + 1.0) * 0.5 * (eps_hi - eps_lo);
    return p;
}

/// Max elementwise deviation between two spectra compared as sorted multisets.
inline double multiset_deviation(std::vector<double> lhs, std::vector<double> rhs) {
    if (lhs.size() != rhs.size()) return 1e300;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    double dev = 0.0;
    for (std::size_t i = 0; i < lhs.size(); ++i) dev = std::max(dev, std::abs(lhs[i] - rhs[i]));
    return dev;
}

/// Independent oracle for the symmetric-instance spectrum: the matrix is
/// block-diagonal with four 1x1 blocks (1-eps)/4, four zero rows, and four
/// 2x2 blocks [[e/8, -e/8], [-e/8, e/8]], so the eigenvalues follow from the
/// quadratic formula per block.
inline std::vector<double> symmetric_spectrum_oracle(double eps) {
    std::vector<double> spectrum;
    for (int i = 0; i < 4; ++i) spectrum.push_back((1.0 - eps) / 4.0);
    for (int i = 0; i < 4; ++i) spectrum.push_back(0.0);
    const double diag = eps / 8.0, off = -eps / 8.0;
    const double mean = diag, radius = std::abs(off);
    for (int i = 0; i < 4; ++i) {
        spectrum.push_back(mean - radius);
        spectrum.push_back(mean + radius);
    }
    std::sort(spectrum.begin(), spectrum.end());
    return spectrum;
}

/// The symmetric-instance matrix built directly from its printed entry
/// pattern, independent of the projector construction.
inline ComplexMatrix symmetric_pattern_matrix(double eps) {
    ComplexMatrix m(16, 16);
    const double x1 = (1.0 - eps) / 4.0;
    const double x = eps / 8.0;
    for (int k : {0, 5, 10, 15}) m(k, k) = x1;
    // coupled index pairs (0-based): (1,4), (2,8), (7,13), (11,14)
    for (auto [p, q] : {std::pair{1, 4}, {2, 8}, {7, 13}, {11, 14}}) {
        m(p, p) = x;
        m(q, q) = x;
        m(p, q) = -x;
        m(q, p) = -x;
    }
    return m;
}

} // namespace becert::testutil
