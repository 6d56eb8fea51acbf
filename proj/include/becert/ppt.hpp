#pragma once

#include <array>
#include <utility>
#include <vector>

#include "becert/complex_matrix.hpp"
#include "becert/state_family.hpp"

namespace becert {

/// Min-eigenvalue cutoff under which a partial transpose still counts as
/// positive semidefinite (matches eigensolver accuracy at 16x16).
inline constexpr double kPptTol = 1e-10;

/// Detection cutoff for the trace-norm criteria: values above 1 + 1e-9 flag
/// entanglement.
inline constexpr double kTraceNormTol = 1e-9;

/// Partial transpose on subsystem 1 or 2 of a (dim_a, dim_b) bipartite
/// operator. For subsystem 2 the entry at row (i,l), column (k,j) equals the
/// input entry at row (i,j), column (k,l). Applying it twice is the identity.
/// Throws BadDimsError when the matrix is not (dim_a*dim_b) square.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, int subsystem, int dim_a = 4,
                                int dim_b = 4);
ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem = 2);

/// Reshuffle R((i,k),(j,l)) = rho((i,j),(k,l)). For equal subsystem
/// dimensions the map is an involution, so it is its own inverse.
ComplexMatrix realignment(const ComplexMatrix& rho, int dim_a = 4, int dim_b = 4);
ComplexMatrix realignment(const DensityMatrix& rho);

/// The twelve partial-transpose eigenvalues known in closed form, as
/// (value, multiplicity) groups: {0 x4} and eps/2 * |x|^2 twice for each of
/// x = a, b, c, d.
std::array<std::pair<double, int>, 5> listed_pt_eigenvalues(const FamilyParams& params);

/// Flattened copy of the listed eigenvalues (12 values).
std::vector<double> listed_pt_eigenvalues_flat(const FamilyParams& params);

/// Discriminant factor
/// [(|a|^2-|d|^2)^2 + (|b|^2+|c|^2)^2] * [(|a|^2+|d|^2)^2 + (|b|^2-|c|^2)^2].
double pt_quartic_delta1(const FamilyParams& params);

/// The remaining four eigenvalues, ascending:
///   (1-eps)/4 +- (eps/4) * sqrt(2 [S +- sqrt(delta1)]),
/// with S = |a|^4+|b|^4+|c|^4+|d|^4. Throws NegativeRadicandError if an inner
/// radicand falls below -1e-12 (never clamped silently).
std::array<double, 4> quartic_pt_roots(const FamilyParams& params);

/// Mixing threshold eps* = 1/(1 + K), K = sqrt(2 [S + sqrt(delta1)]): the
/// partial transpose stays positive semidefinite exactly for eps <= eps*.
double ppt_threshold(Complex a, Complex b, Complex c, Complex d);
double ppt_threshold(const FamilyParams& params);

/// Closed-form partial-transpose spectrum summary.
struct SpectrumReport {
    std::array<std::pair<double, int>, 5> listed; // total multiplicity 12
    std::array<double, 4> quartic_roots;          // ascending
    double delta1 = 0.0;
    double min_eig = 0.0;
    bool is_ppt = false;
};

SpectrumReport spectrum_report(const FamilyParams& params);

/// Trace-norm criteria evaluated numerically on a state.
struct CriterionReport {
    double pt_trace_norm = 0.0;
    double ccnr_trace_norm = 0.0;
    bool ppt_verdict = false;  // numeric min PT eigenvalue >= -1e-10
    bool ppt_detects = false;  // pt_trace_norm > 1 + 1e-9
    bool ccnr_detects = false; // ccnr_trace_norm > 1 + 1e-9
};

CriterionReport criterion_report(const DensityMatrix& rho);

} // namespace becert
