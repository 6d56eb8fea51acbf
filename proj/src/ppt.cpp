#include "becert/ppt.hpp"

#include <algorithm>
#include <cmath>

#include "becert/errors.hpp"
#include "becert/linalg.hpp"

namespace becert {

namespace {

void check_dims(const ComplexMatrix& rho, int dim_a, int dim_b, const char* op) {
    if (dim_a <= 0 || dim_b <= 0 || rho.rows() != dim_a * dim_b || rho.cols() != dim_a * dim_b)
        throw BadDimsError(std::string(op) + ": matrix does not match the bipartite dimensions");
}

double quartic_s(const FamilyParams& p) {
    const double a2 = std::norm(p.a), b2 = std::norm(p.b), c2 = std::norm(p.c),
                 d2 = std::norm(p.d);
    return a2 * a2 + b2 * b2 + c2 * c2 + d2 * d2;
}

} // namespace

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int subsystem, int dim_a, int dim_b) {
    check_dims(rho, dim_a, dim_b, "partial_transpose");
    if (subsystem != 1 && subsystem != 2)
        throw BadDimsError("partial_transpose: subsystem must be 1 or 2");

    ComplexMatrix out(rho.rows(), rho.cols());
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k)
                for (int l = 0; l < dim_b; ++l) {
                    const Complex value = rho(i * dim_b + j, k * dim_b + l);
                    if (subsystem == 2)
                        out(i * dim_b + l, k * dim_b + j) = value;
                    else
                        out(k * dim_b + j, i * dim_b + l) = value;
                }
    return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, int subsystem) {
    return partial_transpose(rho.matrix(), subsystem, DensityMatrix::kSubsystemDim,
                             DensityMatrix::kSubsystemDim);
}

ComplexMatrix realignment(const ComplexMatrix& rho, int dim_a, int dim_b) {
    check_dims(rho, dim_a, dim_b, "realignment");
    ComplexMatrix out(dim_a * dim_a, dim_b * dim_b);
    for (int i = 0; i < dim_a; ++i)
        for (int j = 0; j < dim_b; ++j)
            for (int k = 0; k < dim_a; ++k)
                for (int l = 0; l < dim_b; ++l)
                    out(i * dim_a + k, j * dim_b + l) = rho(i * dim_b + j, k * dim_b + l);
    return out;
}

ComplexMatrix realignment(const DensityMatrix& rho) {
    return realignment(rho.matrix(), DensityMatrix::kSubsystemDim, DensityMatrix::kSubsystemDim);
}

std::array<std::pair<double, int>, 5> listed_pt_eigenvalues(const FamilyParams& params) {
    params.validate();
    const double half_eps = 0.5 * params.eps;
    return {{{0.0, 4},
             {half_eps * std::norm(params.a), 2},
             {half_eps * std::norm(params.b), 2},
             {half_eps * std::norm(params.c), 2},
             {half_eps * std::norm(params.d), 2}}};
}

std::vector<double> listed_pt_eigenvalues_flat(const FamilyParams& params) {
    std::vector<double> flat;
    flat.reserve(12);
    for (const auto& [value, mult] : listed_pt_eigenvalues(params))
        flat.insert(flat.end(), static_cast<std::size_t>(mult), value);
    return flat;
}

double pt_quartic_delta1(const FamilyParams& params) {
    const double a2 = std::norm(params.a), b2 = std::norm(params.b), c2 = std::norm(params.c),
                 d2 = std::norm(params.d);
    const double first = (a2 - d2) * (a2 - d2) + (b2 + c2) * (b2 + c2);
    const double second = (a2 + d2) * (a2 + d2) + (b2 - c2) * (b2 - c2);
    return first * second;
}

std::array<double, 4> quartic_pt_roots(const FamilyParams& params) {
    params.validate();
    const double s = quartic_s(params);
    const double sqrt_delta1 = std::sqrt(pt_quartic_delta1(params));
    const double center = 0.25 * (1.0 - params.eps);

    std::array<double, 4> roots{};
    int idx = 0;
    for (const double inner_sign : {+1.0, -1.0}) {
        double radicand = 2.0 * (s + inner_sign * sqrt_delta1);
        if (radicand < 0.0) {
            if (radicand < -1e-12)
                throw NegativeRadicandError(
                    "quartic_pt_roots: radicand " + std::to_string(radicand) +
                    " violates S >= sqrt(delta1)");
            radicand = 0.0;
        }
        const double spread = 0.25 * params.eps * std::sqrt(radicand);
        roots[idx++] = center + spread;
        roots[idx++] = center - spread;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

double ppt_threshold(Complex a, Complex b, Complex c, Complex d) {
    return ppt_threshold(FamilyParams{a, b, c, d, 0.0});
}

double ppt_threshold(const FamilyParams& params) {
    const double k =
        std::sqrt(2.0 * (quartic_s(params) + std::sqrt(pt_quartic_delta1(params))));
    return 1.0 / (1.0 + k);
}

SpectrumReport spectrum_report(const FamilyParams& params) {
    SpectrumReport report;
    report.listed = listed_pt_eigenvalues(params);
    report.quartic_roots = quartic_pt_roots(params);
    report.delta1 = pt_quartic_delta1(params);
    report.min_eig = std::min(0.0, report.quartic_roots.front());
    report.is_ppt = report.min_eig >= -kPptTol;
    return report;
}

CriterionReport criterion_report(const DensityMatrix& rho) {
    const ComplexMatrix pt = partial_transpose(rho);
    CriterionReport report;
    report.pt_trace_norm = trace_norm(pt);
    report.ccnr_trace_norm = trace_norm(realignment(rho));
    report.ppt_verdict = hermitian_eig(pt).eigenvalues.front() >= -kPptTol;
    report.ppt_detects = report.pt_trace_norm > 1.0 + kTraceNormTol;
    report.ccnr_detects = report.ccnr_trace_norm > 1.0 + kTraceNormTol;
    return report;
}

} // namespace becert
