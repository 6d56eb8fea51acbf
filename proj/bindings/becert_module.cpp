#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "becert/errors.hpp"
#include "becert/json_io.hpp"
#include "becert/linalg.hpp"
#include "becert/ppt.hpp"
#include "becert/range_criterion.hpp"
#include "becert/state_family.hpp"

namespace py = pybind11;
using namespace becert;

namespace {

using ComplexArray = py::array_t<std::complex<double>, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const ComplexArray& arr) {
    if (arr.ndim() != 2) throw BadDimsError("expected a two-dimensional array");
    ComplexMatrix m(static_cast<int>(arr.shape(0)), static_cast<int>(arr.shape(1)));
    const auto view = arr.unchecked<2>();
    for (py::ssize_t r = 0; r < arr.shape(0); ++r)
        for (py::ssize_t c = 0; c < arr.shape(1); ++c)
            m(static_cast<int>(r), static_cast<int>(c)) = view(r, c);
    return m;
}

py::array_t<std::complex<double>> array_from_matrix(const ComplexMatrix& m) {
    py::array_t<std::complex<double>> arr({m.rows(), m.cols()});
    auto view = arr.mutable_unchecked<2>();
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) view(r, c) = m(r, c);
    return arr;
}

DensityMatrix density_from_array(const ComplexArray& arr) {
    return DensityMatrix::from_matrix(matrix_from_array(arr));
}

FamilyParams make_params(Complex a, Complex b, Complex c, Complex d, double eps) {
    FamilyParams p{a, b, c, d, eps};
    p.validate();
    return p;
}

py::dict spectrum_dict(const SpectrumReport& report) {
    py::list listed;
    for (const auto& [value, mult] : report.listed) listed.append(py::make_tuple(value, mult));
    py::dict d;
    d["listed"] = listed;
    d["quartic_roots"] = report.quartic_roots;
    d["delta1"] = report.delta1;
    d["min_eig"] = report.min_eig;
    d["is_ppt"] = report.is_ppt;
    return d;
}

py::dict criterion_dict(const CriterionReport& report) {
    py::dict d;
    d["pt_trace_norm"] = report.pt_trace_norm;
    d["ccnr_trace_norm"] = report.ccnr_trace_norm;
    d["ppt_verdict"] = report.ppt_verdict;
    d["ppt_detects"] = report.ppt_detects;
    d["ccnr_detects"] = report.ccnr_detects;
    return d;
}

py::dict certificate_dict(const Certificate& cert) {
    py::dict d;
    d["eps"] = cert.eps;
    d["rank_rho"] = cert.rank_rho;
    d["rank_pt"] = cert.rank_pt;
    d["pcc_span_rank"] = cert.pcc_span_rank;
    d["witness_in_range_pt"] = cert.witness_in_range_pt;
    d["witness_in_pcc_span"] = cert.witness_in_pcc_span;
    d["verdict"] = verdict_name(cert.verdict);
    return d;
}

} // namespace

PYBIND11_MODULE(_becert, m) {
    m.doc() = "Core operations for the 4x4 bipartite state family: state "
              "construction, partial transpose and realignment criteria, and "
              "range-criterion certificates.";

    py::register_exception<Error>(m, "Error");

    m.def(
        "family_state",
        [](Complex a, Complex b, Complex c, Complex d, double eps) {
            return array_from_matrix(family_state(make_params(a, b, c, d, eps)).matrix());
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("eps"),
        "The 16x16 family state for parameters (a, b, c, d, eps).");

    m.def(
        "symmetric_state",
        [](double eps) { return array_from_matrix(symmetric_instance(eps).matrix()); },
        py::arg("eps"), "The family state at a = b = c = d = 1/2.");

    m.def(
        "rho0",
        [](Complex a, Complex b, Complex c, Complex d) {
            return array_from_matrix(rho0(make_params(a, b, c, d, 1.0)).matrix());
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "The rank-4 mixture of the four generator projectors.");

    m.def(
        "diag_separable",
        []() { return array_from_matrix(diag_separable().matrix()); },
        "The diagonal separable part (1/4 on the four product diagonals).");

    m.def(
        "partial_transpose",
        [](const ComplexArray& arr, int subsystem) {
            return array_from_matrix(partial_transpose(matrix_from_array(arr), subsystem));
        },
        py::arg("rho"), py::arg("subsystem") = 2,
        "Partial transpose on subsystem 1 or 2 of a 16x16 bipartite operator.");

    m.def(
        "realignment",
        [](const ComplexArray& arr) {
            return array_from_matrix(realignment(matrix_from_array(arr)));
        },
        py::arg("rho"), "The reshuffled matrix R((i,k),(j,l)) = rho((i,j),(k,l)).");

    m.def(
        "hermitian_eig",
        [](const ComplexArray& arr) {
            const EigResult eig = hermitian_eig(matrix_from_array(arr));
            return py::make_tuple(eig.eigenvalues, array_from_matrix(eig.eigenvectors));
        },
        py::arg("m"),
        "Ascending eigenvalues and the unitary of eigenvectors of a Hermitian matrix.");

    m.def(
        "singular_values",
        [](const ComplexArray& arr) { return singular_values(matrix_from_array(arr)); },
        py::arg("m"), "Singular values in descending order.");

    m.def(
        "trace_norm",
        [](const ComplexArray& arr) { return trace_norm(matrix_from_array(arr)); },
        py::arg("m"), "Sum of singular values.");

    m.def(
        "ppt_threshold",
        [](Complex a, Complex b, Complex c, Complex d) { return ppt_threshold(a, b, c, d); },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "eps* = 1/(1+K): the partial transpose is PSD exactly for eps <= eps*.");

    m.def(
        "listed_pt_eigenvalues",
        [](Complex a, Complex b, Complex c, Complex d, double eps) {
            py::list out;
            for (const auto& [value, mult] :
                 listed_pt_eigenvalues(make_params(a, b, c, d, eps)))
                out.append(py::make_tuple(value, mult));
            return out;
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("eps"),
        "The twelve closed-form PT eigenvalues as (value, multiplicity) groups.");

    m.def(
        "quartic_pt_roots",
        [](Complex a, Complex b, Complex c, Complex d, double eps) {
            return quartic_pt_roots(make_params(a, b, c, d, eps));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("eps"),
        "The four remaining closed-form PT eigenvalues, ascending.");

    m.def(
        "spectrum_report",
        [](Complex a, Complex b, Complex c, Complex d, double eps) {
            return spectrum_dict(spectrum_report(make_params(a, b, c, d, eps)));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("eps"));

    m.def(
        "criterion_report",
        [](const ComplexArray& arr) {
            return criterion_dict(criterion_report(density_from_array(arr)));
        },
        py::arg("rho"), "Trace-norm criteria for a validated density matrix.");

    m.def(
        "certify",
        [](Complex a, Complex b, Complex c, Complex d, double eps, std::uint64_t seed) {
            return certificate_dict(certify(make_params(a, b, c, d, eps), seed));
        },
        py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("eps"),
        py::arg("seed") = 0,
        "Run the range-criterion pipeline and return the certificate fields.");

    m.def(
        "certify_symmetric",
        [](double eps, std::uint64_t seed) {
            return certificate_dict(certify(FamilyParams::symmetric(eps), seed));
        },
        py::arg("eps"), py::arg("seed") = 0);

    m.attr("__version__") = "0.1.0";
}
