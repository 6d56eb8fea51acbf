#include "becert/json_io.hpp"

#include "becert/errors.hpp"

namespace becert {

namespace {

nlohmann::json complex_to_json(Complex z) { return nlohmann::json::array({z.real(), z.imag()}); }

Complex complex_from_json(const nlohmann::json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw StateValidationError("complex entries must be [re, im] number pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

} // namespace

nlohmann::json params_to_json(const FamilyParams& params) {
    return {{"a", complex_to_json(params.a)},
            {"b", complex_to_json(params.b)},
            {"c", complex_to_json(params.c)},
            {"d", complex_to_json(params.d)},
            {"eps", params.eps}};
}

static FamilyParams params_from_json(const nlohmann::json& j) {
    FamilyParams p;
    p.a = complex_from_json(j.at("a"));
    p.b = complex_from_json(j.at("b"));
    p.c = complex_from_json(j.at("c"));
    p.d = complex_from_json(j.at("d"));
    p.eps = j.at("eps").get<double>();
    return p;
}

nlohmann::json state_to_json(const DensityMatrix& rho, const std::optional<FamilyParams>& params) {
    nlohmann::json matrix = nlohmann::json::array();
    const ComplexMatrix& m = rho.matrix();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
        matrix.push_back(std::move(row));
    }
    nlohmann::json j = {{"dims", {4, 4}}, {"matrix", std::move(matrix)}};
    if (params) j["params"] = params_to_json(*params);
    return j;
}

LoadedState state_from_json(const nlohmann::json& j) {
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 2 || dims[0].get<int>() != 4 || dims[1].get<int>() != 4)
        throw StateValidationError("state file dims must be [4, 4]");
    const auto& matrix = j.at("matrix");
    if (!matrix.is_array() || matrix.size() != 16)
        throw StateValidationError("state file matrix must have 16 rows");
    ComplexMatrix m(16, 16);
    for (int r = 0; r < 16; ++r) {
        const auto& row = matrix[r];
        if (!row.is_array() || row.size() != 16)
            throw StateValidationError("state file matrix rows must have 16 entries");
        for (int c = 0; c < 16; ++c) m(r, c) = complex_from_json(row[c]);
    }
    LoadedState loaded{DensityMatrix::from_matrix(std::move(m)), std::nullopt};
    if (j.contains("params")) loaded.params = params_from_json(j.at("params"));
    return loaded;
}

nlohmann::json spectrum_to_json(const SpectrumReport& report) {
    nlohmann::json listed = nlohmann::json::array();
    for (const auto& [value, mult] : report.listed)
        listed.push_back({{"value", value}, {"multiplicity", mult}});
    return {{"listed", std::move(listed)},
            {"quartic_roots", report.quartic_roots},
            {"delta1", report.delta1},
            {"min_eig", report.min_eig},
            {"is_ppt", report.is_ppt}};
}

nlohmann::json criterion_to_json(const CriterionReport& report) {
    return {{"pt_trace_norm", report.pt_trace_norm},
            {"ccnr_trace_norm", report.ccnr_trace_norm},
            {"ppt_verdict", report.ppt_verdict},
            {"detects", {{"ppt", report.ppt_detects}, {"ccnr", report.ccnr_detects}}}};
}

nlohmann::json certificate_to_json(const Certificate& cert) {
    return {{"schema_version", kSchemaVersion},
            {"eps", cert.eps},
            {"rank_rho", cert.rank_rho},
            {"rank_pt", cert.rank_pt},
            {"pcc_span_rank", cert.pcc_span_rank},
            {"witness_in_range_pt", cert.witness_in_range_pt},
            {"witness_in_pcc_span", cert.witness_in_pcc_span},
            {"verdict", verdict_name(cert.verdict)}};
}

} // namespace becert
