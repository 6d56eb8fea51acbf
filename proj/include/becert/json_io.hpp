#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "becert/ppt.hpp"
#include "becert/range_criterion.hpp"
#include "becert/state_family.hpp"

namespace becert {

inline constexpr const char* kSchemaVersion = "1";

/// State file layout: {"dims": [4,4], "matrix": 16x16 of [re,im], "params"?}.
/// Complex numbers are always [re, im] number pairs.
nlohmann::json state_to_json(const DensityMatrix& rho,
                             const std::optional<FamilyParams>& params = std::nullopt);

struct LoadedState {
    DensityMatrix state;
    std::optional<FamilyParams> params;
};

/// Parses and validates a state file (Hermitian / trace / PSD checks apply).
/// Throws StateValidationError or nlohmann::json exceptions on bad input.
LoadedState state_from_json(const nlohmann::json& j);

nlohmann::json spectrum_to_json(const SpectrumReport& report);
nlohmann::json criterion_to_json(const CriterionReport& report);
nlohmann::json certificate_to_json(const Certificate& cert);
nlohmann::json params_to_json(const FamilyParams& params);

} // namespace becert
