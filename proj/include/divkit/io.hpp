#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "divkit/divergence.hpp"
#include "divkit/dynsys.hpp"
#include "divkit/measure.hpp"

namespace divkit {

// Measure file: {"space": ["a", "b"], "weights": [0.5, 0.5]}.
SignedMeasure signed_measure_from_json(const nlohmann::json& j);
FiniteMeasure finite_measure_from_json(const nlohmann::json& j);
SignedMeasure read_signed_measure(const std::filesystem::path& path);
FiniteMeasure read_finite_measure(const std::filesystem::path& path);

nlohmann::ordered_json measure_to_json(const SignedMeasure& m);

// System file: {"space": [...], "map": [0-based indices], "weights": [...],
// "phi": [...] (optional)}.
struct SystemFile {
    TransferOperator op;
    std::optional<std::vector<double>> phi;
};

SystemFile system_from_json(const nlohmann::json& j);
SystemFile read_system(const std::filesystem::path& path);

// Extended reals in structured output: finite values as numbers, infinities
// as the strings "inf" / "-inf".
nlohmann::ordered_json ext_real_to_json(ExtReal x);

nlohmann::ordered_json report_to_json(const DivergenceReport& r);
nlohmann::ordered_json decomposition_to_json(const LebesgueDecomposition& d);
nlohmann::ordered_json variational_to_json(const VariationalReport& r);

}  // namespace divkit
