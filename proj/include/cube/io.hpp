#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cube/bias.hpp"
#include "cube/fourier.hpp"
#include "cube/function.hpp"
#include "cube/inequality.hpp"
#include "cube/report.hpp"

namespace cube {
namespace io {

/// Doubles are serialized with 17 significant digits (round-trip exact).
std::string format_double(double v);

struct FunctionFile {
    CubeFunction function;
    std::optional<DyadicBias> bias;
};

/// { "n": int, "bias": {"t","m"}?, "values": [...] } or, for Boolean
/// functions, "truth_hex": hex string of 2^n bits with bit k = f(point k).
FunctionFile read_function(const nlohmann::json& j);
FunctionFile read_function_file(const std::string& path);
nlohmann::json write_function(const CubeFunction& f, const std::optional<DyadicBias>& bias);

nlohmann::json spectrum_to_json(const Spectrum& s);
Spectrum spectrum_from_json(const nlohmann::json& j);
/// CSV rows: subset_mask, level, coefficient.
void spectrum_to_csv(const Spectrum& s, std::ostream& out);

nlohmann::json report_to_json(const InequalityReport& r);
void reports_to_csv(const std::vector<InequalityReport>& rs, std::ostream& out);

void tightness_to_csv(const std::vector<TightnessRow>& rows, std::ostream& out);
nlohmann::json tightness_to_json(const std::vector<TightnessRow>& rows);

}  // namespace io
}  // namespace cube
