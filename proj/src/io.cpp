#include "cube/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cube {
namespace io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

CubeFunction function_from_truth_hex(int n, const std::string& hex) {
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> v(size, 0.0);
    // last hex char holds points 0..3, the one before it points 4..7, etc.
    for (std::size_t k = 0; k < size; ++k) {
        const std::size_t nibble = k / 4;
        if (nibble >= hex.size()) break;
        const char c = hex[hex.size() - 1 - nibble];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
        else throw std::invalid_argument("read_function: bad hex digit in truth_hex");
        v[k] = static_cast<double>((d >> (k % 4)) & 1);
    }
    return CubeFunction(n, std::move(v));
}

std::string truth_hex_of(const CubeFunction& f) {
    const std::size_t digits = (f.size() + 3) / 4;
    std::string hex(digits, '0');
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (f[k] != 1.0) continue;
        const std::size_t nibble = k / 4;
        char& c = hex[digits - 1 - nibble];
        int d = (c <= '9') ? c - '0' : c - 'a' + 10;
        d |= 1 << (k % 4);
        c = d < 10 ? char('0' + d) : char('a' + d - 10);
    }
    return hex;
}

}  // namespace

FunctionFile read_function(const nlohmann::json& j) {
    FunctionFile out;
    const int n = j.at("n").get<int>();
    if (j.contains("bias"))
        out.bias = make_bias(j["bias"].at("t").get<std::int64_t>(),
                             j["bias"].at("m").get<std::int64_t>());
    if (j.contains("values")) {
        auto values = j["values"].get<std::vector<double>>();
        out.function = CubeFunction(n, std::move(values));
    } else if (j.contains("truth_hex")) {
        out.function = function_from_truth_hex(n, j["truth_hex"].get<std::string>());
    } else {
        throw std::invalid_argument("read_function: need \"values\" or \"truth_hex\"");
    }
    return out;
}

FunctionFile read_function_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open function file: " + path);
    nlohmann::json j;
    in >> j;
    return read_function(j);
}

nlohmann::json write_function(const CubeFunction& f, const std::optional<DyadicBias>& bias) {
    nlohmann::json j;
    j["n"] = f.n();
    if (bias) j["bias"] = {{"t", bias->t}, {"m", bias->m}};
    if (f.is_boolean())
        j["truth_hex"] = truth_hex_of(f);
    else
        j["values"] = f.values();
    return j;
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
    nlohmann::json rows = nlohmann::json::array();
    for (Mask S = 0; S < s.coeffs.size(); ++S)
        rows.push_back({S, popcount(S), s.coeffs[S]});
    return {{"n", s.n}, {"p", s.p}, {"rows", rows}};
}

Spectrum spectrum_from_json(const nlohmann::json& j) {
    Spectrum s;
    s.n = j.at("n").get<int>();
    s.p = j.at("p").get<double>();
    s.coeffs.assign(std::size_t{1} << s.n, 0.0);
    for (const auto& row : j.at("rows")) {
        const Mask S = row.at(0).get<Mask>();
        s.coeffs.at(S) = row.at(2).get<double>();
    }
    return s;
}

void spectrum_to_csv(const Spectrum& s, std::ostream& out) {
    out << "subset_mask,level,coefficient\n";
    for (Mask S = 0; S < s.coeffs.size(); ++S)
        out << S << ',' << popcount(S) << ',' << format_double(s.coeffs[S]) << '\n';
}

nlohmann::json report_to_json(const InequalityReport& r) {
    nlohmann::json j{{"name", r.name},
                     {"params", r.params},
                     {"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"ratio", r.ratio},
                     {"verdict", to_string(r.verdict)}};
    if (r.ratio_degenerate) j["ratio_degenerate"] = true;
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

void reports_to_csv(const std::vector<InequalityReport>& rs, std::ostream& out) {
    out << "name,lhs,rhs,ratio,verdict,note\n";
    for (const auto& r : rs)
        out << r.name << ',' << format_double(r.lhs) << ',' << format_double(r.rhs) << ','
            << format_double(r.ratio) << ',' << to_string(r.verdict) << ',' << r.note << '\n';
}

void tightness_to_csv(const std::vector<TightnessRow>& rows, std::ostream& out) {
    out << "n,p,measure_A,measure_boundary,directional,boundary_asymptotic,"
           "directional_asymptotic,boundary_ratio,directional_ratio,product,"
           "square_sum,square_sum_limit,square_sum_ratio\n";
    for (const auto& r : rows) {
        out << r.n << ',' << format_double(r.p) << ',' << format_double(r.measure_A) << ','
            << format_double(r.measure_boundary) << ',' << format_double(r.directional) << ','
            << format_double(r.boundary_asymptotic) << ','
            << format_double(r.directional_asymptotic) << ',' << format_double(r.boundary_ratio)
            << ',' << format_double(r.directional_ratio) << ',' << format_double(r.product) << ','
            << format_double(r.square_sum) << ',' << format_double(r.square_sum_limit) << ','
            << format_double(r.square_sum_ratio) << '\n';
    }
}

nlohmann::json tightness_to_json(const std::vector<TightnessRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"n", r.n},
                       {"p", r.p},
                       {"measure_A", r.measure_A},
                       {"measure_boundary", r.measure_boundary},
                       {"directional", r.directional},
                       {"boundary_ratio", r.boundary_ratio},
                       {"directional_ratio", r.directional_ratio},
                       {"product", r.product},
                       {"square_sum", r.square_sum},
                       {"square_sum_ratio", r.square_sum_ratio}});
    }
    return arr;
}

}  // namespace io
}  // namespace cube
