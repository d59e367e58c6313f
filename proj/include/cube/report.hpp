#pragma once

#include <map>
#include <string>

namespace cube {

inline constexpr double kVerdictSlack = 1e-12;

/// RatioOnly marks statements whose right side carries an unspecified
/// universal constant; such reports never claim violation.
enum class Verdict { Holds, Violated, RatioOnly };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Violated: return "violated";
        default: return "ratio-only";
    }
}

struct InequalityReport {
    std::string name;
    std::map<std::string, double> params;
    double lhs = 0.0;
    double rhs = 0.0;  // or constant-free rhs for ratio-only reports
    double ratio = 0.0;
    bool ratio_degenerate = false;  // rhs == 0
    Verdict verdict = Verdict::RatioOnly;
    std::string note;

    bool holds() const { return verdict != Verdict::Violated; }
};

/// lhs <= rhs up to the rounding slack.
InequalityReport make_upper_report(std::string name, double lhs, double rhs);
/// lhs >= rhs up to the rounding slack.
InequalityReport make_lower_report(std::string name, double lhs, double rhs);
InequalityReport make_ratio_report(std::string name, double lhs, double rhs);

}  // namespace cube
