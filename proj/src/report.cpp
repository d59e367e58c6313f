#include "cube/report.hpp"

#include <cmath>

namespace cube {

namespace {

void fill_ratio(InequalityReport& r) {
    if (r.rhs != 0.0) {
        r.ratio = r.lhs / r.rhs;
    } else {
        r.ratio = 0.0;
        r.ratio_degenerate = true;
    }
}

}  // namespace

InequalityReport make_upper_report(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    fill_ratio(r);
    r.verdict = lhs <= rhs + kVerdictSlack ? Verdict::Holds : Verdict::Violated;
    return r;
}

InequalityReport make_lower_report(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    fill_ratio(r);
    r.verdict = lhs >= rhs - kVerdictSlack ? Verdict::Holds : Verdict::Violated;
    return r;
}

InequalityReport make_ratio_report(std::string name, double lhs, double rhs) {
    InequalityReport r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    fill_ratio(r);
    r.verdict = Verdict::RatioOnly;
    return r;
}

}  // namespace cube
