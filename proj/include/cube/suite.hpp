#pragma once

#include <string>
#include <vector>

#include "cube/bias.hpp"

namespace cube {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// All dyadic biases t/2^m with m <= m_max.
std::vector<DyadicBias> bias_grid(int m_max);

/// Runs the full verification suite (one result per criterion).
std::vector<CriterionResult> run_acceptance_suite(int jobs = 0);

}  // namespace cube
