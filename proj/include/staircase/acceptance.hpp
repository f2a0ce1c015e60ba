#pragma once

#include "staircase/enumerate.hpp"

#include <functional>
#include <string>
#include <vector>

namespace staircase {

struct CriterionResult {
    unsigned id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0;
};

// Runs the eleven end-to-end checks in order. Each one is exhaustive or exact;
// an exception inside a check counts as a failure with its message as detail.
// on_result, if set, is called as each check finishes.
std::vector<CriterionResult> run_acceptance(const EnumerationOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3 stationary-equivalence (1.20s) 5 sizes x 3 points"
std::string format_result(const CriterionResult& r);

} // namespace staircase
