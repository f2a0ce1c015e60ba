// Runs every acceptance criterion, one line each; nonzero exit if any fails.
#include "staircase/acceptance.hpp"

#include <iostream>

int main()
{
    bool ok = true;
    staircase::run_acceptance({}, [&](const staircase::CriterionResult& r) {
        std::cout << staircase::format_result(r) << std::endl;
        ok = ok && r.passed;
    });
    std::cout << (ok ? "acceptance: all criteria passed" : "acceptance: FAILED") << "\n";
    return ok ? 0 : 1;
}
