#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clark::verify {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    std::string note;
};

// Oracle cross-checks: quadrature, direct and finite-difference eigenvalues, bound states.
std::vector<CheckResult> run_oracle_checks(std::uint64_t seed);

}  // namespace clark::verify
