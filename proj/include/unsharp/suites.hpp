#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unsharp/random.hpp"

namespace unsharp {

// Outcome of one randomized property suite. `worst_slack` is the smallest
// margin seen over all inequality checks (negative means violated before
// tolerance); `max_deviation` is the largest error over equality checks.
struct SuiteResult {
    std::string name;
    long trials = 0;
    long checks = 0;
    long violations = 0;
    double worst_slack = 0.0;
    double max_deviation = 0.0;
    std::vector<std::string> failures;  // first few, for diagnostics

    bool passed() const { return violations == 0; }
};

const std::vector<std::string>& suite_names();

/// Runs one named suite with `trials` random draws per configuration.
/// Throws UnknownSuite for names not in suite_names(), ConfigError for trials < 1.
SuiteResult run_suite(const std::string& name, long trials, RngSeed seed);

}  // namespace unsharp
