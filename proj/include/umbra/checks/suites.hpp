#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "umbra/checks/report.hpp"

namespace umbra::checks {

struct CheckOptions {
    /// Replaces every nonzero tolerance; exact checks stay exact.
    std::optional<double> tolerance;
    /// Seed of the randomized property suites.
    std::uint64_t seed = 20240917;
    /// Truncation order of the generating-function comparisons.
    std::optional<unsigned> order;
};

/// Suite names in run order; "all" is accepted by run_suite as well.
std::vector<std::string> suite_names();

/// Runs one suite, or every suite for "all". InvalidParameter for an unknown name.
RunReport run_suite(const std::string& name, const CheckOptions& opts = {});

}  // namespace umbra::checks
