#pragma once

#include <ostream>
#include <string>
#include <vector>

/// Results of the identity suites and their serialization.
namespace umbra::checks {

enum class Status { pass, fail, flagged_errata };

const char* to_string(Status s);

struct CheckResult {
    std::string suite;
    /// Descriptive identity tag, e.g. "binomial-involution".
    std::string tag;
    std::string description;
    Status status = Status::fail;
    double residual = 0.0;
    double tolerance = 0.0;
    double runtime = 0.0;  // seconds
    /// Extra context: node counts, the printed form that was compared, ...
    std::string detail;
};

struct RunReport {
    std::string suite;
    std::vector<CheckResult> checks;

    /// True when some check that is not flagged-errata failed.
    bool any_failure() const;
};

enum class Format { json, csv };

/// Runtimes vary between runs, so they are written only on request; the
/// default output is byte-identical across identical invocations.
void write_report(std::ostream& os, const RunReport& report, Format format, bool with_timing = false);

}  // namespace umbra::checks
