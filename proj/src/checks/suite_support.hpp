#pragma once

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "umbra/checks/suites.hpp"
#include "umbra/rational.hpp"

namespace umbra::checks::detail {

/// Appends rows for one suite.
class SuiteBuilder {
public:
    SuiteBuilder(std::string suite, const CheckOptions& opts, std::vector<CheckResult>& out)
        : suite_(std::move(suite)), opts_(opts), out_(out) {}

    const CheckOptions& options() const noexcept { return opts_; }
    double tol(double nominal) const { return nominal > 0.0 && opts_.tolerance ? *opts_.tolerance : nominal; }

    /// pass iff residual <= tolerance and, when time_limit > 0, runtime < time_limit.
    template <class Fn>
    void check(const std::string& tag, const std::string& description, double tolerance, Fn&& residual_fn,
               double time_limit = 0.0) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        const double r = residual_fn(detail);
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const double tl = tol(tolerance);
        Status s = r <= tl ? Status::pass : Status::fail;
        if (time_limit > 0.0 && t >= time_limit) {
            s = Status::fail;
            detail += (detail.empty() ? "" : "; ") + std::string("runtime limit exceeded");
        }
        out_.push_back({suite_, tag, description, s, r, tl, t, detail});
    }

    /// A printed constant compared with the derived one: flagged-errata when
    /// the discrepancy exceeds the tolerance, fail when the two agree (the
    /// erratum claim would then be wrong).
    template <class Fn>
    void erratum(const std::string& tag, const std::string& description, double tolerance, Fn&& residual_fn) {
        std::string detail;
        const auto start = std::chrono::steady_clock::now();
        const double r = residual_fn(detail);
        const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out_.push_back({suite_, tag, description, r > tolerance ? Status::flagged_errata : Status::fail, r, tolerance, t,
                        detail});
    }

private:
    std::string suite_;
    const CheckOptions& opts_;
    std::vector<CheckResult>& out_;
};

inline Rational random_rational(std::mt19937_64& rng, long max_abs) {
    std::uniform_int_distribution<long> num(-max_abs, max_abs);
    std::uniform_int_distribution<long> den(1, max_abs);
    return ratio(Integer(num(rng)), Integer(den(rng)));
}

inline Rational abs_diff(const Rational& a, const Rational& b) { return abs(Rational(a - b)); }

void sequence_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out);
void operator_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out);
void appell_suites(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out);

}  // namespace umbra::checks::detail
