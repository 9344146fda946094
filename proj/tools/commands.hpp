#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace umbra::cli {

/// Process exit codes shared by every command.
enum ExitCode : int {
    ok = 0,
    check_failed = 1,
    parse_failure = 2,
    invalid_parameter = 3,
    numerical_region = 4,
};

struct GlobalOptions {
    std::optional<std::string> format;  // json | csv
    std::optional<double> tolerance;
    std::uint64_t seed = 20240917;
    std::optional<unsigned> order;
    std::string output;  // empty: stdout
};

struct TransformArgs {
    std::string transform;
    std::string input;
    std::string alpha = "1";
    std::string beta = "1";
    std::optional<unsigned> k;
};

struct CheckArgs {
    std::string suite = "all";
    bool timing = false;
};

struct ExpandArgs {
    std::string family;
    std::string taylor_file;
    std::string function = "gaussian";
    std::string scale = "1";
    unsigned N = 10;
};

struct EvolveArgs {
    std::string equation;
    std::vector<double> x;
    std::vector<double> tau;
    double beta = 0.0;
    unsigned m = 2;
    // heat
    double alpha = 0.5;
    double scale = 0.5;
    double half_width = 20.0;
    std::size_t points = 1024;
};

int run_transform(const GlobalOptions& g, const TransformArgs& a);
int run_check(const GlobalOptions& g, const CheckArgs& a);
int run_expand(const GlobalOptions& g, const ExpandArgs& a);
int run_evolve(const GlobalOptions& g, const EvolveArgs& a);

}  // namespace umbra::cli
