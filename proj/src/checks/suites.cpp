#include "umbra/checks/suites.hpp"

#include <algorithm>

#include "suite_support.hpp"
#include "umbra/errors.hpp"

namespace umbra::checks {

namespace {

const std::vector<std::string> sequence_names = {"involution", "modular", "k-binomial", "gf-master",
                                                 "laguerre-special", "hermite-laguerre"};
const std::vector<std::string> operator_names = {"quadrature", "hermite-integral", "heat", "tricomi",
                                                 "disentangle", "pauli", "weyl-borel", "integro", "umbral"};
const std::vector<std::string> appell_names = {"appell"};

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

void run_one(const std::string& name, const CheckOptions& opts, std::vector<CheckResult>& out) {
    if (contains(sequence_names, name)) return detail::sequence_suites(name, opts, out);
    if (contains(operator_names, name)) return detail::operator_suites(name, opts, out);
    if (contains(appell_names, name)) return detail::appell_suites(name, opts, out);
    throw InvalidParameter("unknown suite '" + name + "'");
}

}  // namespace

std::vector<std::string> suite_names() {
    std::vector<std::string> all = sequence_names;
    all.insert(all.end(), operator_names.begin(), operator_names.end());
    all.insert(all.end(), appell_names.begin(), appell_names.end());
    return all;
}

RunReport run_suite(const std::string& name, const CheckOptions& opts) {
    RunReport report{name, {}};
    if (name == "all") {
        for (const auto& n : suite_names()) run_one(n, opts, report.checks);
    } else {
        run_one(name, opts, report.checks);
    }
    return report;
}

}  // namespace umbra::checks
