#include "umbra/checks/report.hpp"

#include <algorithm>

#include "json.hpp"

namespace umbra::checks {

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::string number(double v) {
    // nlohmann's shortest round-trip formatting keeps the CSV and JSON digits identical.
    return nlohmann::json(v).dump();
}

}  // namespace

const char* to_string(Status s) {
    switch (s) {
        case Status::pass:
            return "pass";
        case Status::fail:
            return "fail";
        case Status::flagged_errata:
            return "flagged-errata";
    }
    return "fail";
}

bool RunReport::any_failure() const {
    return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == Status::fail; });
}

void write_report(std::ostream& os, const RunReport& report, Format format, bool with_timing) {
    if (format == Format::csv) {
        os << "suite,tag,status,residual,tolerance" << (with_timing ? ",runtime" : "") << ",description,detail\n";
        for (const auto& c : report.checks) {
            os << c.suite << ',' << c.tag << ',' << to_string(c.status) << ',' << number(c.residual) << ','
               << number(c.tolerance);
            if (with_timing) os << ',' << number(c.runtime);
            os << ',' << csv_field(c.description) << ',' << csv_field(c.detail) << '\n';
        }
        return;
    }
    nlohmann::ordered_json j;
    j["suite"] = report.suite;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t flagged = 0;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks) {
        nlohmann::ordered_json row;
        row["suite"] = c.suite;
        row["tag"] = c.tag;
        row["status"] = to_string(c.status);
        row["residual"] = c.residual;
        row["tolerance"] = c.tolerance;
        if (with_timing) row["runtime"] = c.runtime;
        row["description"] = c.description;
        if (!c.detail.empty()) row["detail"] = c.detail;
        j["checks"].push_back(std::move(row));
        (c.status == Status::pass ? passed : c.status == Status::fail ? failed : flagged)++;
    }
    j["summary"] = {{"pass", passed}, {"fail", failed}, {"flagged-errata", flagged}};
    os << j.dump(2) << '\n';
}

}  // namespace umbra::checks
