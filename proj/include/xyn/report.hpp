#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "xyn/equation.hpp"

namespace xyn {

using ordered_json = nlohmann::ordered_json;

enum class Severity { ok, paper_typo, discrepancy };

struct Finding {
    Severity severity = Severity::ok;
    std::string anchor;  // table id + row, or section reference
    std::string detail;  // witness values, human readable
};

// Result of one CLI command. exit_status is 0 unless a finding with
// severity `discrepancy` is present.
struct RunReport {
    std::string command;
    ordered_json config = ordered_json::object();
    std::vector<Finding> findings;
    std::vector<Solution> solutions;

    void add(Severity sev, std::string anchor, std::string detail);
    int exit_status() const;

    // Deterministic JSON: fixed key order, all integers as decimal strings.
    ordered_json to_json() const;
};

ordered_json solution_to_json(const Solution& s);
const char* severity_name(Severity sev);

}  // namespace xyn
