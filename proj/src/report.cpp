#include "xyn/report.hpp"

namespace xyn {

const char* severity_name(Severity sev) {
    switch (sev) {
        case Severity::ok: return "ok";
        case Severity::paper_typo: return "paper-typo";
        case Severity::discrepancy: return "discrepancy";
    }
    return "?";
}

void RunReport::add(Severity sev, std::string anchor, std::string detail) {
    findings.push_back(Finding{sev, std::move(anchor), std::move(detail)});
}

int RunReport::exit_status() const {
    for (const auto& f : findings)
        if (f.severity == Severity::discrepancy) return 1;
    return 0;
}

ordered_json solution_to_json(const Solution& s) {
    ordered_json j;
    j["x"] = s.x.get_str();
    j["y"] = s.y.get_str();
    j["a"] = std::to_string(s.exp.a);
    j["b"] = std::to_string(s.exp.b);
    j["c"] = std::to_string(s.exp.c);
    j["n"] = std::to_string(s.n);
    return j;
}

ordered_json RunReport::to_json() const {
    ordered_json j;
    j["command"] = command;
    j["config"] = config;
    j["solutions"] = ordered_json::array();
    for (const auto& s : solutions) j["solutions"].push_back(solution_to_json(s));
    j["findings"] = ordered_json::array();
    for (const auto& f : findings) {
        ordered_json fj;
        fj["severity"] = severity_name(f.severity);
        fj["anchor"] = f.anchor;
        fj["detail"] = f.detail;
        j["findings"].push_back(fj);
    }
    j["exit_status"] = exit_status();
    return j;
}

}  // namespace xyn
