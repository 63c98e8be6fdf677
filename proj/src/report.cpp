#include "cocyclelab/report.hpp"

#include <sstream>

namespace cocyclelab {

bool Report::all_pass() const {
    for (const CheckEntry& c : checks)
        if (c.verdict == "fail") return false;
    return true;
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema"] = schema;
    j["command"] = command;
    j["convention"] = to_string(convention);
    j["inputs"] = inputs;
    j["results"] = results;
    j["warnings"] = warnings;
    nlohmann::json checks_json = nlohmann::json::array();
    for (const CheckEntry& c : checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["verdict"] = c.verdict;
        if (!c.witness.empty()) e["witness"] = c.witness;
        checks_json.push_back(e);
    }
    j["checks"] = checks_json;
    j["verdict"] = all_pass() ? "pass" : "fail";
    return j;
}

std::string Report::human() const {
    std::ostringstream os;
    os << "# " << command << " (" << to_string(convention) << ")\n";
    for (const std::string& w : warnings) os << "warning: " << w << "\n";
    if (!results.empty()) {
        for (auto it = results.begin(); it != results.end(); ++it) {
            os << it.key() << " = ";
            if (it.value().is_string())
                os << it.value().get<std::string>();
            else
                os << it.value().dump();
            os << "\n";
        }
    }
    for (const CheckEntry& c : checks) {
        os << "[" << (c.verdict == "pass" ? "PASS" : c.verdict == "fail" ? "FAIL" : "SKIP") << "] "
           << c.name;
        if (!c.witness.empty()) os << " -- " << c.witness;
        os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
    return os.str();
}

} // namespace cocyclelab
