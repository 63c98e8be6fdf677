#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cocyclelab/symplectic.hpp"

namespace cocyclelab {

// One verification entry; every fail carries a witness string.
struct CheckEntry {
    std::string name;
    std::string verdict; // pass | fail | skipped
    std::string witness;
};

// Schema-versioned, JSON-serializable command report. Keys serialize in
// lexicographic order; check entries keep their insertion order.
struct Report {
    static constexpr const char* schema = "cocyclelab-report/1";

    std::string command;
    SignConvention convention = SignConvention::PaperA;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json results = nlohmann::json::object();
    std::vector<CheckEntry> checks;
    std::vector<std::string> warnings;

    void pass(const std::string& name) { checks.push_back({name, "pass", ""}); }
    void fail(const std::string& name, const std::string& witness) {
        checks.push_back({name, "fail", witness});
    }
    void skip(const std::string& name, const std::string& why) {
        checks.push_back({name, "skipped", why});
    }
    void check(const std::string& name, bool ok, const std::string& witness) {
        if (ok)
            pass(name);
        else
            fail(name, witness);
    }

    bool all_pass() const;
    nlohmann::json to_json() const;
    std::string human() const;
};

} // namespace cocyclelab
