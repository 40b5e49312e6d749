#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace qorb {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Named list of pass/fail checks with optional witness data.
struct Report {
    std::string suite;
    std::vector<Check> checks;
    nlohmann::ordered_json data = nlohmann::ordered_json::object();

    void add(std::string name, bool pass, std::string detail = {}) {
        checks.push_back({std::move(name), pass, std::move(detail)});
    }
    void merge(const Report& o, const std::string& prefix = {}) {
        for (const auto& c : o.checks) checks.push_back({prefix + c.name, c.pass, c.detail});
    }
    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.pass ? 0 : 1;
        return n;
    }
    nlohmann::ordered_json to_json() const;
};

}  // namespace qorb
