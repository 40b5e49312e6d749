#include "qorb/report.hpp"

namespace qorb {

nlohmann::ordered_json Report::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = all_pass();
    j["passed"] = checks.size() - failures();
    j["failed"] = failures();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.detail.empty()) e["detail"] = c.detail;
        arr.push_back(std::move(e));
    }
    j["checks"] = std::move(arr);
    if (!data.empty()) j["data"] = data;
    return j;
}

}  // namespace qorb
