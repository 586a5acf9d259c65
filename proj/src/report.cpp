#include "beauville/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace beauville {

bool Report::pass() const {
    return !conditions.empty() && std::all_of(conditions.begin(), conditions.end(), [](const Condition& c) { return c.pass; });
}

std::string Report::verdict() const {
    if (!verdict_override.empty()) return verdict_override;
    return pass() ? "verified" : "refuted";
}

Condition& Report::add(std::string name, bool ok, std::string detail) {
    conditions.push_back({std::move(name), ok, std::move(detail), {}});
    return conditions.back();
}

std::string Report::fact_value(const std::string& key) const {
    for (const auto& [k, v] : facts)
        if (k == key) return v;
    return {};
}

const Condition* Report::find(const std::string& name) const {
    for (const auto& c : conditions)
        if (c.name == name) return &c;
    return nullptr;
}

std::string to_text(const Report& r) {
    std::ostringstream os;
    os << "group: " << r.group << '\n';
    os << "claim: " << r.claim << '\n';
    for (const auto& [k, v] : r.facts) os << k << ": " << v << '\n';
    for (const auto& c : r.conditions) {
        os << (c.pass ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.detail.empty()) os << " -- " << c.detail;
        os << '\n';
        for (const auto& [role, val] : c.witnesses) os << "          " << role << " = " << val << '\n';
    }
    os << "verdict: " << r.verdict() << '\n';
    return os.str();
}

std::string to_json(const Report& r, bool include_timing) {
    nlohmann::ordered_json j;
    j["group"] = r.group;
    j["claim"] = r.claim;
    j["verdict"] = r.verdict();
    auto& facts = j["facts"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.facts) facts[k] = v;
    auto& conds = j["conditions"] = nlohmann::ordered_json::array();
    for (const auto& c : r.conditions) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        if (!c.witnesses.empty()) {
            auto& w = cj["witnesses"] = nlohmann::ordered_json::object();
            for (const auto& [role, val] : c.witnesses) w[role] = val;
        }
        conds.push_back(std::move(cj));
    }
    if (include_timing) j["seconds"] = r.seconds;
    return j.dump(2);
}

}  // namespace beauville
