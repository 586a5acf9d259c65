#pragma once

#include <string>
#include <utility>
#include <vector>

namespace beauville {

struct Condition {
    std::string name;
    bool pass = false;
    std::string detail;
    /// (role, value) pairs; elements in cycle notation.
    std::vector<std::pair<std::string, std::string>> witnesses;
};

/// Outcome of one verification: every condition with its verdict, plus
/// free-form facts (type, counts) that make the result auditable.
struct Report {
    std::string group;
    std::string claim;
    std::vector<Condition> conditions;
    std::vector<std::pair<std::string, std::string>> facts;
    double seconds = 0.0;
    /// Replaces "verified"/"refuted" when the outcome is neither (e.g. "inconclusive").
    std::string verdict_override;

    bool pass() const;
    std::string verdict() const;
    Condition& add(std::string name, bool pass, std::string detail = {});
    void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
    /// First fact with this key, or empty.
    std::string fact_value(const std::string& key) const;
    const Condition* find(const std::string& name) const;
};

std::string to_text(const Report& r);
/// One JSON document. With include_timing=false the output is byte-stable.
std::string to_json(const Report& r, bool include_timing = true);

}  // namespace beauville
