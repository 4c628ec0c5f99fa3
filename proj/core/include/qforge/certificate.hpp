#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace qforge {

// One named check, with the computed numbers kept for audit.
struct CheckEntry {
    std::string check;
    bool pass = false;
    nlohmann::json details;
};

struct Certificate {
    std::vector<CheckEntry> entries;

    void add(std::string check, bool pass,
             nlohmann::json details = nlohmann::json::object());
    void append(const Certificate& other, const std::string& prefix = "");

    bool all_pass() const;
    const CheckEntry* find(const std::string& check) const;

    // Names of failing entries, for error messages.
    std::vector<std::string> failing() const;
};

} // namespace qforge
