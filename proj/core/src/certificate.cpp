#include "qforge/certificate.hpp"

#include <utility>

namespace qforge {

void Certificate::add(std::string check, bool pass, nlohmann::json details) {
    entries.push_back({std::move(check), pass, std::move(details)});
}

void Certificate::append(const Certificate& other, const std::string& prefix) {
    for (const CheckEntry& e : other.entries)
        entries.push_back({prefix + e.check, e.pass, e.details});
}

bool Certificate::all_pass() const {
    for (const CheckEntry& e : entries)
        if (!e.pass) return false;
    return true;
}

const CheckEntry* Certificate::find(const std::string& check) const {
    for (const CheckEntry& e : entries)
        if (e.check == check) return &e;
    return nullptr;
}

std::vector<std::string> Certificate::failing() const {
    std::vector<std::string> out;
    for (const CheckEntry& e : entries)
        if (!e.pass) out.push_back(e.check);
    return out;
}

} // namespace qforge
