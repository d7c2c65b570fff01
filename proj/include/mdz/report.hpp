#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace mdz {

struct VerifyItem {
    std::string name;
    bool pass = false;
    nlohmann::json witness;
};

struct VerifyResult {
    std::string target;
    nlohmann::json params;
    std::vector<VerifyItem> items;

    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::size_t fail_count() const {
        std::size_t n = 0;
        for (const auto& it : items)
            if (!it.pass) ++n;
        return n;
    }
};

// Deterministic result body; timing is attached separately by the caller so
// that byte-identical bodies can be compared across runs.
inline nlohmann::json verify_to_json(const VerifyResult& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& it : r.items)
        items.push_back({{"name", it.name}, {"pass", it.pass}, {"witness", it.witness}});
    return {{"command", "verify"},
            {"target", r.target},
            {"params", r.params},
            {"items", items},
            {"totals",
             {{"pass", r.items.size() - r.fail_count()}, {"fail", r.fail_count()}}}};
}

inline std::string verify_table(const VerifyResult& r) {
    std::string out;
    for (const auto& it : r.items) {
        out += it.pass ? "[PASS] " : "[FAIL] ";
        out += r.target + " " + it.name + "\n";
    }
    out += r.all_pass() ? "all checks passed\n"
                        : std::to_string(r.fail_count()) + " check(s) failed\n";
    return out;
}

}  // namespace mdz
