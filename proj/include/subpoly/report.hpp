#pragma once

#include <string>
#include <vector>

namespace subpoly {

struct CheckInstance {
    std::string label;
    bool pass = false;
    std::string detail;
};

// Uniform result container for the check_* harnesses: one claim, many
// instances, overall pass iff every instance passes.
struct CheckReport {
    std::string claim;
    std::vector<CheckInstance> instances;

    void add(std::string label, bool ok, std::string detail = "") {
        instances.push_back({std::move(label), ok, std::move(detail)});
    }
    bool pass() const {
        for (const auto& inst : instances)
            if (!inst.pass) return false;
        return true;
    }
};

}  // namespace subpoly
