#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace eigensteps {

struct CheckResult {
    std::string name;
    double residual = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

// Outcome of a validator. Validators report, they never throw.
struct VerificationReport {
    std::vector<CheckResult> checks;

    bool holds() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckResult& c) { return c.pass; });
    }

    double max_residual() const {
        double r = 0.0;
        for (const CheckResult& c : checks) r = std::max(r, c.residual);
        return r;
    }

    const CheckResult* find(const std::string& name) const {
        for (const CheckResult& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }

    void add(std::string name, double residual, double threshold) {
        checks.push_back({std::move(name), residual, threshold, residual <= threshold});
    }
};

} // namespace eigensteps
