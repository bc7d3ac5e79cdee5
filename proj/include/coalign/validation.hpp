#pragma once

#include <string>
#include <vector>

namespace coalign {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

// Outcome of a structural validation pass: one entry per named check,
// plus warnings that do not affect ok().
struct ValidationReport {
    std::vector<CheckResult> checks;
    std::vector<std::string> warnings;

    bool ok() const;
    const CheckResult* find(const std::string& name) const;
    // "ok" or the name and detail of the first failing check.
    std::string summary() const;
};

}  // namespace coalign
