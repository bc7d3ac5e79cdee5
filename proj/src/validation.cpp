#include "coalign/validation.hpp"

namespace coalign {

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

std::string ValidationReport::summary() const {
    for (const auto& c : checks)
        if (!c.passed) return c.name + ": " + c.detail;
    return "ok";
}

}  // namespace coalign
