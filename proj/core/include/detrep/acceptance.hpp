#pragma once

#include <functional>
#include <string>
#include <vector>

namespace detrep {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool gating = true;
    std::string detail;
    double ms = 0.0;
};

struct AcceptOptions {
    bool include_stretch = false;
    int jobs = 1;
    uint32_t prime = 32003;
};

// Runs every acceptance criterion, invoking progress after each one.
// Returns the full list; a criterion with gating = false never fails the run.
std::vector<CriterionResult> run_acceptance(
    const AcceptOptions& opts,
    const std::function<void(const CriterionResult&)>& progress = nullptr);

bool all_gating_passed(const std::vector<CriterionResult>& rs);

} // namespace detrep
