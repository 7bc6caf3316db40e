#pragma once

#include <string>
#include <vector>

namespace iqr {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    std::vector<std::string> findings;  // structured per-point reports
};

struct VerifyOptions {
    unsigned long long seed = 1;
    int only = 0;  // 0 = all criteria; 1..11 selects one
};

// Runs the acceptance criteria suite.  Deterministic for a fixed seed.
std::vector<CriterionResult> run_criteria(const VerifyOptions& opt);

// Deterministic plain-text rendering: one pass/fail line per criterion,
// findings indented beneath.
std::string render_report(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace iqr
