#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subdivbox {

struct CriterionResult {
    int index = 0;
    std::string title;
    bool passed = false;
    bool expected_pass = true;  // one identity is expected to fail as stated; see README
    double seconds = 0.0;
    std::string detail;  // computed witness on failure, summary numbers on success
};

// "criterion N [title]: PASS — detail" (no timing: CLI reports are byte-stable).
std::string format_criterion_line(const CriterionResult& r);

// Runs the full identity suite in order; when `live` is non-null each line is
// printed as it completes. Deterministic apart from the seconds field.
std::vector<CriterionResult> run_acceptance_suite(std::ostream* live = nullptr);

bool all_passed(const std::vector<CriterionResult>& results);
bool outcomes_as_expected(const std::vector<CriterionResult>& results);

}  // namespace subdivbox
