#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bgls {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

// Runs the full verification suite, printing one pass/fail line per
// criterion to os as it goes. Tolerances are pinned inside; an exception
// escaping a criterion marks it failed rather than aborting the run.
std::vector<CriterionResult> run_acceptance(std::ostream& os);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace bgls
