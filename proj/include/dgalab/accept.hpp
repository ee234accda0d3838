#pragma once

#include <string>
#include <vector>

#include "dgalab/field.hpp"

namespace dgalab {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // deterministic counts / values, or the error text
};

// Criteria 1-10, run once. A thrown engine error is recorded as a failure
// of that criterion, not a crash of the suite.
std::vector<CriterionResult> run_criteria(Field f);

// Full suite: criteria 1-10 twice, then the byte-identical re-run check
// appended as criterion 11.
std::vector<CriterionResult> run_acceptance(Field f);

// {"criteria":[{"id":...,"name":...,"pass":...,"detail":...},...],"pass":...}
// compact, newline-terminated
std::string acceptance_json(const std::vector<CriterionResult>& results);

}  // namespace dgalab
