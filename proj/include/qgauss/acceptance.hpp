#ifndef QGAUSS_ACCEPTANCE_HPP
#define QGAUSS_ACCEPTANCE_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace qgauss {

/// One end-to-end verification criterion with a hard wall-clock budget.
struct AcceptanceCriterion {
  int id = 0;
  std::string label;
  double budget_seconds = 0;
  /// Returns true on pass; on failure appends an explanation to detail.
  std::function<bool(std::string& detail)> run;
};

std::vector<AcceptanceCriterion> acceptance_criteria();

/// Runs every criterion, printing one pass/fail line each; returns the
/// number of failures. Exceeding a criterion's time budget fails it.
int run_acceptance(std::ostream& out);

} // namespace qgauss

#endif
