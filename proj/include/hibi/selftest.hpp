#pragma once

#include <string>
#include <vector>

#include "hibi/document.hpp"
#include "hibi/frobenius.hpp"

namespace hibi {

struct CheckResult {
  std::string poset;
  std::string check;
  bool passed;
  std::string detail;  // first counterexample or the error text
};

/// Runs the invariant suite over the given documents. Checks that throw are
/// recorded as failures; a BudgetExceeded is recorded as a failure too, with
/// the budget message as detail.
std::vector<CheckResult> run_selftest(const std::vector<PosetDocument>& docs, const Budget& budget = {});

}  // namespace hibi
