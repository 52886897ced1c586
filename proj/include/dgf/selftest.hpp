#pragma once

#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dgf/catalog.hpp"

namespace dgf::selftest {

/// Computes a catalog family; replaceable so harnesses can inject faults.
using FamilyComputer = std::function<Series(const catalog::FamilyId&, std::size_t, CoeffMode)>;

FamilyComputer default_computer();

struct Options {
  int max_n = 4;
  FamilyComputer compute = default_computer();
};

struct SuiteResult {
  std::string name;
  bool passed = true;
  /// First failing check, e.g. "family=dag n=2 m=1 p=0 expected=2 actual=3".
  std::string detail;
};

struct Report {
  std::vector<SuiteResult> suites;
  bool passed() const;
};

/// Runs every suite and prints one PASS/FAIL line per suite to `log`.
/// Throws LimitExceeded if max_n exceeds the oracle cap.
Report run(const Options& options, std::ostream& log);

/// Labeled DAG counts by the inclusion-exclusion recurrence
/// a_n = sum_{k>=1} (-1)^(k+1) C(n,k) 2^(k(n-k)) a_{n-k}, on plain integers.
std::vector<BigInt> dag_counts_by_recurrence(int n_max);

}  // namespace dgf::selftest
