#pragma once

#include <string>
#include <vector>

#include "hcc/report.hpp"

namespace hcc {

struct CheckOutcome {
  std::string name;
  bool ok = true;
  std::string detail;
  Json offending;  // null when ok
};

struct SelfcheckReport {
  std::vector<CheckOutcome> checks;
  std::vector<std::string> notes;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.ok) return false;
    return true;
  }
  /// 0 when every invariant holds, 2 on any violation.
  int exit_code() const { return ok() ? 0 : 2; }
};

/// Runs every module invariant and the corpus sweeps.
SelfcheckReport run_selfcheck();

Json to_json(const SelfcheckReport& r);

}  // namespace hcc
