#pragma once

#include <optional>
#include <string>
#include <vector>

namespace liaison {

enum class CheckStatus { Pass, Fail, PreconditionFailed, Inconclusive };

const char* check_status_name(CheckStatus s);

// One verified identity (or gate).  Failures carry a witness degree and the
// two disagreeing values when the check compares Hilbert functions.
struct CheckReport {
  std::string check_id;
  CheckStatus status = CheckStatus::Pass;
  std::optional<int> witness_degree;
  std::optional<long long> lhs;
  std::optional<long long> rhs;
  std::string note;

  bool passed() const { return status == CheckStatus::Pass; }
};

// Inclusive degree window on which pointwise identities are evaluated.
struct Window {
  int lo = -12;
  int hi = 12;

  Window widened(int bound) const {
    return {lo < -bound ? lo : -bound, hi > bound ? hi : bound};
  }
};

// Conjunction semantics for a list of checks: every check passed (gates that
// report PreconditionFailed make the whole report non-passing).
bool all_passed(const std::vector<CheckReport>& checks);
bool any_inconclusive(const std::vector<CheckReport>& checks);

}  // namespace liaison
