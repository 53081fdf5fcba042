#include "liaison/report.hpp"

namespace liaison {

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::PreconditionFailed:
      return "precondition_failed";
    case CheckStatus::Inconclusive:
      return "inconclusive";
  }
  return "unknown";
}

bool all_passed(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks)
    if (c.status != CheckStatus::Pass) return false;
  return true;
}

bool any_inconclusive(const std::vector<CheckReport>& checks) {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Inconclusive) return true;
  return false;
}

}  // namespace liaison
