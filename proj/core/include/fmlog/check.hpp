#pragma once

#include <string>
#include <utility>

namespace fmlog {

/// Outcome of one verification campaign.
struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  bool ok = true;
  long cases = 0;
  std::string detail;  // first failure, or a short summary

  void fail(const std::string& what) {
    if (ok) detail = what;
    ok = false;
  }
};

}  // namespace fmlog
