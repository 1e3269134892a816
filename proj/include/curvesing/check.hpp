#pragma once

#include <string>
#include <utility>
#include <vector>

namespace curvesing {

/// Outcome of one identity check. Witnesses are (label, serialized value) pairs
/// kept for failure diagnostics.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  std::vector<std::pair<std::string, std::string>> witness;
};

inline CheckResult make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail), {}};
}

}  // namespace curvesing
