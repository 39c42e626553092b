#pragma once

// Self-verification suite: operator algebra, closed forms and the
// qualitative negativity behaviour, each reduced to a maximum deviation.

#include <string>
#include <vector>

namespace rqi {

struct CheckResult {
  std::string name;
  double max_deviation;
  bool passed;
};

std::vector<CheckResult> run_verification(double tolerance = 1e-10);

}  // namespace rqi
