#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace opensys {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the ten end-to-end acceptance checks. `data_dir` holds decay.net and
/// intro.net.
std::vector<CriterionResult> run_acceptance(const std::string& data_dir, std::uint64_t seed = 1);

/// "PASS criterion 3: title (detail, 0.12 s)"
std::string format(const CriterionResult& r);

}  // namespace opensys
