#pragma once

// Verification suites behind `slicefrac verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sfcli {

// Unset fields take per-suite defaults.
struct SuiteParams {
  std::optional<int> n, i, cap, order, alpha, f_max;
  std::uint64_t seed = 1;
};

struct CheckResult {
  std::string suite, check;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

const std::vector<std::string>& suite_names();  // without "all"
bool is_suite(const std::string& name);         // including "all"

// Runs every check of the suite; a failing check never stops the others.
// "all" runs the suites concurrently and returns them in the listed order.
std::vector<CheckResult> run_suite(const std::string& name, const SuiteParams& p);

}  // namespace sfcli
