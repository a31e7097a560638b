// Batch command-line front end.
//
//   unclosed coeffs  --max-order J [--precision P] [--format json|csv]
//   unclosed eval    --s S [--s S ...] [--order J] [--precision P] [--format json|csv]
//   unclosed verify  --suite {b1,scaling,constant-term,minor-arc,logpoch}
//   unclosed diverge [--max-order J] [--ebar-max N] [--format json|csv]
//   unclosed report
//   unclosed tables  [--max-order N] [--format json|csv]
//
// Every subcommand accepts --out PATH. Exit codes: 0 success, 2 invalid
// configuration, 3 a suite or criterion failed.
#pragma once

#include <json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace unclosed {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitFailure = 3;

/// Runs one invocation; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SuiteResult {
  std::string name;
  bool pass = false;
  nlohmann::json detail;
};

/// Names accepted by `verify --suite`, sorted.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name);

struct CriterionResult {
  std::string id;  // "AC-1" .. "AC-10"
  std::string title;
  bool pass = false;
  std::string detail;
};

/// All acceptance criteria in order.
std::vector<CriterionResult> run_criteria();

}  // namespace unclosed
