#ifndef TETRALAT_HARNESS_HPP
#define TETRALAT_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace tetralat::harness {

struct CheckContext {
  std::uint64_t seed = 1;
  int cap = 3;          // series cap D for weighted traces
  bool mutate = false;  // flip the -q k vertex (sensitivity check)
};

struct CheckResult {
  std::string name;
  std::string params;  // tested ranges, printed in every report
  std::string mode;    // "symbolic", "point-eval" or "evidence"
  bool pass = false;   // evidence entries: no contradiction found
  bool evidence_only = false;
  std::string detail;
  double millis = 0.0;  // not serialized; reports stay byte-identical per seed
};

using CheckFn = std::function<CheckResult(const CheckContext&)>;

struct CheckDef {
  std::string name;
  std::vector<std::string> tags;
  CheckFn fn;
};

/// Registry of every theorem/proposition/corollary check, in report order.
const std::vector<CheckDef>& registry();

/// Runs a single named check; throws OutOfRange for unknown names.
CheckResult verify(const std::string& name, const CheckContext& ctx);

struct SuiteResult {
  std::vector<CheckResult> results;
  int passed = 0;
  int failed = 0;
  bool all_pass() const { return failed == 0; }
};

/// Runs every registry entry carrying the tag ("all" matches everything).
SuiteResult run_suite(const std::string& tag, const CheckContext& ctx);

/// Deterministic JSON report (no timings).
std::string suite_to_json(const SuiteResult& suite, const CheckContext& ctx);

}  // namespace tetralat::harness

#endif
