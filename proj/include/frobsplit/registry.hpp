#pragma once
// Verification registry: named checks, each tagged with the quote anchor it
// certifies, runnable per suite with deterministic reports.

#include <functional>
#include <string>
#include <vector>

namespace frob {

struct RunConfig {
  int p = 2;
  int rank = 1;
  long long max_degree = 0;  // 0: default 3p; capped at 8p
  unsigned long long seed = 12345;
  bool sampled = false;  // smaller randomized batteries
};

struct CheckResult {
  std::string name;
  std::string paper_anchor;
  std::string parameters;
  bool pass = false;
  std::string witness;  // counterexample rendering or note on failure
  long long elapsed_ms = 0;
};

struct CheckEntry {
  std::string name;
  std::string paper_anchor;
  std::string suite;  // hyperalg | contraction | induction | flag
  std::function<bool(const RunConfig&, std::string* witness, std::string* params)> run;
};

const std::vector<CheckEntry>& registry();

// suite "all" runs everything, in registry order
std::vector<CheckResult> run_suite(const std::string& suite, const RunConfig& cfg);

long long effective_degree(const RunConfig& cfg);  // the truncation D
void validate_config(const RunConfig& cfg);        // throws on bad p/rank/degree

}  // namespace frob
