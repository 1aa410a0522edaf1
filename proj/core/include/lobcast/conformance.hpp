#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lobcast/lobster.hpp"
#include "lobcast/tree.hpp"

namespace lobcast {

// Formula value vs exact value on one instance, plus every structural check
// that is expected to hold along the way. `failures` lists the names of
// violated checks; an instance is clean iff beta_match and failures empty.
struct InstanceCheckResult {
  std::int64_t beta_star = 0;
  std::int64_t beta_b = 0;  // only meaningful when oracle ran
  bool oracle_ran = false;
  bool beta_match = true;
  BroadcastAssignment witness;
  std::vector<std::string> failures;

  bool clean() const { return beta_match && failures.empty(); }
};

// Builds the instance and runs the whole pipeline: validators, classifier,
// formula, staged construction with per-stage verification, and (when
// run_oracle) the exact solver. Structural checks cover stage cost deltas,
// the lower bounds, exceed classes after stage 3, the neighbor restriction
// on Xc, domination of the final stage, and the per-subtree decomposition.
InstanceCheckResult check_instance(const LobsterSpec& spec, bool run_oracle);

struct Mismatch {
  LobsterSpec spec;
  std::int64_t beta_star = 0;
  std::int64_t beta_b = 0;
  BroadcastAssignment witness;
  std::vector<std::string> failures;
};

struct ConformanceReport {
  std::int64_t instances_run = 0;
  std::vector<Mismatch> mismatches;
  double elapsed_seconds = 0.0;
};

// Runs check_instance over every spec, jobs instances at a time. Results
// aggregate in input order regardless of scheduling. Any structural failure
// is reported as a mismatch alongside formula/oracle disagreements.
ConformanceReport run_conformance(const std::vector<LobsterSpec>& specs, int jobs);

}  // namespace lobcast
