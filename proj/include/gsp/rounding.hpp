#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsp/flow.hpp"
#include "gsp/instance.hpp"
#include "gsp/lp.hpp"

namespace gsp {

struct RoundingConfig {
  double c = 0.1;        // sampling scale, in (0, 1/10]
  int max_phases = 64;   // deterministic fallback fires after this many phases
  uint64_t seed = 0;
  double tol = 1e-6;
  // Run full separation on every reinflated solution and fail loudly if a
  // cover row is violated; the feasibility lemma says this never happens for
  // c <= 1/10.
  bool verify_reinflation = false;
};

// min(1/10, 1/(1000 * max(1, ln ln nP))): the theory constant, clamped to the
// largest value the feasibility argument tolerates.
double default_sampling_scale(const Instance& instance);

struct PhaseRecord {
  int phase = 0;
  std::vector<double> alpha;   // per-job uniform draws; empty on an early exit
  CompletionVector completions;
  double lp_int = 0.0;         // cost of the fully-set prefix of the phase input
  double lp_frac = 0.0;        // marginal-cost mass of its fractional tail
  std::vector<int> cut_starts; // unsatisfied cuts (b, D' = completions)
  std::vector<std::vector<int>> critical_sets;  // parallel to cut_starts
  std::string next_x_digest;   // digest of the reinflated solution, if any
  bool early_exit = false;
};

// Objective split at the last fully-set time of each row: the part the
// solution has already committed to integrally, and the fractional rest.
// The two always sum to the plain objective.
std::pair<double, double> split_cost(const Instance& instance,
                                     const FracSolution& x);

struct SampleResult {
  std::vector<double> alpha;
  CompletionVector completions;
};

// Per job j, draw alpha_j uniform on [0,1) in job-id order and take the
// latest t with x(j, t) >= c * alpha_j (0 when no time qualifies).
SampleResult sample(const FracSolution& x, double c, std::mt19937_64& rng);

// 0/1 solution with ones exactly up to each completion time.
FracSolution integralize(const CompletionVector& completions, int horizon);

// Starts b of all cover rows with floors D' = completions and positive
// deficiency; these are exactly the rows the integralized solution leaves
// unsatisfied, and the list is empty iff the completion vector is valid.
std::vector<int> unsatisfied_cuts(const Instance& instance,
                                  const CompletionVector& completions);

// Jobs whose fractional mass the next phase must keep: contributors to the
// cut outside both tenth-of-deficiency prefixes (by decreasing and increasing
// floor order). Falls back to all contributors when the prefixes overlap
// everything. Returned ascending by id.
std::vector<int> critical_jobs(const Instance& instance,
                               const FracSolution& x_prev, int b,
                               const std::vector<int>& floors);

// Freeze ones up to each completion time; critical jobs keep their previous
// fractional tail scaled by 10 (clipped at 1), everyone else drops to 0.
FracSolution reinflate(const FracSolution& x_prev,
                       const CompletionVector& completions,
                       const std::vector<int>& critical_union);

struct RunResult {
  CompletionVector completions;
  Schedule schedule;
  std::vector<PhaseRecord> trace;
  int phases_used = 0;
  bool fallback_used = false;
  bool early_exit_used = false;
};

// Phased randomized rounding: sample completions, stop when they are valid,
// otherwise reinflate the critical jobs and repeat. When every fractional
// entry drops below 1/(P*n)^2 the solution is snapped to integers and, if
// valid, returned without sampling. After max_phases a deterministic fallback
// takes the support of the current solution and pushes completions later,
// cheapest marginal cost first, until they are valid. The final schedule is
// extracted on `schedule_grid`.
RunResult run(const Instance& instance, const FracSolution& initial,
              const RoundingConfig& config,
              GridMode schedule_grid = GridMode::Unit);

}  // namespace gsp
