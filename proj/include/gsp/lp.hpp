#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gsp/instance.hpp"

namespace gsp {

// Contiguous run of time steps {first, ..., first + count - 1}. The eligible
// sets of the cover inequalities are always runs, so this is exact.
struct TimeRange {
  int first = 0;
  int count = 0;

  bool empty() const { return count <= 0; }
  int last() const { return first + count - 1; }
  bool contains(int t) const { return t >= first && t <= last(); }
  std::vector<int> times() const;
};

// Relaxed completion indicators: x(j, t) is the extent to which job j is
// still unfinished at time t. Rows are non-increasing in t with x(j, 0) = 1
// held implicitly.
struct FracSolution {
  int num_jobs = 0;
  int horizon = 0;
  std::vector<double> values;  // x(j, t) at values[j * horizon + t - 1]

  static FracSolution constant(int num_jobs, int horizon, double value);
  // 0/1 solution that is 1 exactly up to each completion time.
  static FracSolution from_completions(const CompletionVector& completions,
                                       int horizon);

  double at(int j, int t) const {
    return t == 0 ? 1.0 : values[static_cast<size_t>(j) * horizon + t - 1];
  }
  void set(int j, int t, double v) {
    values[static_cast<size_t>(j) * horizon + t - 1] = v;
  }

  bool is_monotone(double eps = 1e-9) const;
  // Latest t >= 1 with x(j, t) >= threshold, or 0 when there is none.
  int last_time_at_least(int j, double threshold) const;
  // Latest t with x(j, t) = 1 (within eps), or 0.
  int last_full_time(int j, double eps = 1e-9) const;
  double objective(const Instance& instance) const;
  std::string digest() const;
};

// One job-cover inequality, identified by the start b of the covered suffix
// [b, H] and the per-job completion floors D:
//   sum_j sum_{t in eligible[j]} x(j, t) >= deficiency.
struct CutConstraint {
  int start = 1;
  std::vector<int> floors;
  int deficiency = 0;
  std::vector<TimeRange> eligible;
  double violation = 0.0;  // against the solution that produced the cut
};

// E([b,H], j): the earliest min{p_j, sum_i p_i - m(b-1)} time steps of [b, H];
// empty when the cap is <= 0.
TimeRange earliest_set(const Instance& instance, int b, int j);

// V([b,H], D) = sum_i p_i - m(b-1) - sum_j |[0, D_j] ∩ E([b,H], j)|.
int deficiency(const Instance& instance, int b, const std::vector<int>& floors);

// E([b,H], D, j): the earliest V([b,H], D) entries of E([b,H], j) after D_j.
TimeRange eligible_times(const Instance& instance, int b,
                         const std::vector<int>& floors, int j);

double constraint_lhs(const FracSolution& x, const CutConstraint& cut);

// The (b, D = 0) row for every b with positive deficiency. These encode the
// min-cut feasibility constraints and are seeded into every relaxation.
std::vector<CutConstraint> zero_floor_cuts(const Instance& instance);

// Separation oracle for the suffix-form cover family. For every b and every
// guessed deficiency G it runs a DP over jobs whose state is the total floor
// credit spent so far and whose value is the least eligible mass achievable;
// a violated cut exists for (b, G) iff the final value drops below G - tol.
// Returns the maximally violated cut (ties: smaller b, then lexicographically
// smaller floors), or nullopt when everything is satisfied within tol.
std::optional<CutConstraint> separate(const Instance& instance,
                                      const FracSolution& x, double tol);

// Restricted relaxation: objective plus monotone/box structure plus an
// explicit list of cover rows. Monotonicity and bounds are built into the
// solve via a change of variables to per-step completion increments, so only
// the cover rows appear as simplex rows.
struct LpModel {
  const Instance* instance = nullptr;
  std::vector<CutConstraint> cuts;

  static LpModel seeded(const Instance& instance);
  void add_cut(CutConstraint cut);
  FracSolution solve() const;  // optimal basic solution, residuals <= 1e-9
};

struct LpSolveResult {
  FracSolution x;
  double value = 0.0;
  int cuts_added = 0;
  std::vector<CutConstraint> cuts;  // all rows of the final model
};

class NonConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cutting-plane loop: solve the seeded relaxation, add the most violated
// cover row, repeat until separation is clean within tol. Throws
// NonConvergenceError after 10 * n * H added cuts.
LpSolveResult solve_lp(const Instance& instance, double tol = 1e-6);

}  // namespace gsp
