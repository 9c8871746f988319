#pragma once

#include <optional>
#include <stdexcept>

#include "gsp/flow.hpp"
#include "gsp/instance.hpp"
#include "gsp/lp.hpp"

namespace gsp {

// The oracles refuse instances beyond their enumeration guards instead of
// silently truncating the search.
class GuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleResult {
  double opt_cost = 0.0;
  CompletionVector opt_completions;
  long nodes_explored = 0;
};

// Exhaustive minimum over all completion vectors in prod_j [p_j, H], keeping
// the lexicographically smallest optimum. Guarded to n <= 6 and H <= 12.
OracleResult brute_force_opt(const Instance& instance);

// Slot-level schedulability by backtracking over per-slot machine
// assignments, independent of the flow reduction. Guarded to n <= 3, m <= 2,
// H <= 9 (the bound the exhaustive flow-equivalence family needs).
bool slot_schedulability(const Instance& instance,
                         const CompletionVector& completions);

// Literal enumeration of every suffix cover row (all b, all floor vectors in
// {0..H}^n), returning the maximally violated one. Guarded to n <= 3, H <= 6.
std::optional<CutConstraint> naive_separation(const Instance& instance,
                                              const FracSolution& x,
                                              double tol);

// Wrap-around rule for a common deadline: feasible iff total work fits the
// machine-time rectangle and no single job exceeds the deadline.
bool mcnaughton_feasible(const Instance& instance, int common_deadline);

struct BaselineCosts {
  double wspt = 0.0;             // weight/size list scheduling
  std::optional<double> edf;     // deadline order; only for deadline costs
};

// Non-preemptive list-scheduling baselines priced by the instance costs.
BaselineCosts baseline_heuristics(const Instance& instance);

}  // namespace gsp
