#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gsp {

// Kinds of per-job completion cost functions. Every cost function is
// non-negative, non-decreasing in t, and zero at t = 0.
enum class CostKind {
  WeightedCompletion,  // w * t
  WeightedKNorm,       // w * t^k, k >= 1
  Throughput,          // 0 for t <= d, w after
  Tardiness,           // 0 for t <= d, w * (t - d) after
  Exponential,         // w * exp(t) for t >= 1, 0 at t = 0
  StepTable,           // right-continuous lookup in a sorted (time, cost) table
};

struct CostFn {
  CostKind kind = CostKind::WeightedCompletion;
  double weight = 1.0;
  double exponent = 1.0;  // k-norm only
  double deadline = 0.0;  // throughput / tardiness only
  // Step table entries, ascending in time and cost. The value at time t is the
  // cost of the last entry with entry time <= t (0 before the first entry), so
  // a new cost takes effect exactly at its listed time.
  std::vector<std::pair<int, double>> table;

  double eval(int t) const;

  // Throws std::invalid_argument on parameters that would break
  // non-negativity or monotonicity.
  void validate() const;

  static CostFn weighted_completion(double w);
  static CostFn weighted_knorm(double w, double k);
  static CostFn throughput(double w, double d);
  static CostFn tardiness(double w, double d);
  static CostFn exponential(double w);
  static CostFn step_table(std::vector<std::pair<int, double>> entries);
};

const char* cost_kind_name(CostKind kind);
CostKind cost_kind_from_name(const std::string& name);

struct Job {
  int id = 0;
  int processing = 1;  // integer processing time, >= 1
  CostFn cost;
};

// g_j(t) - g_j(t-1), the price of still being unfinished at time t.
double marginal_cost(const Job& job, int t);

// A scheduling instance: jobs to run on `machines` identical machines with
// preemption and migration. The time horizon H is the total work; any
// work-conserving schedule finishes by then even on one machine.
struct Instance {
  int machines = 1;
  std::vector<Job> jobs;

  int n() const { return static_cast<int>(jobs.size()); }
  int max_processing() const;
  int total_work() const;
  int horizon() const { return total_work(); }

  void validate() const;  // throws std::invalid_argument
};

// One tentative completion time per job, interpreted as the job's deadline.
using CompletionVector = std::vector<int>;

enum class GridMode { Unit, Compressed };

// A time grid over (0, H]: interval i covers (end(i-1), end(i)].
struct Timeline {
  std::vector<int> ends;  // strictly increasing, last entry = H

  int size() const { return static_cast<int>(ends.size()); }
  int end(int i) const { return ends[i]; }
  int start(int i) const { return i == 0 ? 0 : ends[i - 1]; }
  int length(int i) const { return end(i) - start(i); }

  // Smallest grid point >= t. Requires 1 <= t <= H.
  int round_up(int t) const;
  // Index of the interval containing t, i.e. of the smallest end >= t.
  int interval_of(int t) const;
};

// Unit mode yields the grid {1, ..., H}. Compressed mode keeps, for every
// job, the first time its cost reaches each power of two (1, 2, 4, ...),
// plus H itself.
Timeline build_timeline(const Instance& instance, GridMode mode);

}  // namespace gsp
