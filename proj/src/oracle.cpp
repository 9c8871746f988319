#include "gsp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace gsp {

OracleResult brute_force_opt(const Instance& instance) {
  instance.validate();
  const int n = instance.n();
  const int horizon = instance.horizon();
  if (n > 6 || horizon > 12)
    throw GuardError("brute_force_opt guard: needs n <= 6 and H <= 12");

  const Timeline unit = build_timeline(instance, GridMode::Unit);
  OracleResult result;
  bool found = false;

  CompletionVector completions(n);
  for (int j = 0; j < n; ++j) completions[j] = instance.jobs[j].processing;

  while (true) {
    ++result.nodes_explored;
    double cost = 0.0;
    for (int j = 0; j < n; ++j)
      cost += instance.jobs[j].cost.eval(completions[j]);
    // Enumeration is ascending lexicographic, so on ties the first (smallest)
    // vector is kept.
    if ((!found || cost < result.opt_cost) &&
        is_valid(instance, unit, completions)) {
      result.opt_cost = cost;
      result.opt_completions = completions;
      found = true;
    }

    int j = n - 1;
    while (j >= 0 && completions[j] == horizon) {
      completions[j] = instance.jobs[j].processing;
      --j;
    }
    if (j < 0) break;
    ++completions[j];
  }

  if (!found) throw std::logic_error("no valid completion vector exists");
  return result;
}

namespace {

struct SlotSearch {
  const Instance& instance;
  const CompletionVector& completions;
  int horizon;
  int states = 1;
  std::vector<int8_t> memo;  // (slot, remaining-work code) -> -1/0/1

  SlotSearch(const Instance& inst, const CompletionVector& comps)
      : instance(inst), completions(comps), horizon(inst.horizon()) {
    for (int j = 0; j < inst.n(); ++j)
      states *= inst.jobs[j].processing + 1;
    memo.assign(static_cast<size_t>(horizon + 2) * states, -1);
  }

  int encode(const std::vector<int>& remaining) const {
    int code = 0;
    for (int j = instance.n() - 1; j >= 0; --j)
      code = code * (instance.jobs[j].processing + 1) + remaining[j];
    return code;
  }

  bool search(int slot, std::vector<int>& remaining) {
    if (std::all_of(remaining.begin(), remaining.end(),
                    [](int r) { return r == 0; }))
      return true;
    if (slot > horizon) return false;

    const int code = encode(remaining);
    const size_t key = static_cast<size_t>(slot) * states + code;
    if (memo[key] != -1) return memo[key] == 1;

    const int n = instance.n();
    bool ok = false;
    for (int mask = 0; mask < (1 << n) && !ok; ++mask) {
      if (std::popcount(static_cast<unsigned>(mask)) > instance.machines)
        continue;
      bool usable = true;
      for (int j = 0; j < n && usable; ++j)
        if (mask & (1 << j))
          usable = remaining[j] > 0 && completions[j] >= slot;
      if (!usable) continue;
      for (int j = 0; j < n; ++j)
        if (mask & (1 << j)) --remaining[j];
      ok = search(slot + 1, remaining);
      for (int j = 0; j < n; ++j)
        if (mask & (1 << j)) ++remaining[j];
    }
    memo[key] = ok ? 1 : 0;
    return ok;
  }
};

}  // namespace

bool slot_schedulability(const Instance& instance,
                         const CompletionVector& completions) {
  instance.validate();
  if (instance.n() > 3 || instance.machines > 2 || instance.horizon() > 9)
    throw GuardError("slot_schedulability guard: needs n <= 3, m <= 2, H <= 9");
  if (static_cast<int>(completions.size()) != instance.n())
    throw std::invalid_argument("completion vector size mismatch");
  for (int c : completions)
    if (c < 0 || c > instance.horizon())
      throw std::invalid_argument("completion time outside [0, H]");

  SlotSearch search(instance, completions);
  std::vector<int> remaining(instance.n());
  for (int j = 0; j < instance.n(); ++j)
    remaining[j] = instance.jobs[j].processing;
  return search.search(1, remaining);
}

std::optional<CutConstraint> naive_separation(const Instance& instance,
                                              const FracSolution& x,
                                              double tol) {
  instance.validate();
  const int n = instance.n();
  const int horizon = instance.horizon();
  if (n > 3 || horizon > 6)
    throw GuardError("naive_separation guard: needs n <= 3 and H <= 6");

  double best_violation = tol;
  int best_b = -1;
  std::vector<int> best_floors;

  std::vector<int> floors(n, 0);
  for (int b = 1; b <= horizon; ++b) {
    std::fill(floors.begin(), floors.end(), 0);
    while (true) {
      const int value = deficiency(instance, b, floors);
      if (value > 0) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) {
          const TimeRange run = eligible_times(instance, b, floors, j);
          for (int t = run.first; t <= run.last(); ++t) lhs += x.at(j, t);
        }
        // Ascending (b, floors) enumeration keeps the spec tie-break.
        if (value - lhs > best_violation) {
          best_violation = value - lhs;
          best_b = b;
          best_floors = floors;
        }
      }
      int j = n - 1;
      while (j >= 0 && floors[j] == horizon) {
        floors[j] = 0;
        --j;
      }
      if (j < 0) break;
      ++floors[j];
    }
  }

  if (best_b < 0) return std::nullopt;
  CutConstraint cut;
  cut.start = best_b;
  cut.floors = std::move(best_floors);
  cut.deficiency = deficiency(instance, best_b, cut.floors);
  for (int j = 0; j < n; ++j)
    cut.eligible.push_back(eligible_times(instance, best_b, cut.floors, j));
  cut.violation = best_violation;
  return cut;
}

bool mcnaughton_feasible(const Instance& instance, int common_deadline) {
  return instance.total_work() <=
             static_cast<int64_t>(instance.machines) * common_deadline &&
         instance.max_processing() <= common_deadline;
}

namespace {

double priority_weight(const Job& job) {
  if (job.cost.kind == CostKind::StepTable) {
    // No explicit weight; use the final table cost as the priority proxy.
    return job.cost.table.empty() ? 0.0 : job.cost.table.back().second;
  }
  return job.cost.weight;
}

double simulate_list(const Instance& instance, const std::vector<int>& order) {
  std::vector<int64_t> free_at(instance.machines, 0);
  double cost = 0.0;
  for (int j : order) {
    const auto next =
        std::min_element(free_at.begin(), free_at.end()) - free_at.begin();
    free_at[next] += instance.jobs[j].processing;
    cost += instance.jobs[j].cost.eval(static_cast<int>(free_at[next]));
  }
  return cost;
}

}  // namespace

BaselineCosts baseline_heuristics(const Instance& instance) {
  BaselineCosts costs;
  std::vector<int> order(instance.n());
  std::iota(order.begin(), order.end(), 0);

  std::vector<int> wspt = order;
  std::stable_sort(wspt.begin(), wspt.end(), [&](int a, int b) {
    const double ra = priority_weight(instance.jobs[a]) / instance.jobs[a].processing;
    const double rb = priority_weight(instance.jobs[b]) / instance.jobs[b].processing;
    return ra > rb;
  });
  costs.wspt = simulate_list(instance, wspt);

  const bool all_deadline =
      std::all_of(instance.jobs.begin(), instance.jobs.end(), [](const Job& j) {
        return j.cost.kind == CostKind::Throughput ||
               j.cost.kind == CostKind::Tardiness;
      });
  if (all_deadline) {
    std::vector<int> edf = order;
    std::stable_sort(edf.begin(), edf.end(), [&](int a, int b) {
      return instance.jobs[a].cost.deadline < instance.jobs[b].cost.deadline;
    });
    costs.edf = simulate_list(instance, edf);
  }
  return costs;
}

}  // namespace gsp
