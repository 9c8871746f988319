#include "gsp/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "gsp/simplex.hpp"

namespace gsp {

std::vector<int> TimeRange::times() const {
  std::vector<int> out;
  out.reserve(std::max(count, 0));
  for (int t = first; t <= last(); ++t) out.push_back(t);
  return out;
}

FracSolution FracSolution::constant(int num_jobs, int horizon, double value) {
  FracSolution x;
  x.num_jobs = num_jobs;
  x.horizon = horizon;
  x.values.assign(static_cast<size_t>(num_jobs) * horizon, value);
  return x;
}

FracSolution FracSolution::from_completions(const CompletionVector& completions,
                                            int horizon) {
  FracSolution x = constant(static_cast<int>(completions.size()), horizon, 0.0);
  for (int j = 0; j < x.num_jobs; ++j)
    for (int t = 1; t <= std::min(completions[j], horizon); ++t)
      x.set(j, t, 1.0);
  return x;
}

bool FracSolution::is_monotone(double eps) const {
  for (int j = 0; j < num_jobs; ++j)
    for (int t = 1; t <= horizon; ++t) {
      const double v = at(j, t);
      if (v < -eps || v > 1.0 + eps) return false;
      if (v > at(j, t - 1) + eps) return false;
    }
  return true;
}

int FracSolution::last_time_at_least(int j, double threshold) const {
  for (int t = horizon; t >= 1; --t)
    if (at(j, t) >= threshold) return t;
  return 0;
}

int FracSolution::last_full_time(int j, double eps) const {
  return last_time_at_least(j, 1.0 - eps);
}

double FracSolution::objective(const Instance& instance) const {
  double total = 0.0;
  for (int j = 0; j < num_jobs; ++j)
    for (int t = 1; t <= horizon; ++t)
      total += at(j, t) * marginal_cost(instance.jobs[j], t);
  return total;
}

std::string FracSolution::digest() const {
  uint64_t hash = 1469598103934665603ull;  // FNV-1a
  auto mix = [&hash](const void* data, size_t len) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < len; ++i) {
      hash ^= bytes[i];
      hash *= 1099511628211ull;
    }
  };
  mix(&num_jobs, sizeof(num_jobs));
  mix(&horizon, sizeof(horizon));
  if (!values.empty()) mix(values.data(), values.size() * sizeof(double));
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

TimeRange earliest_set(const Instance& instance, int b, int j) {
  const int budget = instance.total_work() - instance.machines * (b - 1);
  const int cap = std::min(instance.jobs[j].processing, budget);
  return {b, std::max(cap, 0)};
}

namespace {

// |[0, D_j] ∩ E([b,H], j)| — how much of the eligible run a floor swallows.
int floor_credit(const TimeRange& eligible_run, int floor_time) {
  if (eligible_run.empty() || floor_time < eligible_run.first) return 0;
  return std::min(floor_time - eligible_run.first + 1, eligible_run.count);
}

}  // namespace

int deficiency(const Instance& instance, int b, const std::vector<int>& floors) {
  int value = instance.total_work() - instance.machines * (b - 1);
  for (int j = 0; j < instance.n(); ++j)
    value -= floor_credit(earliest_set(instance, b, j), floors[j]);
  return value;
}

TimeRange eligible_times(const Instance& instance, int b,
                         const std::vector<int>& floors, int j) {
  const int remaining = deficiency(instance, b, floors);
  const TimeRange base = earliest_set(instance, b, j);
  const int skip = floor_credit(base, floors[j]);
  const int first = base.first + skip;
  const int count = std::clamp(std::min(remaining, base.count - skip), 0,
                               std::max(base.count - skip, 0));
  return {first, count};
}

double constraint_lhs(const FracSolution& x, const CutConstraint& cut) {
  double total = 0.0;
  for (int j = 0; j < static_cast<int>(cut.eligible.size()); ++j)
    for (int t = cut.eligible[j].first; t <= cut.eligible[j].last(); ++t)
      total += x.at(j, t);
  return total;
}

std::vector<CutConstraint> zero_floor_cuts(const Instance& instance) {
  std::vector<CutConstraint> cuts;
  const std::vector<int> zeros(instance.n(), 0);
  for (int b = 1; b <= instance.horizon(); ++b) {
    const int value = deficiency(instance, b, zeros);
    if (value <= 0) continue;
    CutConstraint cut;
    cut.start = b;
    cut.floors = zeros;
    cut.deficiency = value;
    cut.eligible.reserve(instance.n());
    for (int j = 0; j < instance.n(); ++j)
      cut.eligible.push_back(eligible_times(instance, b, zeros, j));
    cuts.push_back(std::move(cut));
  }
  return cuts;
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// DP over jobs for a fixed suffix start b and guessed deficiency G.
// State: total floor credit spent; value: least eligible mass reachable.
// Job j with choice k (floor at the k-th entry of its eligible run, k = 0
// meaning no floor) spends credit k and contributes the mass of run entries
// k+1 .. min(k+G, |run|).
struct SuffixSeparator {
  const Instance& instance;
  const FracSolution& x;
  int b;
  int budget;                           // sum p - m(b-1)
  std::vector<int> caps;                // |E([b,H], j)|
  std::vector<std::vector<double>> prefix;  // prefix[j][u] = mass of first u entries

  SuffixSeparator(const Instance& inst, const FracSolution& sol, int start)
      : instance(inst), x(sol), b(start) {
    budget = inst.total_work() - inst.machines * (b - 1);
    const int n = inst.n();
    caps.resize(n);
    prefix.resize(n);
    for (int j = 0; j < n; ++j) {
      caps[j] = std::max(std::min(inst.jobs[j].processing, budget), 0);
      prefix[j].assign(caps[j] + 1, 0.0);
      for (int u = 1; u <= caps[j]; ++u)
        prefix[j][u] = prefix[j][u - 1] + x.at(j, b + u - 1);
    }
  }

  double mass(int j, int k, int guess) const {
    const int hi = std::min(k + guess, caps[j]);
    return hi <= k ? 0.0 : prefix[j][hi] - prefix[j][k];
  }

  // Least achievable mass when the floors must spend exactly `credit` in
  // total; also fills the per-job floor choices for backtracking.
  double run(int guess, int credit, std::vector<int>* floors_out) const {
    const int n = instance.n();
    std::vector<double> prev(credit + 1, kInf), cur(credit + 1, kInf);
    std::vector<std::vector<int>> choice(n, std::vector<int>(credit + 1, -1));
    prev[0] = 0.0;
    for (int j = 0; j < n; ++j) {
      std::fill(cur.begin(), cur.end(), kInf);
      for (int spent = 0; spent <= credit; ++spent) {
        const int k_max = std::min(spent, caps[j]);
        for (int k = 0; k <= k_max; ++k) {
          if (prev[spent - k] == kInf) continue;
          const double candidate = prev[spent - k] + mass(j, k, guess);
          if (candidate < cur[spent]) {
            cur[spent] = candidate;
            choice[j][spent] = k;
          }
        }
      }
      std::swap(prev, cur);
    }
    if (floors_out && prev[credit] < kInf) {
      floors_out->assign(n, 0);
      int spent = credit;
      for (int j = n - 1; j >= 0; --j) {
        const int k = choice[j][spent];
        (*floors_out)[j] = k == 0 ? 0 : b + k - 1;
        spent -= k;
      }
    }
    return prev[credit];
  }
};

}  // namespace

std::optional<CutConstraint> separate(const Instance& instance,
                                      const FracSolution& x, double tol) {
  const int horizon = instance.horizon();
  double best_violation = tol;
  int best_b = -1;
  std::vector<int> best_floors;
  int best_deficiency = 0;

  for (int b = 1; b <= horizon; ++b) {
    const SuffixSeparator sep(instance, x, b);
    if (sep.budget < 1) continue;
    for (int guess = 1; guess <= sep.budget; ++guess) {
      const int credit = sep.budget - guess;
      const double least = sep.run(guess, credit, nullptr);
      if (least == kInf) continue;
      const double violation = guess - least;
      if (violation <= best_violation) continue;
      std::vector<int> floors;
      sep.run(guess, credit, &floors);
      best_violation = violation;
      best_b = b;
      best_floors = std::move(floors);
      best_deficiency = guess;
    }
  }

  if (best_b < 0) return std::nullopt;

  CutConstraint cut;
  cut.start = best_b;
  cut.floors = std::move(best_floors);
  cut.deficiency = best_deficiency;
  if (deficiency(instance, best_b, cut.floors) != best_deficiency)
    throw std::logic_error("separation backtrack produced wrong deficiency");
  for (int j = 0; j < instance.n(); ++j)
    cut.eligible.push_back(eligible_times(instance, best_b, cut.floors, j));
  cut.violation = best_violation;
  return cut;
}

LpModel LpModel::seeded(const Instance& instance) {
  LpModel model;
  model.instance = &instance;
  model.cuts = zero_floor_cuts(instance);
  return model;
}

void LpModel::add_cut(CutConstraint cut) { cuts.push_back(std::move(cut)); }

FracSolution LpModel::solve() const {
  const Instance& inst = *instance;
  const int n = inst.n();
  const int horizon = inst.horizon();
  const int num_vars = n * horizon;

  // Variables are per-step completion increments d(j, tau) >= 0 with
  // x(j, t) = 1 - sum_{tau <= t} d(j, tau); monotonicity and the box bounds
  // collapse to d >= 0 and a per-job budget row sum_tau d(j, tau) <= 1.
  DenseLp lp;
  lp.num_vars = num_vars;
  lp.objective.assign(num_vars, 0.0);
  for (int j = 0; j < n; ++j) {
    const double top = inst.jobs[j].cost.eval(horizon);
    for (int tau = 1; tau <= horizon; ++tau)
      lp.objective[j * horizon + tau - 1] = top - inst.jobs[j].cost.eval(tau - 1);
  }

  for (int j = 0; j < n; ++j) {
    std::vector<double> row(num_vars, 0.0);
    for (int tau = 1; tau <= horizon; ++tau) row[j * horizon + tau - 1] = 1.0;
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(1.0);
  }

  for (const CutConstraint& cut : cuts) {
    std::vector<double> row(num_vars, 0.0);
    int total_eligible = 0;
    for (int j = 0; j < n; ++j) {
      const TimeRange& run = cut.eligible[j];
      if (run.empty()) continue;
      total_eligible += run.count;
      for (int tau = 1; tau <= run.last(); ++tau)
        row[j * horizon + tau - 1] =
            run.last() - std::max(tau, run.first) + 1;
    }
    const double rhs = total_eligible - cut.deficiency;
    if (rhs < 0) throw std::logic_error("cover row unsatisfiable at x = 1");
    lp.rows.push_back(std::move(row));
    lp.rhs.push_back(rhs);
  }

  const SimplexResult solved = simplex_maximize(lp);
  if (solved.status != SimplexResult::Status::Optimal)
    throw std::logic_error("relaxation solve did not reach optimality");

  FracSolution x = FracSolution::constant(n, horizon, 1.0);
  for (int j = 0; j < n; ++j) {
    double dropped = 0.0;
    for (int t = 1; t <= horizon; ++t) {
      dropped += std::max(0.0, solved.x[j * horizon + t - 1]);
      x.set(j, t, std::clamp(1.0 - dropped, 0.0, 1.0));
    }
  }

  for (const CutConstraint& cut : cuts)
    if (constraint_lhs(x, cut) < cut.deficiency - 1e-9)
      throw std::logic_error("relaxation solution violates a model row");
  return x;
}

LpSolveResult solve_lp(const Instance& instance, double tol) {
  instance.validate();
  LpModel model = LpModel::seeded(instance);
  const int ceiling = 10 * instance.n() * instance.horizon();

  LpSolveResult result;
  result.x = model.solve();
  while (true) {
    std::optional<CutConstraint> cut = separate(instance, result.x, tol);
    if (!cut) break;
    if (result.cuts_added >= ceiling)
      throw NonConvergenceError("cut count ceiling reached without convergence");
    model.add_cut(std::move(*cut));
    ++result.cuts_added;
    result.x = model.solve();
  }
  result.value = result.x.objective(instance);
  result.cuts = model.cuts;
  return result;
}

}  // namespace gsp
