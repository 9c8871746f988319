#include "gsp/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gsp {

double default_sampling_scale(const Instance& instance) {
  const double np =
      static_cast<double>(instance.n()) * instance.max_processing();
  const double inner = std::log(np);
  const double loglog = inner > 1.0 ? std::log(inner) : 0.0;
  return std::min(0.1, 1.0 / (1000.0 * std::max(1.0, loglog)));
}

std::pair<double, double> split_cost(const Instance& instance,
                                     const FracSolution& x) {
  double integral = 0.0;
  double fractional = 0.0;
  for (int j = 0; j < x.num_jobs; ++j) {
    const int full_until = x.last_full_time(j);
    integral += instance.jobs[j].cost.eval(full_until);
    for (int t = full_until + 1; t <= x.horizon; ++t)
      fractional += x.at(j, t) * marginal_cost(instance.jobs[j], t);
  }
  return {integral, fractional};
}

SampleResult sample(const FracSolution& x, double c, std::mt19937_64& rng) {
  if (!(c > 0.0) || c > 0.1 + 1e-12)
    throw std::invalid_argument("sampling scale must lie in (0, 1/10]");
  SampleResult result;
  result.alpha.resize(x.num_jobs);
  result.completions.resize(x.num_jobs);
  for (int j = 0; j < x.num_jobs; ++j) {
    // 53-bit uniform in [0, 1); identical streams for identical seeds on any
    // platform, unlike std::uniform_real_distribution.
    result.alpha[j] = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    result.completions[j] = x.last_time_at_least(j, c * result.alpha[j]);
  }
  return result;
}

FracSolution integralize(const CompletionVector& completions, int horizon) {
  return FracSolution::from_completions(completions, horizon);
}

std::vector<int> unsatisfied_cuts(const Instance& instance,
                                  const CompletionVector& completions) {
  std::vector<int> starts;
  for (int b = 1; b <= instance.horizon(); ++b)
    if (deficiency(instance, b, completions) > 0) starts.push_back(b);
  return starts;
}

std::vector<int> critical_jobs(const Instance& instance,
                               const FracSolution& x_prev, int b,
                               const std::vector<int>& floors) {
  const int remaining = deficiency(instance, b, floors);
  if (remaining <= 0)
    throw std::invalid_argument("critical_jobs needs a positive deficiency");

  std::vector<int> contributors;
  std::vector<double> mass(instance.n(), 0.0);
  for (int j = 0; j < instance.n(); ++j) {
    const TimeRange run = eligible_times(instance, b, floors, j);
    for (int t = run.first; t <= run.last(); ++t) mass[j] += x_prev.at(j, t);
    if (mass[j] > 0.0) contributors.push_back(j);
  }

  const double target = remaining / 10.0;
  auto prefix_until = [&](bool decreasing) {
    std::vector<int> order = contributors;
    std::sort(order.begin(), order.end(), [&](int a, int b2) {
      if (floors[a] != floors[b2])
        return decreasing ? floors[a] > floors[b2] : floors[a] < floors[b2];
      return a < b2;
    });
    std::vector<int> prefix;
    double cumulative = 0.0;
    for (int j : order) {
      prefix.push_back(j);
      cumulative += mass[j];
      if (cumulative >= target) return prefix;
    }
    return prefix;  // mass never reaches the target: the whole set
  };

  const std::vector<int> late_prefix = prefix_until(true);
  const std::vector<int> early_prefix = prefix_until(false);

  std::vector<bool> excluded(instance.n(), false);
  for (int j : late_prefix) excluded[j] = true;
  for (int j : early_prefix) excluded[j] = true;

  std::vector<int> critical;
  for (int j : contributors)
    if (!excluded[j]) critical.push_back(j);
  if (critical.empty()) critical = contributors;  // degenerate overlap
  return critical;
}

FracSolution reinflate(const FracSolution& x_prev,
                       const CompletionVector& completions,
                       const std::vector<int>& critical_union) {
  FracSolution next =
      FracSolution::from_completions(completions, x_prev.horizon);
  for (int j : critical_union)
    for (int t = completions[j] + 1; t <= x_prev.horizon; ++t)
      next.set(j, t, std::min(1.0, 10.0 * x_prev.at(j, t)));
  if (!next.is_monotone())
    throw std::logic_error("reinflated solution lost monotonicity");
  return next;
}

namespace {

// Fallback for exhausted phase budgets: take the support of the current
// solution as completions and push the cheapest next unit of cost until the
// vector is valid. C = (H, ..., H) is always valid, so this terminates.
CompletionVector fallback_completions(const Instance& instance,
                                      const Timeline& unit,
                                      const FracSolution& x) {
  CompletionVector completions(instance.n(), 0);
  for (int j = 0; j < instance.n(); ++j)
    for (int t = x.horizon; t >= 1; --t)
      if (x.at(j, t) > 0.0) {
        completions[j] = t;
        break;
      }

  const int horizon = instance.horizon();
  auto valid = [&] {
    for (int j = 0; j < instance.n(); ++j)
      if (completions[j] < instance.jobs[j].processing) return false;
    return is_valid(instance, unit, completions);
  };
  while (!valid()) {
    int pick = -1;
    double cheapest = 0.0;
    for (int j = 0; j < instance.n(); ++j) {
      if (completions[j] >= horizon) continue;
      const double added = marginal_cost(instance.jobs[j], completions[j] + 1);
      if (pick < 0 || added < cheapest) {
        pick = j;
        cheapest = added;
      }
    }
    if (pick < 0) throw std::logic_error("fallback ran past the horizon");
    ++completions[pick];
  }
  return completions;
}

Schedule final_schedule(const Instance& instance, const Timeline& timeline,
                        const CompletionVector& completions) {
  const FlowNet net = build_flow_graph(instance, timeline, completions);
  const MaxFlowResult flow = max_flow(net);
  return extract_schedule(instance, timeline, completions, net, flow);
}

}  // namespace

RunResult run(const Instance& instance, const FracSolution& initial,
              const RoundingConfig& config, GridMode schedule_grid) {
  if (initial.num_jobs != instance.n() ||
      initial.horizon != instance.horizon())
    throw std::invalid_argument("solution shape does not match the instance");
  if (!initial.is_monotone())
    throw std::invalid_argument("rounding input must be monotone");

  const Timeline unit = build_timeline(instance, GridMode::Unit);
  const Timeline out_grid = schedule_grid == GridMode::Unit
                                ? unit
                                : build_timeline(instance, schedule_grid);
  std::mt19937_64 rng(config.seed);
  const double np =
      static_cast<double>(instance.max_processing()) * instance.n();
  const double snap_threshold = 1.0 / (np * np);

  RunResult result;
  FracSolution x = initial;

  auto finish = [&](CompletionVector completions, bool early, bool fallback) {
    result.completions = std::move(completions);
    result.schedule = final_schedule(instance, out_grid, result.completions);
    result.early_exit_used = early;
    result.fallback_used = fallback;
    return result;
  };

  for (int phase = 1; phase <= config.max_phases; ++phase) {
    result.phases_used = phase;
    const auto [lp_int, lp_frac] = split_cost(instance, x);

    // Snap-to-zero early exit: once every fractional entry is negligible the
    // integral part alone satisfies every cover row.
    bool all_tiny = true;
    for (double v : x.values)
      if (v > 0.0 && v < 1.0 && v >= snap_threshold) {
        all_tiny = false;
        break;
      }
    if (all_tiny) {
      CompletionVector snapped(instance.n(), 0);
      for (int j = 0; j < instance.n(); ++j)
        snapped[j] = x.last_full_time(j);
      if (unsatisfied_cuts(instance, snapped).empty()) {
        PhaseRecord record;
        record.phase = phase;
        record.completions = snapped;
        record.lp_int = lp_int;
        record.lp_frac = lp_frac;
        record.early_exit = true;
        result.trace.push_back(std::move(record));
        return finish(std::move(snapped), true, false);
      }
    }

    PhaseRecord record;
    record.phase = phase;
    record.lp_int = lp_int;
    record.lp_frac = lp_frac;
    SampleResult drawn = sample(x, config.c, rng);
    record.alpha = std::move(drawn.alpha);
    record.completions = drawn.completions;

    const std::vector<int> violated =
        unsatisfied_cuts(instance, drawn.completions);
    const bool schedulable = is_valid(instance, unit, drawn.completions);
    if (violated.empty() != schedulable)
      throw std::logic_error(
          "cover-row test disagrees with the flow feasibility check");

    if (violated.empty()) {
      result.trace.push_back(std::move(record));
      return finish(std::move(drawn.completions), false, false);
    }

    std::vector<bool> in_union(instance.n(), false);
    record.cut_starts = violated;
    for (int b : violated) {
      std::vector<int> critical =
          critical_jobs(instance, x, b, drawn.completions);
      for (int j : critical) in_union[j] = true;
      record.critical_sets.push_back(std::move(critical));
    }
    std::vector<int> critical_union;
    for (int j = 0; j < instance.n(); ++j)
      if (in_union[j]) critical_union.push_back(j);

    FracSolution next = reinflate(x, drawn.completions, critical_union);
    if (config.verify_reinflation) {
      if (auto cut = separate(instance, next, config.tol))
        throw std::logic_error(
            "reinflated solution violates a cover row (b=" +
            std::to_string(cut->start) + ")");
    }
    record.next_x_digest = next.digest();
    result.trace.push_back(std::move(record));
    x = std::move(next);
  }

  return finish(fallback_completions(instance, unit, x), false, true);
}

}  // namespace gsp
