#include "gsp/instance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

namespace gsp {

double CostFn::eval(int t) const {
  if (t <= 0) return 0.0;
  switch (kind) {
    case CostKind::WeightedCompletion:
      return weight * t;
    case CostKind::WeightedKNorm:
      return weight * std::pow(static_cast<double>(t), exponent);
    case CostKind::Throughput:
      return t <= deadline ? 0.0 : weight;
    case CostKind::Tardiness:
      return t <= deadline ? 0.0 : weight * (t - deadline);
    case CostKind::Exponential:
      return weight * std::exp(static_cast<double>(t));
    case CostKind::StepTable: {
      double value = 0.0;
      for (const auto& [time, cost] : table) {
        if (time > t) break;
        value = cost;
      }
      return value;
    }
  }
  return 0.0;
}

void CostFn::validate() const {
  if (weight < 0.0 || !std::isfinite(weight))
    throw std::invalid_argument("cost weight must be finite and >= 0");
  if (kind == CostKind::WeightedKNorm && (exponent < 1.0 || !std::isfinite(exponent)))
    throw std::invalid_argument("k-norm exponent must be >= 1");
  if ((kind == CostKind::Throughput || kind == CostKind::Tardiness) &&
      (deadline < 0.0 || !std::isfinite(deadline)))
    throw std::invalid_argument("deadline must be >= 0");
  if (kind == CostKind::StepTable) {
    int prev_time = std::numeric_limits<int>::min();
    double prev_cost = 0.0;
    for (const auto& [time, cost] : table) {
      if (time < 0) throw std::invalid_argument("step table times must be >= 0");
      if (time <= prev_time)
        throw std::invalid_argument("step table times must be strictly increasing");
      if (cost < 0.0 || !std::isfinite(cost))
        throw std::invalid_argument("step table costs must be finite and >= 0");
      if (cost < prev_cost)
        throw std::invalid_argument("step table costs must be non-decreasing");
      if (time == 0 && cost != 0.0)
        throw std::invalid_argument("step table cost at time 0 must be 0");
      prev_time = time;
      prev_cost = cost;
    }
  }
}

CostFn CostFn::weighted_completion(double w) {
  return CostFn{CostKind::WeightedCompletion, w, 1.0, 0.0, {}};
}
CostFn CostFn::weighted_knorm(double w, double k) {
  return CostFn{CostKind::WeightedKNorm, w, k, 0.0, {}};
}
CostFn CostFn::throughput(double w, double d) {
  return CostFn{CostKind::Throughput, w, 1.0, d, {}};
}
CostFn CostFn::tardiness(double w, double d) {
  return CostFn{CostKind::Tardiness, w, 1.0, d, {}};
}
CostFn CostFn::exponential(double w) {
  return CostFn{CostKind::Exponential, w, 1.0, 0.0, {}};
}
CostFn CostFn::step_table(std::vector<std::pair<int, double>> entries) {
  CostFn fn{CostKind::StepTable, 0.0, 1.0, 0.0, std::move(entries)};
  return fn;
}

const char* cost_kind_name(CostKind kind) {
  switch (kind) {
    case CostKind::WeightedCompletion: return "weighted-completion";
    case CostKind::WeightedKNorm: return "weighted-knorm";
    case CostKind::Throughput: return "throughput";
    case CostKind::Tardiness: return "tardiness";
    case CostKind::Exponential: return "exponential";
    case CostKind::StepTable: return "step-table";
  }
  return "unknown";
}

CostKind cost_kind_from_name(const std::string& name) {
  if (name == "weighted-completion") return CostKind::WeightedCompletion;
  if (name == "weighted-knorm") return CostKind::WeightedKNorm;
  if (name == "throughput") return CostKind::Throughput;
  if (name == "tardiness") return CostKind::Tardiness;
  if (name == "exponential") return CostKind::Exponential;
  if (name == "step-table") return CostKind::StepTable;
  throw std::invalid_argument("unknown cost kind: " + name);
}

double marginal_cost(const Job& job, int t) {
  return job.cost.eval(t) - job.cost.eval(t - 1);
}

int Instance::max_processing() const {
  int p = 0;
  for (const auto& job : jobs) p = std::max(p, job.processing);
  return p;
}

int Instance::total_work() const {
  int total = 0;
  for (const auto& job : jobs) total += job.processing;
  return total;
}

void Instance::validate() const {
  if (machines < 1) throw std::invalid_argument("machine count must be >= 1");
  if (jobs.empty()) throw std::invalid_argument("instance must have at least one job");
  for (int j = 0; j < n(); ++j) {
    if (jobs[j].id != j) throw std::invalid_argument("job ids must be 0..n-1 in order");
    if (jobs[j].processing < 1)
      throw std::invalid_argument("processing times must be >= 1");
    jobs[j].cost.validate();
  }
}

int Timeline::round_up(int t) const {
  auto it = std::lower_bound(ends.begin(), ends.end(), t);
  if (it == ends.end()) throw std::invalid_argument("time beyond the horizon");
  return *it;
}

int Timeline::interval_of(int t) const {
  auto it = std::lower_bound(ends.begin(), ends.end(), t);
  if (it == ends.end()) throw std::invalid_argument("time beyond the horizon");
  return static_cast<int>(it - ends.begin());
}

Timeline build_timeline(const Instance& instance, GridMode mode) {
  const int horizon = instance.horizon();
  Timeline timeline;
  if (mode == GridMode::Unit) {
    timeline.ends.resize(horizon);
    for (int t = 1; t <= horizon; ++t) timeline.ends[t - 1] = t;
    return timeline;
  }

  std::set<int> points;
  points.insert(horizon);
  for (const auto& job : instance.jobs) {
    const double top = job.cost.eval(horizon);
    // First time the cost reaches each power of two. eval is non-decreasing,
    // so binary search over the horizon works.
    for (double threshold = 1.0; threshold <= top; threshold *= 2.0) {
      int lo = 1, hi = horizon;
      while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (job.cost.eval(mid) >= threshold)
          hi = mid;
        else
          lo = mid + 1;
      }
      points.insert(lo);
    }
  }
  timeline.ends.assign(points.begin(), points.end());
  return timeline;
}

}  // namespace gsp
