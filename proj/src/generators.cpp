#include "gsp/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>

namespace gsp {

namespace {

// Modulo draw: bias is irrelevant here and the stream is identical across
// standard libraries, which std::uniform_int_distribution is not.
int draw(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

}  // namespace

Instance gen_random(int n, int m, int p_max, CostKind kind, uint64_t seed) {
  if (n < 1 || m < 1 || p_max < 1)
    throw std::invalid_argument("gen_random needs n, m, p_max >= 1");

  std::mt19937_64 rng(seed);
  Instance instance;
  instance.machines = m;
  instance.jobs.resize(n);
  for (int j = 0; j < n; ++j) {
    instance.jobs[j].id = j;
    instance.jobs[j].processing = draw(rng, 1, p_max);
  }
  const int horizon = instance.horizon();

  for (int j = 0; j < n; ++j) {
    const double w = draw(rng, 1, 10);
    switch (kind) {
      case CostKind::WeightedCompletion:
        instance.jobs[j].cost = CostFn::weighted_completion(w);
        break;
      case CostKind::WeightedKNorm:
        instance.jobs[j].cost = CostFn::weighted_knorm(w, draw(rng, 2, 3));
        break;
      case CostKind::Throughput:
        instance.jobs[j].cost = CostFn::throughput(w, draw(rng, 1, horizon));
        break;
      case CostKind::Tardiness:
        instance.jobs[j].cost = CostFn::tardiness(w, draw(rng, 1, horizon));
        break;
      case CostKind::Exponential:
        instance.jobs[j].cost = CostFn::exponential(w);
        break;
      case CostKind::StepTable: {
        const int steps = draw(rng, 1, 3);
        std::set<int> times;
        while (static_cast<int>(times.size()) < steps)
          times.insert(draw(rng, 1, horizon));
        std::vector<std::pair<int, double>> entries;
        double level = 0.0;
        for (int t : times) {
          level += draw(rng, 1, 5);
          entries.emplace_back(t, level);
        }
        instance.jobs[j].cost = CostFn::step_table(std::move(entries));
        break;
      }
    }
  }
  instance.validate();
  return instance;
}

Instance gen_three_partition(int B, int n_triples, bool feasible,
                             uint64_t seed, double step_height) {
  if (B < 4) throw std::invalid_argument("three-partition needs B >= 4");
  if (n_triples < 1) throw std::invalid_argument("need at least one triple");
  if (step_height <= 0.0) throw std::invalid_argument("step height must be > 0");

  const int lo = (B + 3) / 4;        // smallest integer >= B/4
  const int hi = (B + 1) / 2 - 1;    // largest integer < B/2
  std::vector<std::array<int, 3>> triples;
  for (int a = lo; a <= hi; ++a)
    for (int b = a; b <= hi; ++b) {
      const int c = B - a - b;
      if (c >= b && c <= hi) triples.push_back({a, b, c});
    }
  if (feasible && triples.empty())
    throw std::invalid_argument("no item triple fits the size window for this B");

  std::mt19937_64 rng(seed);
  std::vector<int> sizes;
  if (feasible) {
    for (int k = 0; k < n_triples; ++k) {
      const auto& triple = triples[rng() % triples.size()];
      sizes.insert(sizes.end(), triple.begin(), triple.end());
    }
  } else {
    if (lo > hi) throw std::invalid_argument("empty size window for this B");
    for (int k = 0; k < 3 * n_triples; ++k) sizes.push_back(draw(rng, lo, hi));
  }
  // Deterministic Fisher-Yates so instances do not expose the triples.
  for (size_t i = sizes.size(); i > 1; --i)
    std::swap(sizes[i - 1], sizes[rng() % i]);

  Instance instance;
  instance.machines = n_triples;
  instance.jobs.resize(sizes.size());
  for (size_t j = 0; j < sizes.size(); ++j) {
    instance.jobs[j].id = static_cast<int>(j);
    instance.jobs[j].processing = sizes[j];
    instance.jobs[j].cost = CostFn::throughput(step_height, B);
  }
  instance.validate();
  return instance;
}

}  // namespace gsp
