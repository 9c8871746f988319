#pragma once

#include <cstdint>

#include "gsp/instance.hpp"

namespace gsp {

// Deterministic per seed. Processing times are uniform on {1..p_max}; cost
// parameters are uniform on fixed ranges: weights {1..10}, k-norm exponents
// {2, 3}, deadlines {1..H}, step tables with 1-3 strictly increasing steps.
Instance gen_random(int n, int m, int p_max, CostKind kind, uint64_t seed);

// Hard-instance shape: n_triples machines, 3 * n_triples jobs with sizes in
// the window [ceil(B/4), ceil(B/2) - 1] and a throughput step of height W at
// deadline B. With feasible = true, sizes come from random triples summing to
// B, so a zero-cost preemptive schedule exists; otherwise sizes are iid on
// the window. Throws when B < 4 or the window admits no triple.
Instance gen_three_partition(int B, int n_triples, bool feasible,
                             uint64_t seed, double step_height = 1.0);

}  // namespace gsp
