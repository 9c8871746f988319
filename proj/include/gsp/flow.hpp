#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gsp/instance.hpp"

namespace gsp {

// Bipartite feasibility network for a completion vector: source -> job j with
// capacity p_j, job j -> interval i with capacity length(i) whenever the
// interval ends by j's (rounded) deadline, interval i -> sink with capacity
// machines * length(i).
struct FlowNet {
  struct Arc {
    int from = 0;
    int to = 0;
    int64_t capacity = 0;
  };

  int num_jobs = 0;
  int num_intervals = 0;
  std::vector<Arc> arcs;
  // Deadlines after rounding up to the grid; arcs job->interval exist exactly
  // for intervals ending at or before these.
  CompletionVector rounded_completions;
  // arc index of job j -> interval i, or -1 when absent.
  std::vector<std::vector<int>> job_interval_arc;

  int source() const { return 0; }
  int job_node(int j) const { return 1 + j; }
  int interval_node(int i) const { return 1 + num_jobs + i; }
  int sink() const { return 1 + num_jobs + num_intervals; }
  int num_nodes() const { return num_jobs + num_intervals + 2; }
};

struct MaxFlowResult {
  int64_t value = 0;
  std::vector<int64_t> arc_flow;  // parallel to FlowNet::arcs
};

// Deadlines strictly inside a compressed interval are rounded up to the
// interval's end before the graph is built. Throws std::invalid_argument when
// some C_j < p_j or C_j is outside (0, H].
FlowNet build_flow_graph(const Instance& instance, const Timeline& timeline,
                         const CompletionVector& completions);

// Exact integral maximum flow (Dinic). Deterministic for a fixed arc order.
MaxFlowResult max_flow(const FlowNet& net);

// True iff the max flow saturates all job arcs, i.e. the completion vector
// admits a schedule. Vectors with C_j < p_j or C_j outside (0, H] are invalid.
bool is_valid(const Instance& instance, const Timeline& timeline,
              const CompletionVector& completions);

// Work assignment: for each interval, per machine, an ordered list of
// (job, units) pieces processed back to back from the interval start.
struct Schedule {
  struct Interval {
    int t_end = 0;
    std::vector<std::vector<std::pair<int, int64_t>>> machines;
  };
  std::vector<Interval> intervals;
};

// Turns a saturating flow into a schedule. Within an interval, jobs are packed
// in ascending id onto machines in ascending id, spilling a job's remainder to
// the next machine; the per-arc bound flow <= interval length keeps the two
// pieces of a spilled job from overlapping in time. Throws std::logic_error if
// the flow does not saturate all job arcs.
Schedule extract_schedule(const Instance& instance, const Timeline& timeline,
                          const CompletionVector& completions,
                          const FlowNet& net, const MaxFlowResult& flow);

struct ValidationReport {
  bool ok = true;
  std::string violation;  // first violated invariant, empty when ok
};

// Independent checker for schedules, including ones loaded from disk. Verifies
// grid structure, machine capacities, the per-interval single-machine rate
// bound, no job on two machines at overlapping times, deadlines against the
// rounded completions, and exact work totals.
ValidationReport validate_schedule(const Instance& instance,
                                   const Timeline& timeline,
                                   const CompletionVector& completions,
                                   const Schedule& schedule);

}  // namespace gsp
