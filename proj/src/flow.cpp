#include "gsp/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace gsp {

namespace {

void check_completions(const Instance& instance,
                       const CompletionVector& completions) {
  if (static_cast<int>(completions.size()) != instance.n())
    throw std::invalid_argument("completion vector size mismatch");
  const int horizon = instance.horizon();
  for (int j = 0; j < instance.n(); ++j) {
    if (completions[j] < instance.jobs[j].processing)
      throw std::invalid_argument("completion time below processing time");
    if (completions[j] > horizon)
      throw std::invalid_argument("completion time beyond the horizon");
  }
}

}  // namespace

FlowNet build_flow_graph(const Instance& instance, const Timeline& timeline,
                         const CompletionVector& completions) {
  check_completions(instance, completions);

  FlowNet net;
  net.num_jobs = instance.n();
  net.num_intervals = timeline.size();
  net.rounded_completions.resize(net.num_jobs);
  net.job_interval_arc.assign(net.num_jobs,
                              std::vector<int>(net.num_intervals, -1));

  for (int j = 0; j < net.num_jobs; ++j)
    net.arcs.push_back(
        {net.source(), net.job_node(j), instance.jobs[j].processing});

  for (int j = 0; j < net.num_jobs; ++j) {
    net.rounded_completions[j] = timeline.round_up(completions[j]);
    for (int i = 0; i < net.num_intervals; ++i) {
      if (timeline.end(i) > net.rounded_completions[j]) break;
      net.job_interval_arc[j][i] = static_cast<int>(net.arcs.size());
      net.arcs.push_back(
          {net.job_node(j), net.interval_node(i), timeline.length(i)});
    }
  }

  for (int i = 0; i < net.num_intervals; ++i)
    net.arcs.push_back({net.interval_node(i), net.sink(),
                        static_cast<int64_t>(instance.machines) *
                            timeline.length(i)});
  return net;
}

namespace {

// Dinic on an explicit residual edge list.
struct Dinic {
  struct Edge {
    int to;
    int rev;
    int64_t cap;
  };

  std::vector<std::vector<Edge>> graph;
  std::vector<int> level;
  std::vector<size_t> iter;

  explicit Dinic(int nodes) : graph(nodes), level(nodes), iter(nodes) {}

  void add_edge(int from, int to, int64_t cap) {
    graph[from].push_back({to, static_cast<int>(graph[to].size()), cap});
    graph[to].push_back({from, static_cast<int>(graph[from].size()) - 1, 0});
  }

  bool bfs(int s, int t) {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> queue;
    level[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (const Edge& e : graph[v]) {
        if (e.cap > 0 && level[e.to] < 0) {
          level[e.to] = level[v] + 1;
          queue.push(e.to);
        }
      }
    }
    return level[t] >= 0;
  }

  int64_t dfs(int v, int t, int64_t limit) {
    if (v == t) return limit;
    for (size_t& i = iter[v]; i < graph[v].size(); ++i) {
      Edge& e = graph[v][i];
      if (e.cap <= 0 || level[v] >= level[e.to]) continue;
      int64_t pushed = dfs(e.to, t, std::min(limit, e.cap));
      if (pushed > 0) {
        e.cap -= pushed;
        graph[e.to][e.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  int64_t run(int s, int t) {
    int64_t total = 0;
    while (bfs(s, t)) {
      std::fill(iter.begin(), iter.end(), 0);
      while (int64_t pushed = dfs(s, t, std::numeric_limits<int64_t>::max()))
        total += pushed;
    }
    return total;
  }
};

}  // namespace

MaxFlowResult max_flow(const FlowNet& net) {
  Dinic dinic(net.num_nodes());
  std::vector<std::pair<int, int>> handles;  // (node, edge index) per arc
  handles.reserve(net.arcs.size());
  for (const auto& arc : net.arcs) {
    handles.emplace_back(arc.from, static_cast<int>(dinic.graph[arc.from].size()));
    dinic.add_edge(arc.from, arc.to, arc.capacity);
  }

  MaxFlowResult result;
  result.value = dinic.run(net.source(), net.sink());
  result.arc_flow.resize(net.arcs.size());
  for (size_t a = 0; a < net.arcs.size(); ++a) {
    const auto& [node, idx] = handles[a];
    result.arc_flow[a] = net.arcs[a].capacity - dinic.graph[node][idx].cap;
  }
  return result;
}

bool is_valid(const Instance& instance, const Timeline& timeline,
              const CompletionVector& completions) {
  if (static_cast<int>(completions.size()) != instance.n())
    throw std::invalid_argument("completion vector size mismatch");
  const int horizon = instance.horizon();
  for (int j = 0; j < instance.n(); ++j) {
    if (completions[j] < instance.jobs[j].processing) return false;
    if (completions[j] > horizon)
      throw std::invalid_argument("completion time beyond the horizon");
  }
  FlowNet net = build_flow_graph(instance, timeline, completions);
  return max_flow(net).value == instance.total_work();
}

Schedule extract_schedule(const Instance& instance, const Timeline& timeline,
                          const CompletionVector& completions,
                          const FlowNet& net, const MaxFlowResult& flow) {
  if (flow.value != instance.total_work())
    throw std::logic_error("extract_schedule needs a saturating flow");

  Schedule schedule;
  schedule.intervals.resize(timeline.size());
  for (int i = 0; i < timeline.size(); ++i) {
    auto& interval = schedule.intervals[i];
    interval.t_end = timeline.end(i);
    interval.machines.assign(instance.machines, {});

    const int64_t capacity = timeline.length(i);
    int machine = 0;
    int64_t used = 0;
    for (int j = 0; j < net.num_jobs; ++j) {
      const int arc = net.job_interval_arc[j][i];
      if (arc < 0) continue;
      int64_t remaining = flow.arc_flow[arc];
      while (remaining > 0) {
        if (used == capacity) {
          ++machine;
          used = 0;
        }
        if (machine >= instance.machines)
          throw std::logic_error("flow exceeds interval machine capacity");
        const int64_t take = std::min(remaining, capacity - used);
        interval.machines[machine].emplace_back(j, take);
        used += take;
        remaining -= take;
      }
    }
  }
  (void)completions;
  return schedule;
}

ValidationReport validate_schedule(const Instance& instance,
                                   const Timeline& timeline,
                                   const CompletionVector& completions,
                                   const Schedule& schedule) {
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };

  if (static_cast<int>(schedule.intervals.size()) != timeline.size())
    return fail("structure violation: interval count does not match the grid");
  const int n = instance.n();
  if (static_cast<int>(completions.size()) != n)
    return fail("structure violation: completion vector size mismatch");
  for (int j = 0; j < n; ++j)
    if (completions[j] < 1 || completions[j] > instance.horizon())
      return fail("structure violation: completion time outside (0, H]");

  std::vector<int64_t> total_units(n, 0);
  for (int i = 0; i < timeline.size(); ++i) {
    const auto& interval = schedule.intervals[i];
    if (interval.t_end != timeline.end(i))
      return fail("structure violation: interval end does not match the grid");
    if (static_cast<int>(interval.machines.size()) > instance.machines)
      return fail("capacity violation: more machines used than available");

    const int64_t length = timeline.length(i);
    std::vector<std::vector<std::pair<int64_t, int64_t>>> windows(n);
    std::vector<int64_t> job_units(n, 0);
    for (const auto& machine : interval.machines) {
      int64_t cursor = 0;
      for (const auto& [job, units] : machine) {
        if (job < 0 || job >= n)
          return fail("structure violation: job index out of range");
        if (units < 1) return fail("structure violation: piece with no units");
        windows[job].emplace_back(cursor, cursor + units);
        cursor += units;
        job_units[job] += units;
      }
      if (cursor > length)
        return fail("capacity violation: machine load exceeds the interval length");
    }

    for (int j = 0; j < n; ++j) {
      if (job_units[j] == 0) continue;
      if (job_units[j] > length)
        return fail("capacity violation: job exceeds the interval length");
      if (timeline.end(i) > timeline.round_up(completions[j]))
        return fail("deadline violation");
      auto& spans = windows[j];
      std::sort(spans.begin(), spans.end());
      for (size_t s = 1; s < spans.size(); ++s)
        if (spans[s].first < spans[s - 1].second)
          return fail("simultaneity violation: job on two machines at once");
      total_units[j] += job_units[j];
    }
  }

  for (int j = 0; j < n; ++j)
    if (total_units[j] != instance.jobs[j].processing)
      return fail("work violation: job units do not sum to its processing time");

  return {};
}

}  // namespace gsp
