#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

namespace qorep {

// Capacitated bipartite transport: every unit of demand must be routed along
// an edge to a supply node without exceeding its capacity. With
// `unbounded_supply` the capacities are ignored.
struct TransportProblem {
  std::vector<std::uint64_t> demand;
  std::vector<std::uint64_t> supply;
  /// Per demand node, the admissible supply nodes in ascending order.
  std::vector<std::vector<std::size_t>> edges;
  bool unbounded_supply = false;
};

struct Transfer {
  std::size_t source = 0;
  std::size_t target = 0;
  std::uint64_t amount = 0;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

namespace detail {

class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : graph_(nodes), level_(nodes), cursor_(nodes) {}

  void add_edge(std::size_t from, std::size_t to, std::uint64_t cap) {
    graph_[from].push_back({to, graph_[to].size(), cap});
    graph_[to].push_back({from, graph_[from].size() - 1, 0});
  }

  std::uint64_t run(std::size_t s, std::size_t t) {
    std::uint64_t total = 0;
    while (bfs(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (auto pushed = dfs(s, t, std::numeric_limits<std::uint64_t>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Arc {
    std::size_t to;
    std::size_t rev;
    std::uint64_t cap;
  };

  bool bfs(std::size_t s, std::size_t t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<std::size_t> queue;
    level_[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop();
      for (const auto& arc : graph_[v])
        if (arc.cap > 0 && level_[arc.to] < 0) {
          level_[arc.to] = level_[v] + 1;
          queue.push(arc.to);
        }
    }
    return level_[t] >= 0;
  }

  std::uint64_t dfs(std::size_t v, std::size_t t, std::uint64_t limit) {
    if (v == t) return limit;
    for (auto& i = cursor_[v]; i < graph_[v].size(); ++i) {
      auto& arc = graph_[v][i];
      if (arc.cap == 0 || level_[arc.to] != level_[v] + 1) continue;
      if (auto pushed = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        graph_[arc.to][arc.rev].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> graph_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

inline std::uint64_t total_demand(const TransportProblem& p) {
  std::uint64_t sum = 0;
  for (auto d : p.demand) sum += d;
  return sum;
}

}  // namespace detail

/// True iff all demand can be routed.
inline bool is_feasible(const TransportProblem& p) {
  if (p.unbounded_supply) {
    for (std::size_t i = 0; i < p.demand.size(); ++i)
      if (p.demand[i] > 0 && p.edges[i].empty()) return false;
    return true;
  }
  const std::size_t m = p.demand.size(), n = p.supply.size();
  const std::size_t source = m + n, sink = m + n + 1;
  detail::MaxFlow flow(m + n + 2);
  const auto need = detail::total_demand(p);
  for (std::size_t i = 0; i < m; ++i) {
    if (p.demand[i] == 0) continue;
    flow.add_edge(source, i, p.demand[i]);
    for (auto j : p.edges[i]) flow.add_edge(i, m + j, p.demand[i]);
  }
  for (std::size_t j = 0; j < n; ++j)
    if (p.supply[j] > 0) flow.add_edge(m + j, sink, p.supply[j]);
  return flow.run(source, sink) == need;
}

/// Decides feasibility and, when feasible, returns the canonical routing: edges
/// are visited in (demand, supply) order and each carries as much as the rest
/// of the problem still allows, so every demand fills its earliest targets first.
inline std::optional<std::vector<Transfer>> feasible_matching(const TransportProblem& p) {
  if (!is_feasible(p)) return std::nullopt;
  std::vector<Transfer> out;

  if (p.unbounded_supply) {
    for (std::size_t i = 0; i < p.demand.size(); ++i)
      if (p.demand[i] > 0) out.push_back({i, p.edges[i].front(), p.demand[i]});
    return out;
  }

  TransportProblem rest = p;
  for (std::size_t i = 0; i < p.demand.size(); ++i) {
    while (rest.demand[i] > 0 && !rest.edges[i].empty()) {
      const auto j = rest.edges[i].front();
      // Largest t such that forcing t units onto (i, j) stays feasible. The
      // feasible amounts form an interval containing 0, so bisect.
      std::uint64_t lo = 0, hi = std::min(rest.demand[i], rest.supply[j]);
      while (lo < hi) {
        const auto mid = lo + (hi - lo + 1) / 2;
        TransportProblem probe = rest;
        probe.demand[i] -= mid;
        probe.supply[j] -= mid;
        if (is_feasible(probe))
          lo = mid;
        else
          hi = mid - 1;
      }
      if (lo > 0) {
        out.push_back({i, j, lo});
        rest.demand[i] -= lo;
        rest.supply[j] -= lo;
      }
      rest.edges[i].erase(rest.edges[i].begin());
    }
  }
  return out;
}

}  // namespace qorep
