#include "rankrange/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "rankrange/errors.hpp"

namespace rankrange {

namespace {

class Dinic {
 public:
  explicit Dinic(int nodes) : graph_(static_cast<std::size_t>(nodes)), level_(graph_.size()), cursor_(graph_.size()) {}

  int add_edge(int from, int to, long long cap) {
    graph_[static_cast<std::size_t>(from)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap});
    graph_[static_cast<std::size_t>(to)].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0});
    return static_cast<int>(edges_.size()) - 2;
  }

  long long flow_on(int edge) const { return edges_[static_cast<std::size_t>(edge ^ 1)].cap; }

  long long max_flow(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
      std::fill(cursor_.begin(), cursor_.end(), 0);
      while (long long pushed = dfs(s, t, std::numeric_limits<long long>::max())) total += pushed;
    }
    return total;
  }

 private:
  struct Edge {
    int to;
    long long cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> queue;
    level_[static_cast<std::size_t>(s)] = 0;
    queue.push(s);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int id : graph_[static_cast<std::size_t>(u)]) {
        const Edge& e = edges_[static_cast<std::size_t>(id)];
        if (e.cap > 0 && level_[static_cast<std::size_t>(e.to)] < 0) {
          level_[static_cast<std::size_t>(e.to)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push(e.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int u, int t, long long limit) {
    if (u == t) return limit;
    auto& i = cursor_[static_cast<std::size_t>(u)];
    for (; i < graph_[static_cast<std::size_t>(u)].size(); ++i) {
      const int id = graph_[static_cast<std::size_t>(u)][i];
      Edge& e = edges_[static_cast<std::size_t>(id)];
      if (e.cap <= 0 || level_[static_cast<std::size_t>(e.to)] != level_[static_cast<std::size_t>(u)] + 1) continue;
      if (long long pushed = dfs(e.to, t, std::min(limit, e.cap))) {
        e.cap -= pushed;
        edges_[static_cast<std::size_t>(id ^ 1)].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<int>> graph_;
  std::vector<Edge> edges_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace

std::optional<std::vector<int>> polygamous_matching(int left, int right, std::span<const std::pair<int, int>> edges,
                                                    std::span<const int> alpha, std::span<const int> beta) {
  if (static_cast<int>(alpha.size()) != right || static_cast<int>(beta.size()) != right)
    throw LengthMismatchError("degree bounds must have one entry per right node");
  for (int w = 0; w < right; ++w)
    if (alpha[static_cast<std::size_t>(w)] < 0 || alpha[static_cast<std::size_t>(w)] > beta[static_cast<std::size_t>(w)])
      return std::nullopt;

  const int source = 0, sink = left + right + 1, super_source = sink + 1, super_sink = sink + 2;
  auto left_node = [](int v) { return 1 + v; };
  auto right_node = [left](int w) { return 1 + left + w; };
  Dinic flow(super_sink + 1);
  std::vector<long long> excess(static_cast<std::size_t>(super_sink + 1), 0);

  // Lower bounds move to the excess ledger; only the slack stays on the edge.
  for (int v = 0; v < left; ++v) {
    excess[static_cast<std::size_t>(source)] -= 1;
    excess[static_cast<std::size_t>(left_node(v))] += 1;
  }
  std::vector<int> edge_ids;
  for (auto [v, w] : edges) {
    if (v < 0 || v >= left || w < 0 || w >= right) throw RangeError("matching edge endpoint out of range");
    edge_ids.push_back(flow.add_edge(left_node(v), right_node(w), 1));
  }
  for (int w = 0; w < right; ++w) {
    const int lo = alpha[static_cast<std::size_t>(w)], hi = beta[static_cast<std::size_t>(w)];
    if (hi > lo) flow.add_edge(right_node(w), sink, hi - lo);
    excess[static_cast<std::size_t>(right_node(w))] -= lo;
    excess[static_cast<std::size_t>(sink)] += lo;
  }
  flow.add_edge(sink, source, std::numeric_limits<long long>::max() / 4);

  long long required = 0;
  for (int u = 0; u <= sink; ++u) {
    const long long e = excess[static_cast<std::size_t>(u)];
    if (e > 0) {
      flow.add_edge(super_source, u, e);
      required += e;
    } else if (e < 0) {
      flow.add_edge(u, super_sink, -e);
    }
  }
  if (flow.max_flow(super_source, super_sink) != required) return std::nullopt;

  std::vector<int> assignment(static_cast<std::size_t>(left), -1);
  for (std::size_t i = 0; i < edge_ids.size(); ++i)
    if (flow.flow_on(edge_ids[i]) > 0) assignment[static_cast<std::size_t>(edges[i].first)] = edges[i].second;
  return assignment;
}

}  // namespace rankrange
