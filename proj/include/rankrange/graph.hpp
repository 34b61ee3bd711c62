#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rankrange {

/// Simple undirected graph on vertices 0..n-1; edges are stored as sorted
/// (u, w) pairs with u < w, in lexicographic order.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidInstanceError on loops, repeated edges or bad endpoints.
  Graph(int n, std::vector<std::pair<int, int>> edges);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  /// The triangular prism: two triangles joined by a perfect matching.
  static Graph prism();

  /// "K4", "C5", "P3", "prism", or an explicit "n:u-w,u-w,...".
  static Graph parse(const std::string& spec);
  std::string to_string() const;

  int vertices() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool adjacent(int u, int w) const;
  int degree(int u) const;
  /// The common degree, or nullopt when the graph is not regular.
  std::optional<int> regular_degree() const;
  bool connected() const;
  Graph complement() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

/// Every graph on n vertices up to isomorphism (n <= 6).
std::vector<Graph> all_graphs(int n);

/// Exact brute force; LimitError for more than 24 vertices.
int min_vertex_cover(const Graph& g);
int max_independent_set(const Graph& g);
int min_dominating_set(const Graph& g);

using Triple = std::array<int, 3>;

/// Exact cover by 3-sets over {0, ..., 3q-1}.
struct X3CInstance {
  int q = 0;
  std::vector<Triple> sets;
  std::string to_string() const;
  static X3CInstance parse(const std::string& spec);
};

/// Whether q pairwise-disjoint sets cover the universe; LimitError for more
/// than 24 sets.
bool exact_cover(const X3CInstance& instance);

}  // namespace rankrange
