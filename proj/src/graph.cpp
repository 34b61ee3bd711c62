#include "rankrange/graph.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <set>
#include <sstream>

#include "rankrange/errors.hpp"

namespace rankrange {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw InvalidInstanceError("negative vertex count");
  for (auto [u, w] : edges) {
    if (u < 0 || w < 0 || u >= n || w >= n) throw InvalidInstanceError("edge endpoint out of range");
    if (u == w) throw InvalidInstanceError("graphs must not contain loops");
    edges_.emplace_back(std::min(u, w), std::max(u, w));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw InvalidInstanceError("graphs must not contain parallel edges");
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) e.emplace_back(u, w);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw InvalidInstanceError("cycles need at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph Graph::parse(const std::string& spec) {
  if (spec == "prism") return prism();
  try {
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'C' || spec[0] == 'P') &&
        std::all_of(spec.begin() + 1, spec.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      const int n = std::stoi(spec.substr(1));
      if (spec[0] == 'K') return complete(n);
      if (spec[0] == 'C') return cycle(n);
      return path(n);
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidInstanceError("unrecognised graph '" + spec + "'");
    const int n = std::stoi(spec.substr(0, colon));
    std::vector<std::pair<int, int>> e;
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      const auto dash = item.find('-');
      if (dash == std::string::npos) throw InvalidInstanceError("bad edge '" + item + "'");
      e.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
    }
    return Graph(n, std::move(e));
  } catch (const std::logic_error&) {
    throw InvalidInstanceError("unrecognised graph '" + spec + "'");
  }
}

std::string Graph::to_string() const {
  std::string out = std::to_string(n_) + ":";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(edges_[i].first) + "-" + std::to_string(edges_[i].second);
  }
  return out;
}

bool Graph::adjacent(int u, int w) const {
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(std::min(u, w), std::max(u, w)));
}

int Graph::degree(int u) const {
  int d = 0;
  for (auto [a, b] : edges_) d += (a == u) + (b == u);
  return d;
}

std::optional<int> Graph::regular_degree() const {
  if (n_ == 0) return 0;
  const int d = degree(0);
  for (int u = 1; u < n_; ++u)
    if (degree(u) != d) return std::nullopt;
  return d;
}

bool Graph::connected() const {
  if (n_ == 0) return true;
  std::vector<int> parent(static_cast<std::size_t>(n_));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  int parts = n_;
  for (auto [u, w] : edges_) {
    const int a = find(u), b = find(w);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --parts;
    }
  }
  return parts == 1;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n_; ++u)
    for (int w = u + 1; w < n_; ++w)
      if (!adjacent(u, w)) e.emplace_back(u, w);
  return Graph(n_, std::move(e));
}

std::vector<Graph> all_graphs(int n) {
  if (n > 6) throw LimitError("graph enumeration is limited to 6 vertices");
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) slots.emplace_back(u, w);
  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<Graph> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask & (1u << i)) e.push_back(slots[i]);
    std::vector<std::pair<int, int>> canonical;
    bool first = true;
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::pair<int, int>> image;
      for (auto [u, w] : e) {
        const int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(w)];
        image.emplace_back(std::min(a, b), std::max(a, b));
      }
      std::sort(image.begin(), image.end());
      if (first || image < canonical) canonical = std::move(image);
      first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (seen.insert(canonical).second) out.emplace_back(n, canonical);
  }
  return out;
}

namespace {

void check_size(const Graph& g) {
  if (g.vertices() > 24) throw LimitError("brute-force graph oracles are limited to 24 vertices");
}

std::vector<std::uint32_t> closed_neighbourhoods(const Graph& g) {
  std::vector<std::uint32_t> nb(static_cast<std::size_t>(g.vertices()));
  for (int u = 0; u < g.vertices(); ++u) nb[static_cast<std::size_t>(u)] = 1u << u;
  for (auto [u, w] : g.edges()) {
    nb[static_cast<std::size_t>(u)] |= 1u << w;
    nb[static_cast<std::size_t>(w)] |= 1u << u;
  }
  return nb;
}

}  // namespace

int min_vertex_cover(const Graph& g) {
  check_size(g);
  int best = g.vertices();
  for (std::uint32_t set = 0; set < (1u << g.vertices()); ++set) {
    const int size = __builtin_popcount(set);
    if (size >= best) continue;
    bool covers = true;
    for (auto [u, w] : g.edges())
      if (!(set & (1u << u)) && !(set & (1u << w))) {
        covers = false;
        break;
      }
    if (covers) best = size;
  }
  return best;
}

int max_independent_set(const Graph& g) {
  check_size(g);
  int best = 0;
  for (std::uint32_t set = 0; set < (1u << g.vertices()); ++set) {
    const int size = __builtin_popcount(set);
    if (size <= best) continue;
    bool independent = true;
    for (auto [u, w] : g.edges())
      if ((set & (1u << u)) && (set & (1u << w))) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

int min_dominating_set(const Graph& g) {
  check_size(g);
  const auto nb = closed_neighbourhoods(g);
  const std::uint32_t all = (1u << g.vertices()) - 1;
  int best = g.vertices();
  for (std::uint32_t set = 0; set < (1u << g.vertices()); ++set) {
    const int size = __builtin_popcount(set);
    if (size >= best) continue;
    std::uint32_t covered = 0;
    for (int u = 0; u < g.vertices(); ++u)
      if (set & (1u << u)) covered |= nb[static_cast<std::size_t>(u)];
    if (covered == all) best = size;
  }
  return best;
}

std::string X3CInstance::to_string() const {
  std::string out = std::to_string(q) + ":";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(sets[i][0]) + "-" + std::to_string(sets[i][1]) + "-" + std::to_string(sets[i][2]);
  }
  return out;
}

X3CInstance X3CInstance::parse(const std::string& spec) {
  try {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw InvalidInstanceError("X3C instances are written q:a-b-c,...");
    X3CInstance out;
    out.q = std::stoi(spec.substr(0, colon));
    std::stringstream rest(spec.substr(colon + 1));
    std::string item;
    while (std::getline(rest, item, ',')) {
      if (item.empty()) continue;
      Triple t{};
      std::stringstream parts(item);
      std::string part;
      int i = 0;
      while (std::getline(parts, part, '-')) {
        if (i >= 3) throw InvalidInstanceError("bad triple '" + item + "'");
        t[static_cast<std::size_t>(i++)] = std::stoi(part);
      }
      if (i != 3) throw InvalidInstanceError("bad triple '" + item + "'");
      out.sets.push_back(t);
    }
    return out;
  } catch (const std::logic_error&) {
    throw InvalidInstanceError("unrecognised X3C instance '" + spec + "'");
  }
}

bool exact_cover(const X3CInstance& instance) {
  const std::size_t count = instance.sets.size();
  if (count > 24) throw LimitError("brute-force exact cover is limited to 24 sets");
  const std::uint64_t universe = (std::uint64_t{1} << (3 * instance.q)) - 1;
  for (std::uint32_t pick = 0; pick < (1u << count); ++pick) {
    if (__builtin_popcount(pick) != instance.q) continue;
    std::uint64_t covered = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < count && disjoint; ++i) {
      if (!(pick & (1u << i))) continue;
      for (int u : instance.sets[i]) {
        if (covered & (std::uint64_t{1} << u)) disjoint = false;
        covered |= std::uint64_t{1} << u;
      }
    }
    if (disjoint && covered == universe) return true;
  }
  return false;
}

}  // namespace rankrange
