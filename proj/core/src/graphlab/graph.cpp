#include "ramcut/graphlab/graph.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace ramcut::graphlab {

NotRegularError::NotRegularError(Vertex vertex, std::size_t degree, std::size_t expected, const std::string& kind)
    : std::runtime_error("vertex " + std::to_string(vertex) + " has " + kind + " " + std::to_string(degree) +
                         ", expected " + std::to_string(expected)),
      vertex_(vertex),
      degree_(degree) {}

namespace {

void check_vertex(Vertex v, std::size_t n) {
  if (v >= n) throw std::out_of_range("vertex " + std::to_string(v) + " out of range for n = " + std::to_string(n));
}

}  // namespace

RegularGraph::RegularGraph(std::size_t n, std::size_t k, std::span<const std::pair<Vertex, Vertex>> edges)
    : n_(n), k_(k) {
  std::vector<std::vector<Vertex>> lists(n);
  for (const auto& [u, v] : edges) {
    check_vertex(u, n);
    check_vertex(v, n);
    lists[u].push_back(v);
    if (u != v) lists[v].push_back(u);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].size() != k) throw NotRegularError(v, lists[v].size(), k, "degree");
  }
  slots_.reserve(n * k);
  for (const auto& list : lists) slots_.insert(slots_.end(), list.begin(), list.end());
}

RegularGraph RegularGraph::from_neighbor_slots(std::size_t n, std::size_t k, std::vector<Vertex> slots) {
  if (slots.size() != n * k) throw std::invalid_argument("neighbor slot count must equal n*k");
  std::map<std::pair<Vertex, Vertex>, std::size_t> arcs;
  for (Vertex u = 0; u < n; ++u) {
    for (std::size_t i = 0; i < k; ++i) {
      const Vertex v = slots[u * k + i];
      check_vertex(v, n);
      ++arcs[{u, v}];
    }
  }
  for (const auto& [arc, count] : arcs) {
    const auto reverse = arcs.find({arc.second, arc.first});
    if (reverse == arcs.end() || reverse->second != count) {
      throw std::invalid_argument("neighbor slots are not symmetric at (" + std::to_string(arc.first) + ", " +
                                  std::to_string(arc.second) + ")");
    }
  }
  RegularGraph g;
  g.n_ = n;
  g.k_ = k;
  g.slots_ = std::move(slots);
  return g;
}

std::vector<std::pair<Vertex, Vertex>> RegularGraph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(n_ * k_ / 2 + 1);
  for (Vertex u = 0; u < n_; ++u) {
    std::vector<Vertex> sorted(neighbors(u).begin(), neighbors(u).end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex v : sorted) {
      if (u <= v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

bool RegularGraph::is_connected() const {
  if (n_ == 0) return true;
  std::vector<bool> seen(n_, false);
  std::queue<Vertex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : neighbors(u)) {
      if (!seen[v]) {
        seen[v] = true;
        ++reached;
        frontier.push(v);
      }
    }
  }
  return reached == n_;
}

bool RegularGraph::is_bipartite() const {
  std::vector<int> side(n_, -1);
  for (Vertex s = 0; s < n_; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const Vertex u = frontier.front();
      frontier.pop();
      for (Vertex v : neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          frontier.push(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

void RegularGraph::set_coloring(std::vector<std::uint32_t> colors) {
  if (colors.size() != n_) throw std::invalid_argument("coloring must assign a color to every vertex");
  const std::uint32_t m = colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<bool> used(m, false);
  for (auto c : colors) used[c] = true;
  const auto missing = std::find(used.begin(), used.end(), false);
  if (missing != used.end()) {
    throw std::invalid_argument("coloring is not surjective onto {0.." + std::to_string(m - 1) + "}: color " +
                                std::to_string(missing - used.begin()) + " unused");
  }
  coloring_ = std::move(colors);
  color_count_ = m;
}

RegularDigraph::RegularDigraph(std::size_t n, std::size_t k, std::span<const std::pair<Vertex, Vertex>> arcs)
    : n_(n), k_(k) {
  std::vector<std::vector<Vertex>> lists(n);
  std::vector<std::size_t> in_degree(n, 0);
  for (const auto& [u, v] : arcs) {
    check_vertex(u, n);
    check_vertex(v, n);
    lists[u].push_back(v);
    ++in_degree[v];
  }
  for (Vertex v = 0; v < n; ++v) {
    if (lists[v].size() != k) throw NotRegularError(v, lists[v].size(), k, "out-degree");
    if (in_degree[v] != k) throw NotRegularError(v, in_degree[v], k, "in-degree");
  }
  slots_.reserve(n * k);
  for (const auto& list : lists) slots_.insert(slots_.end(), list.begin(), list.end());
}

std::vector<std::pair<Vertex, Vertex>> RegularDigraph::arc_list() const {
  std::vector<std::pair<Vertex, Vertex>> arcs;
  arcs.reserve(n_ * k_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out_neighbors(u)) arcs.emplace_back(u, v);
  }
  return arcs;
}

}  // namespace ramcut::graphlab
