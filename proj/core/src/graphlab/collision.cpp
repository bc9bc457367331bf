#include "ramcut/graphlab/collision.hpp"

#include "ramcut/error.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace ramcut::graphlab {

namespace {

/// Out-neighbors in compressed rows: targets[offsets[v] .. offsets[v+1]).
struct Adjacency {
  std::vector<std::size_t> offsets;
  std::vector<Vertex> targets;
};

CollisionReport check(std::size_t n, const Adjacency& adj, unsigned L) {
  if (L == 0) throw DomainError("collision horizon L must be >= 1");
  CollisionReport report;
  report.horizon = L;

  std::vector<std::uint8_t> current(n);
  std::vector<std::uint8_t> next(n);
  std::vector<std::uint8_t> total(n);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(current.begin(), current.end(), 0);
    std::fill(total.begin(), total.end(), 0);
    current[u] = 1;
    for (unsigned length = 1; length <= L; ++length) {
      std::fill(next.begin(), next.end(), 0);
      bool any = false;
      for (Vertex v = 0; v < n; ++v) {
        if (current[v] == 0) continue;
        for (std::size_t i = adj.offsets[v]; i < adj.offsets[v + 1]; ++i) {
          const Vertex w = adj.targets[i];
          next[w] = static_cast<std::uint8_t>(std::min(2, next[w] + current[v]));
          any = true;
        }
      }
      for (std::size_t w = 0; w < n; ++w) total[w] = static_cast<std::uint8_t>(std::min(2, total[w] + next[w]));
      current.swap(next);
      if (!any) break;
    }
    const auto hit = std::find_if(total.begin(), total.end(), [](std::uint8_t c) { return c >= 2; });
    if (hit != total.end()) {
      report.collision_free = false;
      report.first_violation = std::make_pair(u, static_cast<Vertex>(hit - total.begin()));
      return report;
    }
  }
  return report;
}

}  // namespace

CollisionReport collision_free_check(const RegularDigraph& graph, unsigned L) {
  const std::size_t n = graph.vertex_count();
  Adjacency adj;
  adj.offsets.reserve(n + 1);
  for (Vertex v = 0; v < n; ++v) {
    adj.offsets.push_back(adj.targets.size());
    const auto out = graph.out_neighbors(v);
    adj.targets.insert(adj.targets.end(), out.begin(), out.end());
  }
  adj.offsets.push_back(adj.targets.size());
  return check(n, adj, L);
}

CollisionReport collision_free_check(std::size_t n, std::span<const std::pair<Vertex, Vertex>> arcs, unsigned L) {
  Adjacency adj;
  adj.offsets.assign(n + 1, 0);
  for (const auto& [u, v] : arcs) {
    if (u >= n || v >= n) throw DomainError("arc endpoint out of range");
    ++adj.offsets[u + 1];
  }
  for (std::size_t v = 0; v < n; ++v) adj.offsets[v + 1] += adj.offsets[v];
  adj.targets.resize(arcs.size());
  std::vector<std::size_t> fill(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [u, v] : arcs) adj.targets[fill[u]++] = v;
  return check(n, adj, L);
}

}  // namespace ramcut::graphlab
