#include "ramcut/graphlab/families.hpp"

#include "ramcut/error.hpp"

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace ramcut::graphlab {

using Edges = std::vector<std::pair<Vertex, Vertex>>;

RegularGraph cycle_graph(std::size_t n) {
  if (n < 3) throw DomainError("cycle needs n >= 3");
  Edges edges;
  for (std::size_t v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return RegularGraph(n, 2, edges);
}

RegularGraph complete_graph(std::size_t n) {
  if (n < 2) throw DomainError("complete graph needs n >= 2");
  Edges edges;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return RegularGraph(n, n - 1, edges);
}

RegularGraph hypercube(unsigned m) {
  if (m < 1 || m > 24) throw DomainError("hypercube dimension must lie in 1..24");
  const std::size_t n = std::size_t{1} << m;
  Edges edges;
  for (std::size_t v = 0; v < n; ++v) {
    for (unsigned i = 0; i < m; ++i) {
      const std::size_t u = v ^ (std::size_t{1} << i);
      if (v < u) edges.emplace_back(v, u);
    }
  }
  return RegularGraph(n, m, edges);
}

RegularGraph petersen_graph() {
  Edges edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return RegularGraph(10, 3, edges);
}

RegularGraph ladder_spliced_cubic(std::size_t expander_vertices, std::size_t ladder_vertices, std::uint64_t seed) {
  if (expander_vertices < 4 || expander_vertices % 2 != 0) {
    throw DomainError("expander part needs an even vertex count >= 4");
  }
  if (ladder_vertices < 4 || ladder_vertices % 2 != 0) throw DomainError("ladder needs an even vertex count >= 4");
  std::mt19937_64 gen(seed);

  // Configuration model: pair up 3 stubs per vertex uniformly at random.
  // A loop would occupy only one neighbor slot here, so loopy pairings are
  // redrawn; repeated edges are kept.
  std::vector<Vertex> stubs;
  for (std::size_t v = 0; v < expander_vertices; ++v) stubs.insert(stubs.end(), 3, static_cast<Vertex>(v));
  auto has_loop = [&stubs] {
    for (std::size_t i = 0; i < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1]) return true;
    }
    return false;
  };
  do {
    std::shuffle(stubs.begin(), stubs.end(), gen);
  } while (has_loop());
  Edges edges;
  for (std::size_t i = 0; i < stubs.size(); i += 2) edges.emplace_back(stubs[i], stubs[i + 1]);

  // Ladder: rails a_i = base + 2i, b_i = base + 2i + 1, rungs a_i - b_i.
  const auto base = static_cast<Vertex>(expander_vertices);
  const std::size_t rungs = ladder_vertices / 2;
  for (std::size_t i = 0; i < rungs; ++i) {
    const Vertex a = base + static_cast<Vertex>(2 * i);
    edges.emplace_back(a, a + 1);
    if (i + 1 < rungs) {
      edges.emplace_back(a, a + 2);
      edges.emplace_back(a + 1, a + 3);
    }
  }

  // Cut two expander edges {x1,y1}, {x2,y2} and reconnect their endpoints to
  // the four ladder ends, which each miss one edge.
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1 - (3 * rungs - 2));
  const std::size_t first = pick(gen);
  std::size_t second = pick(gen);
  while (second == first) second = pick(gen);
  const auto e1 = edges[first];
  const auto e2 = edges[second];
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::max(first, second)));
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(std::min(first, second)));
  const Vertex a0 = base;
  const Vertex b0 = base + 1;
  const Vertex a_last = base + static_cast<Vertex>(2 * (rungs - 1));
  const Vertex b_last = a_last + 1;
  edges.emplace_back(e1.first, a0);
  edges.emplace_back(e1.second, b0);
  edges.emplace_back(e2.first, a_last);
  edges.emplace_back(e2.second, b_last);
  return RegularGraph(expander_vertices + ladder_vertices, 3, edges);
}

}  // namespace ramcut::graphlab
