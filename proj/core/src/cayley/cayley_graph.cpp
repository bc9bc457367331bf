#include "ramcut/cayley/cayley_graph.hpp"

#include "ramcut/error.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace ramcut::cayley {

CayleyGraph cayley_graph(const GeneratorSet& input, std::size_t cap, const CayleyOptions& options) {
  if (input.elements.empty()) throw DomainError("generator set is empty");
  GeneratorSet gens = input;
  if (!is_symmetric(gens.field, gens.elements)) {
    if (!options.auto_symmetrize) {
      throw DomainError("generator set is not closed under inverses; enable auto-symmetrization to add them");
    }
    gens = symmetrize(std::move(gens));
  }
  const auto& field = gens.field;
  const std::size_t k = gens.elements.size();

  std::vector<ProjectiveMatrix> elements{ProjectiveMatrix::normalize_invertible(field, identity(gens.d))};
  std::unordered_map<ProjectiveMatrix, graphlab::Vertex, MatrixHash> ids{{elements.front(), 0}};
  std::vector<graphlab::Vertex> slots;
  slots.reserve(k);

  std::size_t layer_begin = 0;
  while (layer_begin < elements.size()) {
    const std::size_t layer_end = elements.size();
    std::vector<ProjectiveMatrix> fresh;
    for (std::size_t v = layer_begin; v < layer_end; ++v) {
      for (const auto& s : gens.elements) {
        auto product = multiply(field, elements[v], s);
        if (!ids.contains(product)) fresh.push_back(std::move(product));
      }
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    if (elements.size() + fresh.size() > cap) {
      throw CapExceeded("Cayley closure exceeded cap " + std::to_string(cap) + " with " +
                            std::to_string(elements.size()) + " elements numbered and a frontier of " +
                            std::to_string(fresh.size()),
                        cap, fresh.size());
    }
    for (auto& g : fresh) {
      ids.emplace(g, static_cast<graphlab::Vertex>(elements.size()));
      elements.push_back(std::move(g));
    }
    layer_begin = layer_end;
  }

  std::vector<graphlab::Vertex> neighbor_slots;
  neighbor_slots.reserve(elements.size() * k);
  for (const auto& g : elements) {
    for (const auto& s : gens.elements) neighbor_slots.push_back(ids.at(multiply(field, g, s)));
  }

  bool in_psl = true;
  for (const auto& s : gens.elements) {
    if (!field.is_power(determinant(field, s.matrix()), gens.d)) in_psl = false;
  }

  return CayleyGraph{graphlab::RegularGraph::from_neighbor_slots(elements.size(), k, std::move(neighbor_slots)),
                     std::move(elements), gens.elements, in_psl};
}

BigInt pgl_order(unsigned d, std::uint64_t q) {
  if (d == 0 || q < 2) throw DomainError("pgl_order needs d >= 1 and q >= 2");
  const BigInt qq = q;
  const BigInt qd = pow(qq, d);
  BigInt order = 1;
  for (unsigned i = 0; i < d; ++i) order *= qd - pow(qq, i);
  return order / (qq - 1);
}

BigInt psl_order(unsigned d, std::uint64_t q) {
  return pgl_order(d, q) / std::gcd<std::uint64_t>(d, q - 1);
}

}  // namespace ramcut::cayley
