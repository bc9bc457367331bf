#include "ramcut/cayley/generators.hpp"

#include "ramcut/error.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

namespace ramcut::cayley {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream stream(line.substr(0, line.find('#')));
  std::string token;
  while (stream >> token) out.push_back(token);
  return out;
}

std::uint64_t parse_number(const std::string& token, std::size_t line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || end != token.data() + token.size()) {
    throw ParseError("expected non-negative integer, got '" + token + "'", line);
  }
  return value;
}

std::map<ProjectiveMatrix, long> counts_of(const std::vector<ProjectiveMatrix>& elements) {
  std::map<ProjectiveMatrix, long> counts;
  for (const auto& g : elements) ++counts[g];
  return counts;
}

}  // namespace

bool is_symmetric(const FiniteField& field, const std::vector<ProjectiveMatrix>& elements) {
  const auto counts = counts_of(elements);
  for (const auto& [g, count] : counts) {
    const auto it = counts.find(inverse(field, g));
    if (it == counts.end() || it->second != count) return false;
  }
  return true;
}

GeneratorSet symmetrize(GeneratorSet gens) {
  const auto counts = counts_of(gens.elements);
  std::vector<ProjectiveMatrix> extra;
  for (const auto& [g, count] : counts) {
    const auto g_inv = inverse(gens.field, g);
    const auto it = counts.find(g_inv);
    const long have = it == counts.end() ? 0 : it->second;
    for (long i = have; i < count; ++i) extra.push_back(g_inv);
  }
  gens.elements.insert(gens.elements.end(), extra.begin(), extra.end());
  gens.symmetric = true;
  return gens;
}

GeneratorSet load_generators(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_tokens = [&]() -> std::vector<std::string> {
    while (std::getline(in, line)) {
      ++line_no;
      auto tokens = tokens_of(line);
      if (!tokens.empty()) return tokens;
    }
    return {};
  };

  const auto header = next_tokens();
  if (header.size() != 4 || header[0] != "gens") throw ParseError("header must read 'gens <d> <p> <e>'", line_no);
  const auto d = parse_number(header[1], line_no);
  const auto p = parse_number(header[2], line_no);
  const auto e = parse_number(header[3], line_no);
  if (d < 1 || d > 16) throw ParseError("matrix size d must lie in 1..16", line_no);
  if (p > 0xFFFFFFFFull || e < 1 || e > 31) throw ParseError("field parameters out of range", line_no);

  std::vector<unsigned> modulus;
  if (e > 1) {
    const auto tokens = next_tokens();
    if (tokens.empty() || tokens[0] != "modulus") throw ParseError("expected 'modulus c_0 ... c_e'", line_no);
    if (tokens.size() != e + 2) {
      throw ParseError("modulus needs e+1 = " + std::to_string(e + 1) + " coefficients", line_no);
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      modulus.push_back(static_cast<unsigned>(parse_number(tokens[i], line_no)));
    }
  }

  GeneratorSet gens;
  try {
    gens.field = FiniteField(static_cast<unsigned>(p), static_cast<unsigned>(e), modulus);
  } catch (const DomainError& err) {
    throw ParseError(err.what(), e > 1 ? line_no : 1);
  }
  gens.d = static_cast<unsigned>(d);

  for (auto tokens = next_tokens(); !tokens.empty(); tokens = next_tokens()) {
    if (tokens.size() != d * d) {
      throw ParseError("matrix line needs d*d = " + std::to_string(d * d) + " entries", line_no);
    }
    Matrix m{gens.d, {}};
    for (const auto& token : tokens) {
      const auto value = parse_number(token, line_no);
      if (value >= gens.field.q()) throw ParseError("entry " + token + " is not below q", line_no);
      m.entries.push_back(static_cast<Element>(value));
    }
    if (determinant(gens.field, m) == 0) throw ParseError("generator " + to_string(m) + " is singular", line_no);
    gens.elements.push_back(ProjectiveMatrix::canonicalize(gens.field, m));
  }
  if (gens.elements.empty()) throw ParseError("no generator matrices", line_no);
  gens.symmetric = is_symmetric(gens.field, gens.elements);
  return gens;
}

GeneratorSet load_generators_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'", 0);
  return load_generators(in);
}

}  // namespace ramcut::cayley
