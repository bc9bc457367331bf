#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace ramcut::oracle {

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::vector<unsigned> digits(std::uint64_t code, unsigned p, unsigned n) {
  std::vector<unsigned> v(n);
  for (unsigned i = 0; i < n; ++i) {
    v[i] = static_cast<unsigned>(code % p);
    code /= p;
  }
  return v;
}

std::uint64_t encode(const std::vector<unsigned>& v, unsigned p) {
  std::uint64_t code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

}  // namespace

std::uint64_t count_subspaces(unsigned p, unsigned n, unsigned j) {
  const std::uint64_t total = ipow(p, n);
  std::set<std::set<std::uint64_t>> spans;
  const std::uint64_t tuples = ipow(total, j);
  for (std::uint64_t idx = 0; idx < tuples; ++idx) {
    std::vector<std::vector<unsigned>> basis;
    std::uint64_t rest = idx;
    for (unsigned i = 0; i < j; ++i) {
      basis.push_back(digits(rest % total, p, n));
      rest /= total;
    }
    std::set<std::uint64_t> span;
    const std::uint64_t combos = ipow(p, j);
    for (std::uint64_t c = 0; c < combos; ++c) {
      const auto coeff = digits(c, p, j);
      std::vector<unsigned> v(n, 0);
      for (unsigned i = 0; i < j; ++i) {
        for (unsigned l = 0; l < n; ++l) v[l] = (v[l] + coeff[i] * basis[i][l]) % p;
      }
      span.insert(encode(v, p));
    }
    if (span.size() == combos) spans.insert(span);
  }
  return spans.size();
}

std::vector<Rational> enumerate_walks(const Neighbors& adj, std::uint32_t start, unsigned t, bool lazy) {
  const std::size_t k = adj[0].size();
  const std::size_t choices = lazy ? 2 * k : k;
  std::uint64_t sequences = 1;
  for (unsigned i = 0; i < t; ++i) sequences *= choices;
  std::vector<std::uint64_t> hits(adj.size(), 0);
  for (std::uint64_t seq = 0; seq < sequences; ++seq) {
    std::uint64_t rest = seq;
    std::uint32_t v = start;
    for (unsigned i = 0; i < t; ++i) {
      const std::size_t c = rest % choices;
      rest /= choices;
      if (c < k) v = adj[v][c];
    }
    ++hits[v];
  }
  std::vector<Rational> mu;
  for (const auto h : hits) mu.emplace_back(BigInt(h), BigInt(sequences));
  return mu;
}

unsigned leibniz_det(const std::vector<unsigned>& m, unsigned d, unsigned p) {
  std::vector<unsigned> perm(d);
  std::iota(perm.begin(), perm.end(), 0u);
  long long total = 0;
  do {
    unsigned inversions = 0;
    for (unsigned i = 0; i < d; ++i) {
      for (unsigned j = i + 1; j < d; ++j) inversions += perm[i] > perm[j];
    }
    long long term = 1;
    for (unsigned i = 0; i < d; ++i) term = term * m[i * d + perm[i]] % p;
    total += (inversions % 2 == 0) ? term : p - term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<unsigned>(total % p);
}

std::vector<unsigned> min_scalar_representative(const std::vector<unsigned>& m, unsigned p) {
  std::vector<unsigned> best = m;
  for (unsigned c = 2; c < p; ++c) {
    std::vector<unsigned> scaled(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) scaled[i] = m[i] * c % p;
    best = std::min(best, scaled);
  }
  return best;
}

std::set<std::vector<unsigned>> projective_group(unsigned d, unsigned p) {
  const std::uint64_t total = ipow(p, d * d);
  std::set<std::vector<unsigned>> classes;
  for (std::uint64_t code = 0; code < total; ++code) {
    const auto m = digits(code, p, d * d);
    if (leibniz_det(m, d, p) == 0) continue;
    classes.insert(min_scalar_representative(m, p));
  }
  return classes;
}

std::pair<unsigned, unsigned> hypercube_lazy_mixing(unsigned m, const Rational& eps) {
  std::vector<Rational> mass(m + 1, Rational(0));
  mass[0] = 1;
  std::vector<Rational> uniform(m + 1);
  BigInt binom = 1;
  const BigInt size = BigInt(1) << m;
  for (unsigned w = 0; w <= m; ++w) {
    uniform[w] = Rational(binom, size);
    binom = binom * (m - w) / (w + 1);
  }
  std::optional<unsigned> low;
  std::optional<unsigned> high;
  for (unsigned t = 0; t < 100000; ++t) {
    Rational tv = 0;
    for (unsigned w = 0; w <= m; ++w) tv += abs(mass[w] - uniform[w]);
    tv /= 2;
    if (!high && tv < 1 - eps) high = t;
    if (tv < eps) {
      low = t;
      break;
    }
    std::vector<Rational> next(m + 1, Rational(0));
    for (unsigned w = 0; w <= m; ++w) {
      next[w] += mass[w] / 2;
      if (w > 0) next[w - 1] += mass[w] * Rational(w, 2 * m);
      if (w < m) next[w + 1] += mass[w] * Rational(m - w, 2 * m);
    }
    mass.swap(next);
  }
  if (!low || !high) throw std::runtime_error("hypercube oracle did not mix");
  return {*low, *high};
}

double cycle_lazy_tv(unsigned n, unsigned t) {
  double tv = 0.0;
  for (unsigned j = 0; j < n; ++j) {
    double mu = 0.0;
    for (unsigned m = 0; m < n; ++m) {
      const double angle = 2.0 * std::numbers::pi * m / n;
      mu += std::pow((1.0 + std::cos(angle)) / 2.0, t) * std::cos(angle * j);
    }
    tv += std::abs(mu / n - 1.0 / n);
  }
  return tv / 2.0;
}

Neighbors complete_bipartite(unsigned a) {
  Neighbors adj(2 * a);
  for (unsigned u = 0; u < a; ++u) {
    for (unsigned v = a; v < 2 * a; ++v) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  return adj;
}

Neighbors cube3() {
  Neighbors adj(8);
  for (unsigned v = 0; v < 8; ++v) {
    for (unsigned i = 0; i < 3; ++i) adj[v].push_back(v ^ (1u << i));
  }
  return adj;
}

}  // namespace ramcut::oracle
