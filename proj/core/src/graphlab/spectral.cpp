#include "ramcut/graphlab/spectral.hpp"

#include "ramcut/error.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>

namespace ramcut::graphlab {

namespace {

/// Spectrum of the color-quotient matrix B[a][b] = #neighbors of color b at
/// a vertex of color a, or nullopt when some class disagrees (not equitable).
std::optional<std::vector<double>> quotient_spectrum(const RegularGraph& graph) {
  const auto& colors = *graph.coloring();
  const std::size_t m = graph.color_count();
  Eigen::MatrixXd quotient = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m), -1);
  std::vector<double> row(m);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    std::fill(row.begin(), row.end(), 0.0);
    for (const Vertex u : graph.neighbors(v)) row[colors[u]] += 1.0;
    const auto a = static_cast<Eigen::Index>(colors[v]);
    for (std::size_t b = 0; b < m; ++b) {
      double& cell = quotient(a, static_cast<Eigen::Index>(b));
      if (cell < 0) cell = row[b];
      else if (cell != row[b]) return std::nullopt;
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(quotient, false);
  std::vector<double> out;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) out.push_back(solver.eigenvalues()[i].real());
  std::sort(out.begin(), out.end());
  return out;
}

/// Orthonormal basis of the trivial eigenspace used to deflate Lanczos.
std::vector<Eigen::VectorXd> trivial_basis(const RegularGraph& graph, bool use_coloring, bool bipartite) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  std::vector<Eigen::VectorXd> basis;
  if (use_coloring) {
    const auto& colors = *graph.coloring();
    for (std::size_t c = 0; c < graph.color_count(); ++c) {
      Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
      for (Eigen::Index i = 0; i < n; ++i) {
        if (colors[static_cast<std::size_t>(i)] == c) v[i] = 1.0;
      }
      basis.push_back(v.normalized());
    }
    return basis;
  }
  basis.push_back(Eigen::VectorXd::Constant(n, 1.0).normalized());
  if (bipartite) {
    // Recover the 2-coloring by BFS; the sign vector is the -k eigenvector.
    std::vector<int> side(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < graph.vertex_count(); ++s) {
      if (side[s] >= 0) continue;
      side[s] = 0;
      queue.assign(1, s);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const Vertex v = queue[head];
        for (const Vertex u : graph.neighbors(v)) {
          if (side[u] < 0) {
            side[u] = 1 - side[v];
            queue.push_back(u);
          }
        }
      }
    }
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = side[static_cast<std::size_t>(i)] == 0 ? 1.0 : -1.0;
    basis.push_back(v.normalized());
  }
  return basis;
}

void apply_adjacency(const RegularGraph& graph, const Eigen::VectorXd& x, Eigen::VectorXd& y) {
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    double sum = 0.0;
    for (const Vertex u : graph.neighbors(v)) sum += x[u];
    y[v] = sum;
  }
}

void project_out(Eigen::VectorXd& w, const std::vector<Eigen::VectorXd>& basis) {
  for (const auto& b : basis) w -= b.dot(w) * b;
}

struct LanczosResult {
  double lowest = 0.0;
  double highest = 0.0;
  double residual = 0.0;
};

/// Extremal eigenvalues of the adjacency operator on the orthogonal
/// complement of `deflate`, with full reorthogonalization.
LanczosResult lanczos_extremes(const RegularGraph& graph, const std::vector<Eigen::VectorXd>& deflate,
                               const SpectralOptions& options) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  const double k = static_cast<double>(graph.degree());
  const double target = options.lanczos_residual * k;
  const std::size_t max_iter =
      std::min<std::size_t>(options.lanczos_max_iterations, graph.vertex_count() - deflate.size());
  if (max_iter == 0) return {};

  std::mt19937_64 gen(0x5eed);
  std::normal_distribution<double> normal;
  Eigen::VectorXd q(n);
  for (Eigen::Index i = 0; i < n; ++i) q[i] = normal(gen);
  project_out(q, deflate);
  q.normalize();

  std::vector<Eigen::VectorXd> basis{q};
  std::vector<double> alpha;
  std::vector<double> beta;
  Eigen::VectorXd w(n);
  LanczosResult result;
  double worst = std::numeric_limits<double>::infinity();

  for (std::size_t j = 0; j < max_iter; ++j) {
    apply_adjacency(graph, basis[j], w);
    alpha.push_back(basis[j].dot(w));
    for (int pass = 0; pass < 2; ++pass) {
      project_out(w, deflate);
      for (const auto& b : basis) w -= b.dot(w) * b;
    }
    const double b_next = w.norm();

    const auto m = static_cast<Eigen::Index>(alpha.size());
    const bool last = j + 1 == max_iter || b_next <= 1e-12 * k;
    if (last || j % 10 == 9) {
      Eigen::VectorXd diag = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
      Eigen::VectorXd sub = m > 1 ? Eigen::VectorXd(Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1))
                                  : Eigen::VectorXd();
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
      tri.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
      const auto& vecs = tri.eigenvectors();
      const double res_low = b_next * std::abs(vecs(m - 1, 0));
      const double res_high = b_next * std::abs(vecs(m - 1, m - 1));
      result.lowest = tri.eigenvalues()[0];
      result.highest = tri.eigenvalues()[m - 1];
      result.residual = std::max(res_low, res_high);
      worst = result.residual;
      if (result.residual <= target || b_next <= 1e-12 * k) {
        return result;
      }
    }
    if (j + 1 == max_iter) break;
    beta.push_back(b_next);
    basis.push_back(w / b_next);
  }
  throw ConvergenceError("Lanczos did not converge within " + std::to_string(max_iter) + " iterations", worst);
}

void remove_trivial(std::vector<double>& remaining, const std::vector<double>& trivial, double tolerance) {
  for (const double t : trivial) {
    auto best = remaining.end();
    double gap = std::numeric_limits<double>::infinity();
    for (auto it = remaining.begin(); it != remaining.end(); ++it) {
      const double g = std::abs(*it - t);
      if (g < gap) {
        gap = g;
        best = it;
      }
    }
    if (best != remaining.end() && gap <= std::max(tolerance, 1e-7)) remaining.erase(best);
  }
}

}  // namespace

SpectralOptions spectral_options_from_env() {
  SpectralOptions options;
  if (const char* raw = std::getenv("RAMCUT_DENSE_CAP")) {
    char* end = nullptr;
    const unsigned long long cap = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0') throw DomainError("RAMCUT_DENSE_CAP must be a non-negative integer");
    options.dense_cap = static_cast<std::size_t>(cap);
  }
  return options;
}

SpectralReport spectral_report(const RegularGraph& graph, const SpectralOptions& options) {
  SpectralReport report;
  report.n = graph.vertex_count();
  report.k = graph.degree();
  const double k = static_cast<double>(report.k);
  report.tolerance = options.tolerance_factor * k;
  report.ramanujan_bound = 2.0 * std::sqrt(std::max(0.0, k - 1.0));

  const bool bipartite = graph.is_bipartite();
  std::optional<std::vector<double>> quotient;
  if (graph.coloring()) quotient = quotient_spectrum(graph);
  report.coloring_used = quotient.has_value();
  if (quotient) {
    report.trivial_eigenvalues = *quotient;
  } else {
    report.trivial_eigenvalues.push_back(k);
    if (bipartite) report.trivial_eigenvalues.insert(report.trivial_eigenvalues.begin(), -k);
  }

  std::vector<double> nontrivial;
  if (report.n <= options.dense_cap) {
    report.method = "dense";
    const auto n = static_cast<Eigen::Index>(report.n);
    Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      for (const Vertex u : graph.neighbors(v)) adjacency(v, u) += 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(adjacency, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("dense symmetric eigensolver failed", 0.0);
    const auto& values = solver.eigenvalues();
    report.eigenvalues.assign(values.data(), values.data() + values.size());
    report.top_eigenvalue = report.eigenvalues.back();
    nontrivial = report.eigenvalues;
    remove_trivial(nontrivial, report.trivial_eigenvalues, report.tolerance);
    report.trivial_count = report.n - nontrivial.size();
  } else {
    report.method = "lanczos";
    report.partial = true;
    const auto extremes = lanczos_extremes(graph, trivial_basis(graph, report.coloring_used, bipartite), options);
    report.residual = extremes.residual;
    nontrivial = {extremes.lowest, extremes.highest};
    report.trivial_count = report.trivial_eigenvalues.size();
    report.eigenvalues = report.trivial_eigenvalues;
    report.eigenvalues.insert(report.eigenvalues.end(), nontrivial.begin(), nontrivial.end());
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end());
    report.top_eigenvalue = report.eigenvalues.back();
  }
  report.top_matches_degree = std::abs(report.top_eigenvalue - k) <= report.tolerance;

  report.lambda_nontrivial = 0.0;
  for (const double value : nontrivial) report.lambda_nontrivial = std::max(report.lambda_nontrivial, std::abs(value));
  if (!nontrivial.empty()) report.second_eigenvalue = *std::max_element(nontrivial.begin(), nontrivial.end());
  report.is_ramanujan = report.lambda_nontrivial <= report.ramanujan_bound + report.tolerance;
  return report;
}

SpectralReport spectral_report(const RegularDigraph& graph, const SpectralOptions& options) {
  SpectralReport report;
  report.directed = true;
  report.n = graph.vertex_count();
  report.k = graph.degree();
  const double k = static_cast<double>(report.k);
  report.tolerance = options.tolerance_factor * k;
  report.ramanujan_bound = std::sqrt(k);
  if (report.n > options.dense_cap) {
    throw CapExceeded("digraph has " + std::to_string(report.n) + " vertices, above the dense solver cap " +
                          std::to_string(options.dense_cap) + "; raise RAMCUT_DENSE_CAP",
                      options.dense_cap, report.n);
  }
  report.method = "dense";
  const auto n = static_cast<Eigen::Index>(report.n);
  Eigen::MatrixXd adjacency = Eigen::MatrixXd::Zero(n, n);
  for (Vertex v = 0; v < graph.vertex_count(); ++v) {
    for (const Vertex u : graph.out_neighbors(v)) adjacency(v, u) += 1.0;
  }
  Eigen::EigenSolver<Eigen::MatrixXd> solver(adjacency, false);
  if (solver.info() != Eigen::Success) throw ConvergenceError("dense general eigensolver failed", 0.0);
  const auto& values = solver.eigenvalues();
  report.complex_eigenvalues.assign(values.data(), values.data() + values.size());
  std::stable_sort(report.complex_eigenvalues.begin(), report.complex_eigenvalues.end(),
                   [](const auto& a, const auto& b) { return std::abs(a) > std::abs(b); });

  report.top_eigenvalue = 0.0;
  for (const auto& z : report.complex_eigenvalues) {
    const double modulus = std::abs(z);
    if (std::abs(z.imag()) <= report.tolerance) report.top_eigenvalue = std::max(report.top_eigenvalue, z.real());
    if (std::abs(modulus - k) <= report.tolerance) {
      ++report.trivial_count;
    } else {
      report.lambda_nontrivial = std::max(report.lambda_nontrivial, modulus);
    }
  }
  report.top_matches_degree = std::abs(report.top_eigenvalue - k) <= report.tolerance;
  report.is_ramanujan = report.lambda_nontrivial <= report.ramanujan_bound + report.tolerance;
  return report;
}

}  // namespace ramcut::graphlab
