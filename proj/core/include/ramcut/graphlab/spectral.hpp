#pragma once

#include "ramcut/graphlab/graph.hpp"

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

namespace ramcut::graphlab {

struct SpectralOptions {
  /// Dense eigensolves up to this many vertices; larger graphs use Lanczos.
  std::size_t dense_cap = 4096;
  /// Absolute tolerance is tolerance_factor * k.
  double tolerance_factor = 1e-9;
  /// Lanczos stops once both extremal Ritz residuals fall below this times k.
  double lanczos_residual = 1e-8;
  std::size_t lanczos_max_iterations = 5000;
};

/// Reads RAMCUT_DENSE_CAP from the environment on top of the defaults.
SpectralOptions spectral_options_from_env();

struct SpectralReport {
  bool directed = false;
  std::size_t n = 0;
  std::size_t k = 0;
  /// "dense" or "lanczos".
  std::string method;
  /// Lanczos reports only trivial and extremal nontrivial eigenvalues.
  bool partial = false;
  /// Graphs: ascending real spectrum. Empty for digraphs.
  std::vector<double> eigenvalues;
  /// Digraphs: spectrum sorted by decreasing modulus. Empty for graphs.
  std::vector<std::complex<double>> complex_eigenvalues;
  /// Eigenvalues removed as trivial before certification (graphs only).
  std::vector<double> trivial_eigenvalues;
  std::size_t trivial_count = 0;
  /// True when the coloring (if any) was equitable and its quotient spectrum was used.
  bool coloring_used = false;
  double lambda_nontrivial = 0.0;
  /// Largest nontrivial eigenvalue (signed); graphs only.
  double second_eigenvalue = 0.0;
  /// 2 sqrt(k-1) for graphs, sqrt(k) for digraphs.
  double ramanujan_bound = 0.0;
  double tolerance = 0.0;
  double top_eigenvalue = 0.0;
  /// |top_eigenvalue - k| <= tolerance.
  bool top_matches_degree = false;
  bool is_ramanujan = false;
  /// Largest Lanczos residual; 0 for dense solves.
  double residual = 0.0;
};

/// Trivial eigenvalues: k; -k when bipartite; with an equitable coloring, the
/// spectrum of the color-quotient matrix instead. Throws ConvergenceError when
/// Lanczos does not converge.
SpectralReport spectral_report(const RegularGraph& graph, const SpectralOptions& options = {});

/// Dense only. Trivial eigenvalues are those with |z| = k; the rest must satisfy
/// |z| <= sqrt(k). Throws CapExceeded when n exceeds the dense cap.
SpectralReport spectral_report(const RegularDigraph& graph, const SpectralOptions& options = {});

}  // namespace ramcut::graphlab
