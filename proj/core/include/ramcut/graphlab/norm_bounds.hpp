#pragma once

#include "ramcut/qcalc/bounds.hpp"

namespace ramcut::graphlab {

using qcalc::LogValue;

/// Norm bound for the ell-th power of an r-normal operator with degree k and
/// nontrivial spectral radius lambda:
///   C(ell+r-1, r-1) k^{r-1} lambda^{ell-r+1}
/// Requires ell, r, k >= 1 and lambda >= 0; throws DomainError otherwise.
LogValue normal_bound(unsigned ell, unsigned r, unsigned k, double lambda);

/// The same bound specialised to Ramanujan digraphs (lambda = sqrt(k)):
///   (ell+r)^r k^{(r+ell)/2}
LogValue ram_digraph_bound(unsigned ell, unsigned r, unsigned k);

}  // namespace ramcut::graphlab
