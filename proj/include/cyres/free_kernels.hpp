// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_FREE_KERNELS_HPP
#define CYRES_FREE_KERNELS_HPP

#include <complex>

#include "cyres/cross_section.hpp"
#include "cyres/sheet_atlas.hpp"

namespace cyres {

enum class Geometry { full_line, dirichlet_halfline };

struct KernelRequest {
  SurfacePoint point;
  int mode = 1;  // sigma-index l
  Geometry geometry = Geometry::full_line;
  double t = 0.0;
  double t_prime = 0.0;
};

// Axial factor of the free-resolvent mode kernel.  full_line:
// (i/(2 r~_l)) e^{i|t-t'| r~_l}; dirichlet_halfline subtracts the image
// term e^{i(t+t') r~_l}.  Transverse eigenfunction factors are carried by
// the coupling matrices, never evaluated pointwise.
std::complex<double> mode_kernel(const CrossSection& cs, const KernelRequest& req);

// Certified operator-norm bound for the block of V R_0(z) chi omitted by
// cutting the mode expansion at sigma-index L, on supp chi = [t_lo, t_hi].
// The omitted free part is block diagonal over the orthogonal mode ranges,
// so its norm is the sup over l > L of the 1D kernel norms; each factor is
// bounded by min(interval length, 2/Im r~_l) x sup-kernel.  Evaluated over
// all stored modes; the catalog must extend far enough beyond L that the
// per-mode bound is decreasing at the truncation edge (checked).
double mode_tail_bound(const CrossSection& cs, const SurfacePoint& p, double t_lo,
                       double t_hi, int cutoff_l, double vnorm,
                       double tau_min = 1e-3);

}  // namespace cyres

#endif
