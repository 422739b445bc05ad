// SPDX-License-Identifier: Apache-2.0
#include "cyres/free_kernels.hpp"

#include <cmath>

#include "cyres/errors.hpp"

namespace cyres {

std::complex<double> mode_kernel(const CrossSection& cs, const KernelRequest& req) {
  const std::complex<double> r = branch_r_tilde(cs, req.point, req.mode);
  // RamificationPointError already raised by branch_r_tilde when r = 0.
  const std::complex<double> I(0.0, 1.0);
  const std::complex<double> pre = I / (2.0 * r);
  const double d = std::abs(req.t - req.t_prime);
  if (req.geometry == Geometry::full_line) return pre * std::exp(I * d * r);
  if (req.t < 0.0 || req.t_prime < 0.0)
    throw PreconditionViolated("half-line kernel needs t, t' >= 0");
  const double s = req.t + req.t_prime;
  return pre * (std::exp(I * d * r) - std::exp(I * s * r));
}

double mode_tail_bound(const CrossSection& cs, const SurfacePoint& p, double t_lo,
                       double t_hi, int cutoff_l, double vnorm, double tau_min) {
  if (t_hi < t_lo) throw PreconditionViolated("empty support interval");
  if (cutoff_l < 0 || cutoff_l >= cs.num_modes())
    throw PreconditionViolated("cutoff must leave stored modes above it");
  const double a = t_hi - t_lo;
  if (vnorm == 0.0) return 0.0;

  double bound = 0.0;
  double prev_term = -1.0;
  bool decreasing_at_edge = true;
  for (int l = cutoff_l + 1; l <= cs.num_modes(); ++l) {
    const std::complex<double> r = branch_r_tilde(cs, p, l);
    const double im = r.imag();
    if (im < tau_min)
      throw PreconditionViolated("Im r~_l below tau_min for an omitted mode");
    const double term = std::min(a, 2.0 / im) / (2.0 * std::abs(r));
    bound = std::max(bound, term);
    if (l == cs.num_modes() && prev_term >= 0.0 && term > prev_term)
      decreasing_at_edge = false;
    prev_term = term;
  }
  if (!decreasing_at_edge)
    throw PreconditionViolated("per-mode bound not decreasing at catalog edge; "
                               "store more modes to certify the tail");
  return vnorm * bound;
}

}  // namespace cyres
