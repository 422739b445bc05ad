// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_ORACLE_1D_HPP
#define CYRES_ORACLE_1D_HPP

#include <complex>
#include <vector>

#include "cyres/potential.hpp"

namespace cyres {

using cplx = std::complex<double>;

// One-dimensional scattering for a piecewise-constant compactly supported
// profile, by exact 2x2 transfer matrices.  This is the independent ground
// truth for the Fredholm and S-matrix paths; it never touches the Nystrom
// or finite-difference machinery.
class Oracle1D {
public:
  Oracle1D(std::vector<PotentialPiece> pieces, Geometry geometry);

  Geometry geometry() const { return geometry_; }

  // Transmission-denominator style function whose zeros are the 1D
  // resonances/bound states:
  //   full line:  a(k) = e^{ik(b-a)} [(ik M11 - M21) + (k^2 M12 + ik M22)]/(2ik),
  //               a == 1 for V = 0 (simple pole possible at k = 0).
  //   half line:  a(k) = e^{ikb} (M22 - ik M12) = u_Jost(0), entire,
  //               a == 1 for V = 0.
  cplx a(cplx k) const;

  // Full-line reflection/transmission with global phase reference
  // (incident e^{±ikt} of unit coefficient): psi = e^{ikt} + R e^{-ikt} on
  // the left, T e^{ikt} on the right (from_left), mirrored otherwise.
  struct RT {
    cplx refl;
    cplx trans;
  };
  RT reflect_transmit(cplx k, bool from_left) const;

  // Half-line Dirichlet reflection: psi = e^{-ikt} + R e^{ikt} beyond the
  // support, psi(0) = 0.
  cplx reflect_halfline(cplx k) const;

  // All zeros of a(k) in the open rectangle, with orders; enumerated by the
  // argument principle on a self-contained rectangle bisection plus local
  // Newton.  A tiny square around k = 0 is excluded (threshold puncture).
  struct Zero {
    cplx k;
    int order;
  };
  std::vector<Zero> zeros_in_rectangle(double re_lo, double re_hi, double im_lo,
                                       double im_hi, double exclude0 = 1e-6) const;

  // Number of bound states: zeros k = i kappa, kappa > kappa_min, counted by
  // sign changes of the real-valued function a(i kappa) plus bisection.
  int count_bound_states(double kappa_max, double kappa_min = 1e-8) const;
  std::vector<double> bound_state_kappas(double kappa_max, double kappa_min = 1e-8) const;

private:
  struct Mat2 {
    cplx m11, m12, m21, m22;
  };
  Mat2 stack_matrix(cplx k) const;  // transfer across [a_, b_]

  std::vector<PotentialPiece> pieces_;  // contiguous cover of [a_, b_]
  Geometry geometry_;
  double a_ = 0.0, b_ = 0.0;
};

}  // namespace cyres

#endif
