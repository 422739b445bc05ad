// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_POTENTIAL_HPP
#define CYRES_POTENTIAL_HPP

#include <complex>
#include <vector>

#include "cyres/cross_section.hpp"
#include "cyres/free_kernels.hpp"

namespace cyres {

struct PotentialPiece {
  double t0 = 0.0;
  double t1 = 0.0;
  double v = 0.0;
};

// Compactly supported potential given through transverse coupling matrices.
// Two concrete forms:
//   separable:        V = v(t), coupling = v(t) Id
//   single harmonic:  V = v(t) (1 + amp cos(q y)) on an interval cross
//                     section, coupling = v(t)(Id + amp C_q)
// with v piecewise constant.
class PotentialData {
public:
  static PotentialData zero(Geometry g);
  static PotentialData separable(std::vector<PotentialPiece> pieces, Geometry g);
  static PotentialData single_harmonic(std::vector<PotentialPiece> pieces, Geometry g,
                                       int q, double amp, double interval_length);

  bool separable_flag() const { return separable_; }
  Geometry geometry() const { return geometry_; }
  const std::vector<PotentialPiece>& pieces() const { return pieces_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }
  double sup_norm() const { return sup_norm_; }
  double support_length() const { return support_length_; }
  bool is_zero() const { return pieces_.empty(); }

  double profile(double t) const;  // v(t)
  // V_{ll'}(t) over base sigma-indices l, l' = 1..l_max (1-based).
  std::complex<double> coupling(const CrossSection& cs, int l, int lp, double t) const;

private:
  Geometry geometry_ = Geometry::full_line;
  std::vector<PotentialPiece> pieces_;
  bool separable_ = true;
  int harmonic_q_ = 0;
  double harmonic_amp_ = 0.0;
  double interval_length_ = 0.0;
  double t_lo_ = 0.0, t_hi_ = 0.0;
  double sup_norm_ = 0.0, support_length_ = 0.0;
};

}  // namespace cyres

#endif
