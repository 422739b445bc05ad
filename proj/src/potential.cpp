// SPDX-License-Identifier: Apache-2.0
#include "cyres/potential.hpp"

#include <algorithm>
#include <cmath>

#include "cyres/errors.hpp"

namespace cyres {

namespace {

void normalize_pieces(std::vector<PotentialPiece>& pieces, Geometry g) {
  std::sort(pieces.begin(), pieces.end(),
            [](const PotentialPiece& a, const PotentialPiece& b) { return a.t0 < b.t0; });
  for (auto& p : pieces) {
    if (!(p.t1 > p.t0)) throw ConfigError("potential piece must have t1 > t0");
    if (g == Geometry::dirichlet_halfline && p.t0 < 0.0)
      throw ConfigError("half-line potential support must lie in t >= 0");
  }
  for (size_t i = 1; i < pieces.size(); ++i)
    if (pieces[i].t0 < pieces[i - 1].t1 - 1e-14)
      throw ConfigError("potential pieces overlap");
}

}  // namespace

PotentialData PotentialData::zero(Geometry g) {
  PotentialData p;
  p.geometry_ = g;
  return p;
}

PotentialData PotentialData::separable(std::vector<PotentialPiece> pieces, Geometry g) {
  PotentialData p;
  p.geometry_ = g;
  normalize_pieces(pieces, g);
  p.pieces_ = std::move(pieces);
  if (!p.pieces_.empty()) {
    p.t_lo_ = p.pieces_.front().t0;
    p.t_hi_ = p.pieces_.back().t1;
    p.support_length_ = p.t_hi_ - p.t_lo_;
    for (const auto& pc : p.pieces_) p.sup_norm_ = std::max(p.sup_norm_, std::abs(pc.v));
  }
  return p;
}

PotentialData PotentialData::single_harmonic(std::vector<PotentialPiece> pieces, Geometry g,
                                             int q, double amp, double interval_length) {
  PotentialData p = separable(std::move(pieces), g);
  if (q < 1) throw ConfigError("harmonic index q must be >= 1");
  if (interval_length <= 0) throw ConfigError("interval length must be positive");
  p.harmonic_q_ = q;
  p.harmonic_amp_ = amp;
  p.interval_length_ = interval_length;
  p.separable_ = amp == 0.0;
  p.sup_norm_ *= 1.0 + std::abs(amp);
  return p;
}

double PotentialData::profile(double t) const {
  for (const auto& p : pieces_)
    if (t >= p.t0 && t < p.t1) return p.v;
  return 0.0;
}

std::complex<double> PotentialData::coupling(const CrossSection& cs, int l, int lp,
                                             double t) const {
  const double v = profile(t);
  double c = l == lp ? 1.0 : 0.0;
  if (harmonic_amp_ != 0.0) {
    // Interval [0, L] Dirichlet modes sin(k pi y / L):
    // (2/L) Int sin(l y') sin(l' y') cos(q y') dy', y' = pi y / L
    // = (1/2)(delta_{|l-l'|,q} - delta_{l+l',q}).
    const int jl = cs.base_threshold_of(l);
    const int jlp = cs.base_threshold_of(lp);
    double h = 0.0;
    if (std::abs(jl - jlp) == harmonic_q_) h += 0.5;
    if (jl + jlp == harmonic_q_) h -= 0.5;
    c += harmonic_amp_ * h;
  }
  return v * c;
}

}  // namespace cyres
