// SPDX-License-Identifier: Apache-2.0
#include "cyres/sheet_atlas.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "cyres/errors.hpp"

namespace cyres {

Sheet::Sheet(std::vector<int> flipped) : flipped_(std::move(flipped)) {
  std::sort(flipped_.begin(), flipped_.end());
  flipped_.erase(std::unique(flipped_.begin(), flipped_.end()), flipped_.end());
  if (!flipped_.empty() && flipped_.front() < 1)
    throw Error("sheet indices are 1-based");
}

Sheet Sheet::first(int j_max) {
  std::vector<int> v;
  for (int j = 1; j <= j_max; ++j) v.push_back(j);
  return Sheet(v);
}

bool Sheet::contains(int j) const {
  return std::binary_search(flipped_.begin(), flipped_.end(), j);
}

Sheet Sheet::sym_diff(const Sheet& other) const {
  std::vector<int> out;
  std::set_symmetric_difference(flipped_.begin(), flipped_.end(),
                                other.flipped_.begin(), other.flipped_.end(),
                                std::back_inserter(out));
  return Sheet(out);
}

std::string Sheet::str() const {
  std::ostringstream os;
  os << '[';
  for (size_t i = 0; i < flipped_.size(); ++i) {
    if (i) os << ',';
    os << flipped_[i];
  }
  os << ']';
  return os.str();
}

Sheet Sheet::parse(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw ConfigError("sheet literal must look like [1,2]");
  std::vector<int> v;
  std::string body = s.substr(1, s.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok.empty()) continue;
    v.push_back(std::stoi(tok));
  }
  return Sheet(v);
}

std::complex<double> branch_r(const CrossSection& cs, const SurfacePoint& p, int j,
                              bool allow_boundary_zero) {
  const double nu = cs.threshold(j);
  const std::complex<double> u = p.lambda - nu;
  const double sgn = p.sheet.contains(j) ? -1.0 : 1.0;
  if (u == 0.0) {
    if (allow_boundary_zero) return 0.0;
    throw RamificationPointError("lambda equals threshold nu_j^2");
  }
  if (u.imag() == 0.0 && u.real() > 0.0) {
    // On the cut of r_j; the side flag picks the boundary value of the
    // principal (Im >= 0) branch: +sqrt from above, -sqrt from below.
    double root = std::sqrt(u.real());
    if (p.side == Side::from_above) return sgn * root;
    if (p.side == Side::from_below) return -sgn * root;
    throw Error("on-cut evaluation requires a side flag");
  }
  std::complex<double> w = std::sqrt(u);  // principal: Re >= 0
  if (w.imag() < 0.0) w = -w;             // select Im >= 0 branch
  return sgn * w;
}

std::complex<double> branch_r_tilde(const CrossSection& cs, const SurfacePoint& p, int l,
                                    bool allow_boundary_zero) {
  return branch_r(cs, p, cs.threshold_of_mode(l), allow_boundary_zero);
}

SurfacePoint cross_cut(const CrossSection& cs, const SurfacePoint& p, int k) {
  if (p.lambda.imag() != 0.0)
    throw PreconditionViolated("cut crossing requires real lambda");
  if (k < 1 || k + 1 > cs.num_thresholds())
    throw PreconditionViolated("segment index outside stored thresholds");
  const double x = p.lambda.real();
  if (x == cs.threshold(k) || x == cs.threshold(k + 1))
    throw RamificationPointError("lambda at a ramification point");
  if (!(cs.threshold(k) < x && x < cs.threshold(k + 1)))
    throw PreconditionViolated("lambda not on the requested cut segment");
  if (p.side == Side::off_cut)
    throw PreconditionViolated("side flag required to cross a cut");
  SurfacePoint q = p;
  q.side = p.side == Side::from_above ? Side::from_below : Side::from_above;
  q.sheet = p.sheet.sym_diff(Sheet::first(k));
  return q;
}

SurfacePoint involution_w(const SurfacePoint& p, const Sheet& e_prime) {
  SurfacePoint q = p;
  q.sheet = p.sheet.sym_diff(e_prime);
  return q;
}

std::vector<Sheet> local_sheets_at(const CrossSection& cs, int m, int /*side*/) {
  if (m < 1 || m > cs.num_thresholds())
    throw PreconditionViolated("threshold index outside catalog");
  if (m == 1) return {Sheet::physical(), Sheet::first(1)};
  return {Sheet::physical(), Sheet::first(m - 1), Sheet::first(m),
          Sheet({std::vector<int>{m}})};
}

WindowChart::WindowChart(const CrossSection& cs, int m, int side)
    : cs_(&cs), m_(m), side_(side) {
  if (m < 1 || m > cs.num_thresholds())
    throw PreconditionViolated("threshold index outside catalog");
  if (side != 1 && side != -1) throw PreconditionViolated("side must be +1 or -1");
  // Counterclockwise quadrants of the w-disc, starting at arg in (0, pi/2).
  // Derived by composing cut crossings around the ramification point.
  if (m == 1) {
    // Single ramification point over nu_1^2: upper half = physical,
    // lower half = {1}; side is immaterial.
    quadrant_sheet_[0] = Sheet::physical();
    quadrant_sheet_[1] = Sheet::physical();
    quadrant_sheet_[2] = Sheet::first(1);
    quadrant_sheet_[3] = Sheet::first(1);
  } else if (side == 1) {
    quadrant_sheet_[0] = Sheet::physical();
    quadrant_sheet_[1] = Sheet::first(m - 1);
    quadrant_sheet_[2] = Sheet({std::vector<int>{m}});
    quadrant_sheet_[3] = Sheet::first(m);
  } else {
    quadrant_sheet_[0] = Sheet::first(m - 1);
    quadrant_sheet_[1] = Sheet::physical();
    quadrant_sheet_[2] = Sheet::first(m);
    quadrant_sheet_[3] = Sheet({std::vector<int>{m}});
  }
}

Sheet WindowChart::sheet_of(std::complex<double> w) const {
  // Half-open ccw quadrants: arg in [0,pi/2) -> 0, [pi/2,pi) -> 1, etc.
  int q;
  if (w.real() > 0.0)
    q = w.imag() > 0.0 ? 0 : (w.imag() < 0.0 ? 3 : 0);
  else if (w.real() < 0.0)
    q = w.imag() > 0.0 ? 1 : (w.imag() < 0.0 ? 2 : 2);
  else
    q = w.imag() > 0.0 ? 1 : 3;
  return quadrant_sheet_[q];
}

SurfacePoint WindowChart::point_at(std::complex<double> w) const {
  if (w == 0.0) throw RamificationPointError("chart origin is the ramification point");
  SurfacePoint p;
  p.lambda = cs_->threshold(m_) + w * w;
  p.sheet = sheet_of(w);
  if (p.lambda.imag() == 0.0) {
    // Quadrant boundary rays carry each quadrant's ccw-start ray; the side
    // flag is the boundary value continuous from that quadrant's interior.
    // Quadrants starting on a real-w ray have Im lambda > 0 inside (the
    // sign of Im(w^2) alternates around the disc), so real-w rays resolve
    // from above and imaginary-w rays from below, on both window sides.
    if (w.imag() == 0.0) {
      p.side = Side::from_above;
    } else if (m_ == 1 && p.lambda.real() < cs_->threshold(1)) {
      p.side = Side::off_cut;  // below the first threshold there is no cut
    } else {
      p.side = Side::from_below;
    }
  }
  return p;
}

std::complex<double> WindowChart::chart_of(const SurfacePoint& p) const {
  return branch_r(*cs_, p, m_, true);
}

double WindowChart::validity_radius() const {
  double r = std::numeric_limits<double>::infinity();
  if (m_ > 1) r = std::sqrt(cs_->threshold(m_) - cs_->threshold(m_ - 1));
  if (m_ < cs_->num_thresholds())
    r = std::min(r, std::sqrt(cs_->threshold(m_ + 1) - cs_->threshold(m_)));
  return r;
}

}  // namespace cyres
