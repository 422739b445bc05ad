// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_SHEET_ATLAS_HPP
#define CYRES_SHEET_ATLAS_HPP

#include <complex>
#include <string>
#include <vector>

#include "cyres/cross_section.hpp"

namespace cyres {

// A sheet of the surface: the finite set E of threshold indices j whose
// square roots r_j have Im r_j < 0 there.  The physical sheet is E = {}.
class Sheet {
public:
  Sheet() = default;
  explicit Sheet(std::vector<int> flipped);
  static Sheet physical() { return Sheet(); }
  // {1, ..., j_max}
  static Sheet first(int j_max);

  bool contains(int j) const;
  bool is_physical() const { return flipped_.empty(); }
  Sheet sym_diff(const Sheet& other) const;
  const std::vector<int>& indices() const { return flipped_; }

  // Serialized as a sorted bracketed list, e.g. "[1,2,5]"; physical is "[]".
  std::string str() const;
  static Sheet parse(const std::string& s);

  bool operator==(const Sheet& o) const { return flipped_ == o.flipped_; }
  bool operator<(const Sheet& o) const { return flipped_ < o.flipped_; }

private:
  std::vector<int> flipped_;  // sorted, unique, 1-based
};

enum class Side { off_cut, from_above, from_below };

// A point of the surface: sheet, base value lambda = pi(z), and the side
// flag used only for real lambda on the continuous spectrum.
struct SurfacePoint {
  Sheet sheet;
  std::complex<double> lambda;
  Side side = Side::off_cut;
};

// r_j(z) = s_j sqrt(lambda - nu_j^2), principal branch with Im >= 0 and cut
// [nu_j^2, inf); s_j = -1 iff j in E.  On-cut values resolve by the side
// flag.  Throws RamificationPointError at lambda == nu_j^2 unless
// allow_boundary_zero.
std::complex<double> branch_r(const CrossSection& cs, const SurfacePoint& p, int j,
                              bool allow_boundary_zero = false);

// r~_l for the sigma-index l, via the mode -> threshold map.
std::complex<double> branch_r_tilde(const CrossSection& cs, const SurfacePoint& p, int l,
                                    bool allow_boundary_zero = false);

// Continuation across the spectral cut on the segment (nu_k^2, nu_{k+1}^2):
// same lambda, opposite side, sheet E xor {1..k}.
SurfacePoint cross_cut(const CrossSection& cs, const SurfacePoint& p, int k);

// w_E: same lambda and side, sheet E xor E'; flips r_j exactly for j in E'.
SurfacePoint involution_w(const SurfacePoint& p, const Sheet& e_prime);

// Sheets whose closures contain the ramification point (nu_m^2)_side:
// {{}, {1..m-1}, {1..m}, {m}} for m >= 2, and {{}, {1}} for m = 1.
std::vector<Sheet> local_sheets_at(const CrossSection& cs, int m, int side);

// Chart w = r_m(z) on the window around (nu_m^2)_side.  side: +1 for the
// point reached from Im pi(z) downward to 0, -1 for the mirror point.
// Quadrants of the w-disc correspond to the four local sheets.
class WindowChart {
public:
  WindowChart(const CrossSection& cs, int m, int side);

  SurfacePoint point_at(std::complex<double> w) const;
  std::complex<double> chart_of(const SurfacePoint& p) const;  // w = r_m(z)
  int m() const { return m_; }
  int side() const { return side_; }
  // Largest chart radius clear of neighboring ramification points.
  double validity_radius() const;
  // Sheet owning the (half-open, ccw) quadrant containing w.
  Sheet sheet_of(std::complex<double> w) const;

private:
  const CrossSection* cs_;
  int m_;
  int side_;
  Sheet quadrant_sheet_[4];
};

}  // namespace cyres

#endif
