// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_CROSS_SECTION_HPP
#define CYRES_CROSS_SECTION_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cyres {

// Descriptor for a closed-form transverse spectrum.
struct CrossSectionSpec {
  enum class Kind { Interval, Circle, Sphere, Explicit, DisjointUnion, TwoEnded };
  enum class Bc { Dirichlet, Neumann };

  Kind kind = Kind::Interval;
  double length = 0.0;   // interval
  Bc bc = Bc::Dirichlet; // interval
  double radius = 1.0;   // circle
  int sphere_dim = 2;    // sphere S^d
  std::vector<std::pair<double, int>> explicit_modes;  // (sigma^2, mult)
  std::vector<CrossSectionSpec> parts;                 // disjoint union / two_ended base
  int truncate = 0;  // number of sigma entries kept (per component)

  static CrossSectionSpec interval(double L, Bc bc, int truncate);
  static CrossSectionSpec circle(double radius, int truncate);
  static CrossSectionSpec sphere(int d, int distinct_count);
  static CrossSectionSpec explicit_list(std::vector<std::pair<double, int>> modes);
  static CrossSectionSpec disjoint_union(std::vector<CrossSectionSpec> parts);
  static CrossSectionSpec two_ended(CrossSectionSpec base);
};

// Transverse spectral data of Y.  sigma_sq is the channel-level mode list:
// for a two-ended cylinder R x Y0 it stores Y0 ⊔ Y0, so every multiplicity is
// even and each sigma carries an end tag.  PDE-level kernel expansions on the
// product use one copy per end (kernel_mult()).
class CrossSection {
public:
  int dim_total = 2;  // n = dim X; Y has dimension n-1
  std::vector<double> sigma_sq;       // nondecreasing, with multiplicity
  std::vector<int> end_tag;           // component/end id per sigma entry
  std::vector<int> mode_threshold;    // 1-based threshold index j per sigma entry
  std::vector<double> nu_sq;          // strictly increasing distinct thresholds
  std::vector<int> mult;              // channel multiplicity M_Y per threshold
  int num_ends = 1;
  bool integer_valued = false;  // catalog is exactly integer (dedup is exact)
  std::string label;

  int num_modes() const { return static_cast<int>(sigma_sq.size()); }
  int num_thresholds() const { return static_cast<int>(nu_sq.size()); }

  // sigma_l^2 = nu_j^2; l and the returned j are 1-based.
  int threshold_of_mode(int l) const;

  // Multiplicity per end (the PDE's transverse modes on one copy of Y0).
  int kernel_mult(int j) const;

  double threshold(int j) const;  // nu_j^2, 1-based

  // Base-mode view: one transverse mode per end copy, i.e. the modes that
  // enter the kernel expansions of the product R x Y0 (or the half
  // cylinder).  Indices are 1-based over sum_j kernel_mult(j).
  int base_num_modes() const;
  int base_threshold_of(int l) const;
  double base_sigma_sq(int l) const;
  // Last base index belonging to threshold j (clusters are contiguous).
  int base_end_of_threshold(int j) const;

  void validate() const;  // throws Error on violated invariants
};

CrossSection build_catalog(const CrossSectionSpec& spec, int dim_total = 0);

struct H1Certificate {
  double alpha = 0.0;
  int m_start = 1;
  int verified_upto = 0;  // last gap index checked
};

// Largest alpha with nu_m^2 - nu_{m-1}^2 >= alpha * nu_m over the stored
// range of gap indices m >= m_start.  Gap indices run over the threshold
// list augmented with a virtual base 0 when nu_1^2 > 0, so that gap 1 is
// the first threshold itself.  Throws H1ViolationError when the stored
// gap ratios keep shrinking across the range (no positive alpha is
// evidenced by the data).
H1Certificate h1_certificate(const CrossSection& cs, int m_start);

}  // namespace cyres

#endif
