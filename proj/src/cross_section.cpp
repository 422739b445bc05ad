// SPDX-License-Identifier: Apache-2.0
#include "cyres/cross_section.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "cyres/errors.hpp"

namespace cyres {

CrossSectionSpec CrossSectionSpec::interval(double L, Bc bc, int truncate) {
  CrossSectionSpec s;
  s.kind = Kind::Interval;
  s.length = L;
  s.bc = bc;
  s.truncate = truncate;
  return s;
}

CrossSectionSpec CrossSectionSpec::circle(double radius, int truncate) {
  CrossSectionSpec s;
  s.kind = Kind::Circle;
  s.radius = radius;
  s.truncate = truncate;
  return s;
}

CrossSectionSpec CrossSectionSpec::sphere(int d, int distinct_count) {
  CrossSectionSpec s;
  s.kind = Kind::Sphere;
  s.sphere_dim = d;
  s.truncate = distinct_count;
  return s;
}

CrossSectionSpec CrossSectionSpec::explicit_list(std::vector<std::pair<double, int>> modes) {
  CrossSectionSpec s;
  s.kind = Kind::Explicit;
  s.explicit_modes = std::move(modes);
  return s;
}

CrossSectionSpec CrossSectionSpec::disjoint_union(std::vector<CrossSectionSpec> parts) {
  CrossSectionSpec s;
  s.kind = Kind::DisjointUnion;
  s.parts = std::move(parts);
  return s;
}

CrossSectionSpec CrossSectionSpec::two_ended(CrossSectionSpec base) {
  CrossSectionSpec s;
  s.kind = Kind::TwoEnded;
  s.parts.push_back(std::move(base));
  return s;
}

namespace {

constexpr double kDedupRelTol = 1e-10;

bool same_threshold(double a, double b, bool exact) {
  if (exact) return a == b;
  return std::abs(a - b) <= kDedupRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Dimension of spherical harmonics of degree k on S^d:
// (2k+d-1)(k+d-2)! / (k! (d-1)!).
long long sphere_mult(int k, int d) {
  if (k == 0) return 1;
  if (d == 1) return 2;  // S^1: e^{±iky}
  long long binom = 1;  // C(k+d-2, d-2)
  for (int i = 1; i <= d - 2; ++i) binom = binom * (k + i) / i;
  return binom * (2 * k + d - 1) / (d - 1);
}

struct RawMode {
  double sigma_sq;
  int end_tag;
};

// One component's eigenvalue list (untagged), plus whether it is exactly
// integer-valued and the cross-section dimension.
struct RawCatalog {
  std::vector<RawMode> modes;
  bool integer_valued = true;
  int y_dim = 1;
  std::string label;
};

RawCatalog build_raw(const CrossSectionSpec& spec, int tag) {
  RawCatalog out;
  switch (spec.kind) {
    case CrossSectionSpec::Kind::Interval: {
      if (spec.length <= 0) throw ConfigError("interval length must be positive");
      if (spec.truncate < 1) throw ConfigError("truncation count must be >= 1");
      const double pi = 3.14159265358979323846;
      int k0 = spec.bc == CrossSectionSpec::Bc::Dirichlet ? 1 : 0;
      for (int i = 0; i < spec.truncate; ++i) {
        double k = k0 + i;
        double v = (k * pi / spec.length) * (k * pi / spec.length);
        out.modes.push_back({v, tag});
      }
      // sigma^2 = k^2 exactly when L = pi
      out.integer_valued = std::abs(spec.length - pi) < 1e-15;
      if (out.integer_valued)
        for (auto& m : out.modes) m.sigma_sq = std::round(m.sigma_sq);
      out.y_dim = 1;
      out.label = "interval";
      break;
    }
    case CrossSectionSpec::Kind::Circle: {
      if (spec.radius <= 0) throw ConfigError("circle radius must be positive");
      if (spec.truncate < 1) throw ConfigError("truncation count must be >= 1");
      int k = 0;
      while (static_cast<int>(out.modes.size()) < spec.truncate) {
        double v = (k / spec.radius) * (k / spec.radius);
        out.modes.push_back({v, tag});
        if (k > 0 && static_cast<int>(out.modes.size()) < spec.truncate)
          out.modes.push_back({v, tag});
        ++k;
      }
      out.integer_valued = spec.radius == 1.0;
      out.y_dim = 1;
      out.label = "circle";
      break;
    }
    case CrossSectionSpec::Kind::Sphere: {
      if (spec.sphere_dim < 1) throw ConfigError("sphere dimension must be >= 1");
      if (spec.truncate < 1) throw ConfigError("truncation count must be >= 1");
      for (int k = 0; k < spec.truncate; ++k) {
        double v = static_cast<double>(k) * (k + spec.sphere_dim - 1);
        long long m = sphere_mult(k, spec.sphere_dim);
        for (long long i = 0; i < m; ++i) out.modes.push_back({v, tag});
      }
      out.integer_valued = true;
      out.y_dim = spec.sphere_dim;
      out.label = "sphere";
      break;
    }
    case CrossSectionSpec::Kind::Explicit: {
      if (spec.explicit_modes.empty()) throw ConfigError("empty spectrum request");
      for (auto& [v, m] : spec.explicit_modes) {
        if (m < 1) throw ConfigError("explicit multiplicity must be >= 1");
        for (int i = 0; i < m; ++i) out.modes.push_back({v, tag});
      }
      out.integer_valued = false;
      out.y_dim = 1;
      out.label = "explicit";
      break;
    }
    default:
      throw ConfigError("nested union specs must be leaf catalogs");
  }
  return out;
}

}  // namespace

CrossSection build_catalog(const CrossSectionSpec& spec, int dim_total) {
  std::vector<RawCatalog> raws;
  int num_ends = 1;
  switch (spec.kind) {
    case CrossSectionSpec::Kind::TwoEnded: {
      if (spec.parts.size() != 1) throw ConfigError("two_ended takes one base spec");
      raws.push_back(build_raw(spec.parts[0], 0));
      raws.push_back(build_raw(spec.parts[0], 1));
      num_ends = 2;
      break;
    }
    case CrossSectionSpec::Kind::DisjointUnion: {
      if (spec.parts.empty()) throw ConfigError("empty disjoint union");
      int t = 0;
      for (const auto& p : spec.parts) raws.push_back(build_raw(p, t++));
      num_ends = static_cast<int>(spec.parts.size());
      break;
    }
    default:
      raws.push_back(build_raw(spec, 0));
      break;
  }

  CrossSection cs;
  cs.num_ends = num_ends;
  cs.integer_valued = true;
  int y_dim = 0;
  std::vector<RawMode> all;
  for (auto& r : raws) {
    all.insert(all.end(), r.modes.begin(), r.modes.end());
    cs.integer_valued = cs.integer_valued && r.integer_valued;
    y_dim = std::max(y_dim, r.y_dim);
    if (cs.label.empty())
      cs.label = r.label;
    else if (cs.label != r.label)
      cs.label += "+" + r.label;
  }
  if (num_ends == 2) cs.label = "two_ended " + cs.label;
  cs.dim_total = dim_total > 0 ? dim_total : y_dim + 1;

  std::stable_sort(all.begin(), all.end(), [](const RawMode& a, const RawMode& b) {
    return std::tie(a.sigma_sq, a.end_tag) < std::tie(b.sigma_sq, b.end_tag);
  });

  for (const auto& m : all) {
    if (!cs.nu_sq.empty() && same_threshold(cs.nu_sq.back(), m.sigma_sq, cs.integer_valued)) {
      cs.mult.back() += 1;
    } else {
      cs.nu_sq.push_back(m.sigma_sq);
      cs.mult.push_back(1);
    }
    cs.sigma_sq.push_back(m.sigma_sq);
    cs.end_tag.push_back(m.end_tag);
    cs.mode_threshold.push_back(static_cast<int>(cs.nu_sq.size()));
  }
  cs.validate();
  return cs;
}

int CrossSection::threshold_of_mode(int l) const {
  if (l < 1 || l > num_modes()) throw Error("sigma index out of stored range");
  return mode_threshold[l - 1];
}

int CrossSection::kernel_mult(int j) const {
  if (j < 1 || j > num_thresholds()) throw Error("threshold index out of stored range");
  return mult[j - 1] / num_ends;
}

double CrossSection::threshold(int j) const {
  if (j < 1 || j > num_thresholds()) throw Error("threshold index out of stored range");
  return nu_sq[j - 1];
}

int CrossSection::base_num_modes() const { return num_modes() / num_ends; }

int CrossSection::base_threshold_of(int l) const {
  if (l < 1 || l > base_num_modes()) throw Error("base sigma index out of stored range");
  int acc = 0;
  for (int j = 1; j <= num_thresholds(); ++j) {
    acc += kernel_mult(j);
    if (l <= acc) return j;
  }
  throw Error("base mode map inconsistent");
}

double CrossSection::base_sigma_sq(int l) const { return threshold(base_threshold_of(l)); }

int CrossSection::base_end_of_threshold(int j) const {
  int acc = 0;
  for (int jj = 1; jj <= j; ++jj) acc += kernel_mult(jj);
  return acc;
}

void CrossSection::validate() const {
  if (sigma_sq.empty()) throw Error("empty catalog");
  long long total = 0;
  for (int m : mult) total += m;
  if (total != num_modes()) throw Error("multiplicities do not sum to mode count");
  for (int j = 1; j < num_thresholds(); ++j)
    if (!(nu_sq[j] > nu_sq[j - 1])) throw Error("thresholds not strictly increasing");
  for (int l = 1; l <= num_modes(); ++l) {
    int j = mode_threshold[l - 1];
    if (!same_threshold(sigma_sq[l - 1], nu_sq[j - 1], integer_valued))
      throw Error("mode/threshold map inconsistent");
  }
  if (num_ends > 1) {
    for (int m : mult)
      if (m % num_ends != 0) throw Error("union multiplicities must split over ends");
  }
}

H1Certificate h1_certificate(const CrossSection& cs, int m_start) {
  // Gap sequence over the threshold list with a virtual base 0 prepended
  // when nu_1^2 > 0; gap m compares w_m against w_{m-1}.
  std::vector<double> w;
  if (cs.nu_sq.front() > 0.0) w.push_back(0.0);
  w.insert(w.end(), cs.nu_sq.begin(), cs.nu_sq.end());
  int gaps = static_cast<int>(w.size()) - 1;
  if (m_start < 1) m_start = 1;
  if (gaps < m_start + 1)
    throw PreconditionViolated("need at least m_start+1 stored thresholds");

  std::vector<double> ratio;
  for (int m = m_start; m <= gaps; ++m) {
    double num = w[m] - w[m - 1];
    double den = std::sqrt(w[m]);
    ratio.push_back(num / den);
  }
  // Shrinking-tail detection: the minimum over the later half still halving
  // the earlier minimum means the data evidences alpha -> 0.
  size_t half = ratio.size() / 2;
  double min_head = ratio[0], min_tail = ratio[half];
  for (size_t i = 0; i < ratio.size(); ++i) {
    if (i < half) min_head = std::min(min_head, ratio[i]);
    else min_tail = std::min(min_tail, ratio[i]);
  }
  if (ratio.size() >= 8 && min_tail <= 0.5 * min_head)
    throw H1ViolationError("stored gap ratios keep shrinking; no positive alpha evidenced");

  H1Certificate cert;
  cert.alpha = std::min(min_head, min_tail);
  cert.m_start = m_start;
  cert.verified_upto = gaps;
  if (!(cert.alpha > 0))
    throw H1ViolationError("gap ratio is zero in the stored range");
  return cert;
}

}  // namespace cyres
