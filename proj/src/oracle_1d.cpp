// SPDX-License-Identifier: Apache-2.0
#include "cyres/oracle_1d.hpp"

#include <algorithm>
#include <cmath>

#include "cyres/errors.hpp"

namespace cyres {

namespace {

const cplx kI(0.0, 1.0);

// cos(q d) and sin(q d)/q as entire functions of q^2 (branch-free).
void cos_sinc(cplx q2, double d, cplx& c, cplx& s) {
  cplx q = std::sqrt(q2);
  if (std::abs(q) * d < 1e-4) {
    // series in q^2 d^2 to keep full precision through the branch point
    cplx x = q2 * d * d;
    c = 1.0 - x / 2.0 + x * x / 24.0 - x * x * x / 720.0;
    s = d * (1.0 - x / 6.0 + x * x / 120.0 - x * x * x / 5040.0);
  } else {
    c = std::cos(q * d);
    s = std::sin(q * d) / q;
  }
}

}  // namespace

Oracle1D::Oracle1D(std::vector<PotentialPiece> pieces, Geometry geometry)
    : geometry_(geometry) {
  std::sort(pieces.begin(), pieces.end(),
            [](const PotentialPiece& x, const PotentialPiece& y) { return x.t0 < y.t0; });
  if (pieces.empty()) {
    a_ = b_ = 0.0;
    return;
  }
  a_ = geometry == Geometry::dirichlet_halfline ? 0.0 : pieces.front().t0;
  b_ = pieces.back().t1;
  if (geometry == Geometry::dirichlet_halfline && pieces.front().t0 < 0.0)
    throw ConfigError("half-line profile must have support in t >= 0");
  // Contiguous cover of [a_, b_], padding gaps with v = 0.
  double t = a_;
  for (const auto& p : pieces) {
    if (p.t0 > t + 1e-14) pieces_.push_back({t, p.t0, 0.0});
    pieces_.push_back(p);
    t = p.t1;
  }
}

Oracle1D::Mat2 Oracle1D::stack_matrix(cplx k) const {
  Mat2 m{1.0, 0.0, 0.0, 1.0};
  for (const auto& p : pieces_) {
    cplx c, s;
    cos_sinc(k * k - p.v, p.t1 - p.t0, c, s);
    // piece matrix [[c, s], [-q^2 s, c]] applied on the left
    cplx q2s = (k * k - p.v) * s;
    Mat2 r;
    r.m11 = c * m.m11 + s * m.m21;
    r.m12 = c * m.m12 + s * m.m22;
    r.m21 = -q2s * m.m11 + c * m.m21;
    r.m22 = -q2s * m.m12 + c * m.m22;
    m = r;
  }
  return m;
}

cplx Oracle1D::a(cplx k) const {
  if (pieces_.empty()) return 1.0;
  const Mat2 m = stack_matrix(k);
  if (geometry_ == Geometry::dirichlet_halfline) {
    return std::exp(kI * k * b_) * (m.m22 - kI * k * m.m12);
  }
  const cplx bracket = (kI * k * m.m11 - m.m21) + (k * k * m.m12 + kI * k * m.m22);
  return std::exp(kI * k * (b_ - a_)) * bracket / (2.0 * kI * k);
}

Oracle1D::RT Oracle1D::reflect_transmit(cplx k, bool from_left) const {
  if (geometry_ != Geometry::full_line)
    throw PreconditionViolated("reflect_transmit is a full-line quantity");
  if (pieces_.empty()) return {0.0, 1.0};
  const Mat2 m = stack_matrix(k);
  const cplx ea = std::exp(kI * k * a_), eb = std::exp(kI * k * b_);
  if (from_left) {
    // u(a) = ea + R/ea, u'(a) = ik(ea - R/ea); u(b) = T eb, u'(b) = ik T eb
    // Solve the 2x2 linear system for (R, T).
    cplx A11 = m.m11 / ea - kI * k * m.m12 / ea, A12 = -eb;
    cplx A21 = m.m21 / ea - kI * k * m.m22 / ea, A22 = -kI * k * eb;
    cplx b1 = -(m.m11 * ea + kI * k * m.m12 * ea);
    cplx b2 = -(m.m21 * ea + kI * k * m.m22 * ea);
    cplx det = A11 * A22 - A12 * A21;
    return {(b1 * A22 - A12 * b2) / det, (A11 * b2 - b1 * A21) / det};
  }
  // incident e^{-ikt} from the right: u(b) = 1/eb + R eb, u(a) = T/ea
  cplx A11 = -(m.m11 * eb + kI * k * m.m12 * eb);  // wrong direction; invert below
  (void)A11;
  // Propagate right-to-left with the inverse matrix (det = 1):
  // (u,u')(a) = Minv (u,u')(b), Minv = [[m22, -m12], [-m21, m11]].
  // u(b) = 1/eb + R eb, u'(b) = -ik/eb + ik R eb; u(a) = T/ea, u'(a) = -ik T/ea.
  cplx B11 = m.m22 * eb + m.m12 * kI * k * eb, B12 = -1.0 / ea;
  cplx B21 = -m.m21 * eb - m.m11 * kI * k * eb, B22 = kI * k / ea;
  cplx c1 = -(m.m22 / eb + m.m12 * kI * k / eb);
  cplx c2 = (m.m21 / eb + m.m11 * kI * k / eb);
  cplx det = B11 * B22 - B12 * B21;
  return {(c1 * B22 - B12 * c2) / det, (B11 * c2 - c1 * B21) / det};
}

cplx Oracle1D::reflect_halfline(cplx k) const {
  if (geometry_ != Geometry::dirichlet_halfline)
    throw PreconditionViolated("reflect_halfline is a half-line quantity");
  if (pieces_.empty()) return -1.0;
  const Mat2 m = stack_matrix(k);
  const cplx eb = std::exp(kI * k * b_);
  return -(m.m22 + kI * k * m.m12) / ((m.m22 - kI * k * m.m12) * eb * eb);
}

namespace {

// Winding number of f along the rectangle boundary by adaptive phase
// tracking.  Returns false when |f| dips below floor_abs.
struct RectWinding {
  const Oracle1D* self;
  double floor_abs;

  bool arg_delta(const std::vector<cplx>& vals, double& total) const {
    total = 0.0;
    for (size_t i = 0; i + 1 < vals.size(); ++i) {
      double d = std::arg(vals[i + 1] / vals[i]);
      total += d;
    }
    return true;
  }
};

}  // namespace

std::vector<Oracle1D::Zero> Oracle1D::zeros_in_rectangle(double re_lo, double re_hi,
                                                         double im_lo, double im_hi,
                                                         double exclude0) const {
  std::vector<Zero> out;
  if (pieces_.empty()) return out;

  const bool fullline = geometry_ == Geometry::full_line;
  auto f = [&](cplx k) { return a(k); };

  // Adaptive winding along a rectangle boundary; refines until each step's
  // phase change is < pi/2.  Throws ContourTooClose via the retry ladder.
  auto winding = [&](double rl, double rh, double il, double ih) -> int {
    std::vector<cplx> corners = {{rl, il}, {rh, il}, {rh, ih}, {rl, ih}};
    double total = 0.0;
    for (int e = 0; e < 4; ++e) {
      cplx p0 = corners[e], p1 = corners[(e + 1) % 4];
      std::vector<double> ts = {0.0, 0.25, 0.5, 0.75, 1.0};
      std::vector<cplx> vs;
      for (double t : ts) vs.push_back(f(p0 + (p1 - p0) * t));
      for (int round = 0; round < 24; ++round) {
        bool ok = true;
        std::vector<double> nts;
        std::vector<cplx> nvs;
        for (size_t i = 0; i + 1 < ts.size(); ++i) {
          nts.push_back(ts[i]);
          nvs.push_back(vs[i]);
          if (std::abs(vs[i]) < floor_level_ || std::abs(vs[i + 1]) < floor_level_)
            throw ContourTooClose("oracle contour too close to a zero");
          if (std::abs(std::arg(vs[i + 1] / vs[i])) > 1.3) {
            ok = false;
            double tm = 0.5 * (ts[i] + ts[i + 1]);
            nts.push_back(tm);
            nvs.push_back(f(p0 + (p1 - p0) * tm));
          }
        }
        nts.push_back(ts.back());
        nvs.push_back(vs.back());
        ts.swap(nts);
        vs.swap(nvs);
        if (ok) break;
        if (round == 23) throw NonIntegerWinding("oracle winding did not settle");
      }
      for (size_t i = 0; i + 1 < vs.size(); ++i) total += std::arg(vs[i + 1] / vs[i]);
    }
    double w = total / (2.0 * 3.14159265358979323846);
    long r = std::lround(w);
    if (std::abs(w - r) > 1e-3) throw NonIntegerWinding("oracle winding not integral");
    return static_cast<int>(r);
  };

  // Recursive bisection down to small boxes, then Newton.
  struct Box {
    double rl, rh, il, ih;
    int w;
  };
  std::vector<Box> stack;
  // Keep the full-line pole at k=0 out of every contour by splitting the
  // initial rectangle along the axes when it straddles them.
  std::vector<Box> roots;
  auto push_root = [&](double rl, double rh, double il, double ih) {
    if (rh - rl < 1e-12 || ih - il < 1e-12) return;
    roots.push_back({rl, rh, il, ih, -1});
  };
  if (fullline && re_lo < 0 && re_hi > 0 && im_lo < 0 && im_hi > 0) {
    const double e = exclude0;
    push_root(re_lo, -e, im_lo, im_hi);
    push_root(e, re_hi, im_lo, im_hi);
    push_root(-e, e, im_lo, -e);
    push_root(-e, e, e, im_hi);
  } else {
    push_root(re_lo, re_hi, im_lo, im_hi);
  }

  auto newton = [&](cplx k0, int order) -> cplx {
    cplx k = k0;
    for (int it = 0; it < 60; ++it) {
      double h = std::max(1e-9, 1e-7 * std::abs(k));
      cplx d = (f(k + h) - f(k - h)) / (2.0 * h);
      if (d == 0.0) break;
      cplx step = static_cast<double>(order) * f(k) / d;
      k -= step;
      if (std::abs(step) < 1e-13 * std::max(1.0, std::abs(k))) break;
    }
    return k;
  };

  for (const auto& root : roots) {
    // Jiggle ladder for contours through zeros.
    double grow[] = {0.0, 3.1e-3, -2.3e-3, 7.7e-3};
    for (double g : grow) {
      try {
        Box b = root;
        b.rl -= g;
        b.rh += g;
        b.il -= g;
        b.ih += g;
        b.w = winding(b.rl, b.rh, b.il, b.ih);
        stack.push_back(b);
        break;
      } catch (const Error&) {
        if (g == grow[3]) throw;
      }
    }
  }

  while (!stack.empty()) {
    Box b = stack.back();
    stack.pop_back();
    if (b.w == 0) continue;
    double size = std::max(b.rh - b.rl, b.ih - b.il);
    if (size < 1e-4) {
      cplx k = newton(cplx(0.5 * (b.rl + b.rh), 0.5 * (b.il + b.ih)), b.w);
      out.push_back({k, b.w});
      continue;
    }
    const double splits[] = {0.5, 0.53, 0.46, 0.57};
    bool done = false;
    for (double s : splits) {
      double rm = b.rl + s * (b.rh - b.rl);
      double im = b.il + s * (b.ih - b.il);
      try {
        Box q[4] = {{b.rl, rm, b.il, im, 0},
                    {rm, b.rh, b.il, im, 0},
                    {b.rl, rm, im, b.ih, 0},
                    {rm, b.rh, im, b.ih, 0}};
        int sum = 0;
        for (auto& qq : q) {
          qq.w = winding(qq.rl, qq.rh, qq.il, qq.ih);
          sum += qq.w;
        }
        if (sum != b.w) continue;  // a zero sat on the split line; try again
        for (auto& qq : q)
          if (qq.w != 0) stack.push_back(qq);
        done = true;
        break;
      } catch (const Error&) {
        continue;
      }
    }
    if (!done) throw BudgetExceeded("oracle subdivision could not separate zeros");
  }

  // Merge duplicates (zeros near box boundaries can be found twice).
  std::vector<Zero> merged;
  for (const auto& z : out) {
    bool dup = false;
    for (auto& m : merged)
      if (std::abs(m.k - z.k) < 1e-7 * std::max(1.0, std::abs(z.k))) {
        dup = true;
        break;
      }
    if (!dup && z.k.real() > re_lo && z.k.real() < re_hi && z.k.imag() > im_lo &&
        z.k.imag() < im_hi && std::abs(z.k) > exclude0)
      merged.push_back(z);
  }
  std::sort(merged.begin(), merged.end(), [](const Zero& x, const Zero& y) {
    if (x.k.real() != y.k.real()) return x.k.real() < y.k.real();
    return x.k.imag() < y.k.imag();
  });
  return merged;
}

int Oracle1D::count_bound_states(double kappa_max, double kappa_min) const {
  return static_cast<int>(bound_state_kappas(kappa_max, kappa_min).size());
}

std::vector<double> Oracle1D::bound_state_kappas(double kappa_max, double kappa_min) const {
  std::vector<double> out;
  if (pieces_.empty()) return out;
  // a(i kappa) is real for real profiles; count sign changes on a fine grid
  // and refine by bisection.
  const int n = 4000;
  auto g = [&](double kap) { return a(cplx(0.0, kap)).real(); };
  double prev = g(kappa_min);
  double prev_k = kappa_min;
  for (int i = 1; i <= n; ++i) {
    double kap = kappa_min + (kappa_max - kappa_min) * i / n;
    double cur = g(kap);
    if (prev == 0.0) prev = cur > 0 ? 1e-300 : -1e-300;
    if ((prev < 0) != (cur < 0)) {
      double lo = prev_k, hi = kap;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        double val = g(mid);
        if ((val < 0) == (prev < 0)) lo = mid;
        else hi = mid;
      }
      out.push_back(0.5 * (lo + hi));
    }
    prev = cur;
    prev_k = kap;
  }
  return out;
}

}  // namespace cyres
