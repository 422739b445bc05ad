// SPDX-License-Identifier: Apache-2.0
#include "cyres/quadrature.hpp"

#include <cmath>

namespace cyres {

namespace {
int g_workers = 1;
}

void set_workers(int n) { g_workers = n < 1 ? 1 : n; }
int workers() { return g_workers; }

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
// Nodes are symmetric; we solve the positive half and mirror.
GaussLegendre::GaussLegendre(int n) : nodes(n), weights(n) {
  const double pi = 3.14159265358979323846;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double p0 = 0, p1 = 0;
    for (int it = 0; it < 100; ++it) {
      p0 = 1.0;
      p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2 * k + 1) * x * p1 - k * p2) / (k + 1);
      }
      double dp = n * (x * p0 - p1) / (x * x - 1.0);
      double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    double dp = n * (x * p0 - p1) / (x * x - 1.0);
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
}

GaussLegendre GaussLegendre::on(double a, double b, int n) {
  GaussLegendre g(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    g.nodes[i] = mid + half * g.nodes[i];
    g.weights[i] *= half;
  }
  return g;
}

}  // namespace cyres
