// SPDX-License-Identifier: Apache-2.0
#ifndef CYRES_QUADRATURE_HPP
#define CYRES_QUADRATURE_HPP

#include <vector>

namespace cyres {

struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;

  explicit GaussLegendre(int n);
  // Rule mapped to [a,b].
  static GaussLegendre on(double a, double b, int n);
};

}  // namespace cyres

#endif
