#pragma once

#include <functional>
#include <vector>

namespace conformal {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes from Newton iteration on P_n seeded with the Tricomi estimate.
/// Rules are cached per order.
const GaussLegendreRule& gauss_legendre(int order);

double integrate(const std::function<double(double)>& f, double a, double b, int order);

}  // namespace conformal
