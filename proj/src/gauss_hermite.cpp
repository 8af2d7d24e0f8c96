#include "vacshift/gauss_hermite.hpp"

#include <cmath>
#include <stdexcept>

#include "vacshift/constants.hpp"

namespace vacshift {

GaussHermiteRule gauss_hermite_rule(int order) {
  if (order < 1) {
    throw std::invalid_argument("gauss_hermite_rule: order must be >= 1");
  }
  const int n = order;
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);

  const double pim4 = 0.7511255444649425;  // pi^{-1/4}
  const int m = (n + 1) / 2;
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    // Initial guesses for the roots in decreasing order (NR recipe).
    if (i == 0) {
      z = std::sqrt(2.0 * n + 1.0) -
          1.85575 * std::pow(2.0 * n + 1.0, -0.16667);
    } else if (i == 1) {
      z -= 1.14 * std::pow(n, 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * rule.nodes[0];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * rule.nodes[1];
    } else {
      z = 2.0 * z - rule.nodes[i - 2];
    }
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p1 = pim4;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / j) * p2 -
             std::sqrt((j - 1.0) / j) * p3;
      }
      pp = std::sqrt(2.0 * n) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) <= 1e-15 * (1.0 + std::abs(z))) {
        break;
      }
    }
    rule.nodes[i] = z;
    rule.nodes[n - 1 - i] = -z;
    rule.weights[i] = 2.0 / (pp * pp);
    rule.weights[n - 1 - i] = rule.weights[i];
  }
  return rule;
}

double gauss_hermite_average(const std::function<double(double)>& g,
                             double sigma, int order) {
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("gauss_hermite_average: sigma must be >= 0");
  }
  if (sigma == 0.0) {
    return g(0.0);
  }
  const GaussHermiteRule rule = gauss_hermite_rule(order);
  const double norm = 1.0 / std::sqrt(kPi);
  double acc = 0.0;
  for (int i = 0; i < order; ++i) {
    acc += norm * rule.weights[i] * g(std::sqrt(2.0) * sigma * rule.nodes[i]);
  }
  return acc;
}

double gauss_hermite_average3(
    const std::function<double(double, double, double)>& g, double sigma,
    int order) {
  if (!(sigma >= 0.0)) {
    throw std::invalid_argument("gauss_hermite_average3: sigma must be >= 0");
  }
  if (sigma == 0.0) {
    return g(0.0, 0.0, 0.0);
  }
  const GaussHermiteRule rule = gauss_hermite_rule(order);
  const double norm = 1.0 / std::sqrt(kPi);
  const double scale = std::sqrt(2.0) * sigma;
  double acc = 0.0;
  for (int i = 0; i < order; ++i) {
    const double wx = norm * rule.weights[i];
    for (int j = 0; j < order; ++j) {
      const double wy = norm * rule.weights[j];
      for (int k = 0; k < order; ++k) {
        acc += wx * wy * norm * rule.weights[k] *
               g(scale * rule.nodes[i], scale * rule.nodes[j],
                 scale * rule.nodes[k]);
      }
    }
  }
  return acc;
}

}  // namespace vacshift
