#pragma once

#include <functional>
#include <vector>

namespace vacshift {

/// Nodes and weights of the n-point Gauss-Hermite rule for the weight
/// e^{-z^2} on (-inf, inf).
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussHermiteRule gauss_hermite_rule(int order);

/// Expectation value of g under a centered normal with standard
/// deviation sigma, E[g(X)], X ~ N(0, sigma^2).
double gauss_hermite_average(const std::function<double(double)>& g,
                             double sigma, int order = 20);

/// E[g(X,Y,Z)] for independent N(0, sigma^2) coordinates, via the
/// tensor-product rule.
double gauss_hermite_average3(
    const std::function<double(double, double, double)>& g, double sigma,
    int order = 20);

}  // namespace vacshift
