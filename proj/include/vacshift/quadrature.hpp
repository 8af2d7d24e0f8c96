#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace vacshift {

/// Thrown when the adaptive quadrature cannot reach the requested
/// tolerance; carries the error estimate it did achieve.
class ToleranceError : public std::runtime_error {
 public:
  ToleranceError(const std::string& what, double achieved_error)
      : std::runtime_error(what), achieved(achieved_error) {}
  double achieved;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // absolute error estimate
};

/// Adaptive Gauss-Kronrod (7-15) integration of f over [a, b].
QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol = 1e-10);

/// Integral of f over [a, inf), mapped to [0, 1) via x = a + t/(1-t).
QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double a, double rel_tol = 1e-10);

}  // namespace vacshift
