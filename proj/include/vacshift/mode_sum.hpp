#pragma once

#include <functional>
#include <stdexcept>
#include <string>

#include "vacshift/cutoff.hpp"

namespace vacshift {

/// Thrown when a truncated mode sum has not converged; carries the last
/// partial term for diagnostics.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double last_term_value)
      : std::runtime_error(what), last_term(last_term_value) {}
  double last_term;
};

/// Per-mode term f(n) of a regularized sum, with the primed-sum
/// convention (factor 1/2 at n = 0).
struct SummandSpec {
  std::function<double(double)> f;
  bool half_weight_at_zero = true;
};

/// Regularized difference
///   [ 1/2 f(0) w(0) + sum_{n>=1} f(n) w(n) ] - integral_0^inf f(n) w(n) dn
/// with w the cutoff weight (identically 1 for CutoffSpec::none()).
double sum_minus_integral(const SummandSpec& s, const CutoffSpec& c);

}  // namespace vacshift
