#include "vacshift/mode_sum.hpp"

#include <cmath>
#include <cstdint>

#include "vacshift/quadrature.hpp"

namespace vacshift {

double sum_minus_integral(const SummandSpec& s, const CutoffSpec& c) {
  auto weighted = [&](double n) { return s.f(n) * cutoff_weight(c, n); };

  // Primed sum. Kahan accumulation keeps the result independent of the
  // truncation details at the 1e-15 level.
  double sum = 0.0;
  double carry = 0.0;
  auto accumulate = [&sum, &carry](double term) {
    const double y = term - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  };

  const double f0 = weighted(0.0);
  accumulate(s.half_weight_at_zero ? 0.5 * f0 : f0);

  std::int64_t n_max;
  if (c.is_none()) {
    n_max = 2000000;
  } else {
    n_max = static_cast<std::int64_t>(std::ceil(c.lambda) + 50.0 * c.lambda);
  }

  double last_term = 0.0;
  int negligible_streak = 0;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    last_term = weighted(static_cast<double>(n));
    accumulate(last_term);
    if (std::abs(last_term) < 1e-16 * (1.0 + std::abs(sum))) {
      if (++negligible_streak >= 3) {
        last_term = 0.0;
        break;
      }
    } else {
      negligible_streak = 0;
    }
  }
  if (std::abs(last_term) > 1e-9 * (1.0 + std::abs(sum))) {
    throw ConvergenceError(
        "sum_minus_integral: tail estimate exceeds tolerance at n_max "
        "(last term " +
            std::to_string(last_term) + ")",
        last_term);
  }

  QuadResult integral;
  if (!c.is_none() && c.kind == CutoffKind::Sharp) {
    // Weight vanishes identically beyond lambda.
    integral = integrate(weighted, 0.0, c.lambda);
  } else {
    integral = integrate_semi_infinite(weighted, 0.0);
  }
  return sum - integral.value;
}

}  // namespace vacshift
