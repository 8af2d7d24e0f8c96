#include "vacshift/special.hpp"

#include <cmath>
#include <stdexcept>

#include "vacshift/constants.hpp"

namespace vacshift {

namespace {

// Asymptotic expansion of Psi^(2)(z) for large z:
//   Psi^(2)(z) = -1/z^2 - 1/z^3 - sum_k B_{2k} (2k+1) / z^{2k+2}.
// Valid to full double precision for z >= 20.
double polygamma2_asymptotic(double z) {
  // B_2 .. B_12
  constexpr double bernoulli[] = {1.0 / 6.0,  -1.0 / 30.0, 1.0 / 42.0,
                                  -1.0 / 30.0, 5.0 / 66.0, -691.0 / 2730.0};
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  double result = -inv2 - inv2 * inv;
  double zpow = inv2 * inv2;  // 1/z^4
  for (int k = 0; k < 6; ++k) {
    result -= bernoulli[k] * (2 * k + 3) * zpow;
    zpow *= inv2;
  }
  return result;
}

}  // namespace

double polygamma2(double x) {
  if (!(x > 0.0)) {
    throw std::domain_error("polygamma2: argument must be positive");
  }
  // Shift upward with Psi^(2)(z) = Psi^(2)(z+1) - 2/z^3 until the
  // asymptotic series applies.
  double shift = 0.0;
  double z = x;
  while (z < 20.0) {
    shift -= 2.0 / (z * z * z);
    z += 1.0;
  }
  return polygamma2_asymptotic(z) + shift;
}

double zeta3() { return kZeta3; }

}  // namespace vacshift
