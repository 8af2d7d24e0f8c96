#pragma once

namespace vacshift {

/// Polygamma function Psi^(2)(x) = d^3/dx^3 ln Gamma(x) for x > 0.
/// Accurate to at least 12 significant digits. Throws std::domain_error
/// for x <= 0 (no reflection extension).
double polygamma2(double x);

/// Riemann zeta(3).
double zeta3();

}  // namespace vacshift
