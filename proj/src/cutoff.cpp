#include "vacshift/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "vacshift/constants.hpp"

namespace vacshift {

namespace {

CutoffSpec make(CutoffKind kind, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("CutoffSpec: lambda must be positive");
  }
  return CutoffSpec{kind, lambda};
}

double softplus(double x) {
  // log(1 + e^x), stable for both tails.
  if (x > 30.0) {
    return x + std::log1p(std::exp(-x));
  }
  return std::log1p(std::exp(x));
}

}  // namespace

CutoffSpec CutoffSpec::sharp(double lambda) {
  return make(CutoffKind::Sharp, lambda);
}
CutoffSpec CutoffSpec::logistic(double lambda) {
  return make(CutoffKind::SmoothLogistic, lambda);
}
CutoffSpec CutoffSpec::gaussian_tail(double lambda) {
  return make(CutoffKind::SmoothGaussianTail, lambda);
}

double cutoff_weight(const CutoffSpec& c, double nu) {
  if (c.is_none()) {
    return 1.0;
  }
  switch (c.kind) {
    case CutoffKind::Sharp:
      return nu <= c.lambda ? 1.0 : 0.0;
    case CutoffKind::SmoothLogistic: {
      const double x = nu - c.lambda;
      if (x > 0.0) {
        const double e = std::exp(-x);
        return e / (1.0 + e);
      }
      return 1.0 / (1.0 + std::exp(x));
    }
    case CutoffKind::SmoothGaussianTail: {
      const double r = nu / c.lambda;
      return std::exp(-r * r);
    }
  }
  return 0.0;
}

double cutoff_tail_integral(const CutoffSpec& c, double n) {
  if (c.is_none()) {
    throw std::invalid_argument(
        "cutoff_tail_integral: requires a finite cutoff scale");
  }
  switch (c.kind) {
    case CutoffKind::Sharp:
      return n < c.lambda ? c.lambda - n : 0.0;
    case CutoffKind::SmoothLogistic:
      return softplus(c.lambda - n);
    case CutoffKind::SmoothGaussianTail:
      return 0.5 * c.lambda * std::sqrt(kPi) * std::erfc(n / c.lambda);
  }
  return 0.0;
}

}  // namespace vacshift
