#pragma once

#include <limits>

namespace vacshift {

/// High-frequency regulator families. The logistic weight is
/// 1 - 1/(1 + e^{-nu + Lambda}) (absolute shift, unit width), the
/// Gaussian tail is e^{-(nu/Lambda)^2}; both satisfy w(0) ~ 1, are
/// non-increasing and vanish at large nu.
enum class CutoffKind { Sharp, SmoothLogistic, SmoothGaussianTail };

struct CutoffSpec {
  CutoffKind kind = CutoffKind::SmoothLogistic;
  double lambda = 10.0;

  static CutoffSpec sharp(double lambda);
  static CutoffSpec logistic(double lambda);
  static CutoffSpec gaussian_tail(double lambda);

  /// Sentinel for "no cutoff" (weight identically 1).
  static CutoffSpec none() {
    return CutoffSpec{CutoffKind::SmoothLogistic,
                      std::numeric_limits<double>::infinity()};
  }
  bool is_none() const { return !(lambda < std::numeric_limits<double>::infinity()); }
};

/// Weight w(nu) in [0, 1] for nu >= 0.
double cutoff_weight(const CutoffSpec& c, double nu);

/// Integrated tail  integral_n^inf w(nu) dnu  (closed form per family).
/// Requires a finite cutoff scale.
double cutoff_tail_integral(const CutoffSpec& c, double n);

}  // namespace vacshift
