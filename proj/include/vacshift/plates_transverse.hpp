#pragma once

#include <optional>

#include "vacshift/cutoff.hpp"
#include "vacshift/dipole.hpp"
#include "vacshift/plates_static.hpp"

namespace vacshift {

enum class LambPath {
  NumericSharp,
  NumericSmooth,
  AnalyticClosedForm,
  AnalyticLowFreq,
  AnalyticHighFreq,
};

/// Value of one of the four regularized Lamb-type functions together
/// with how it was obtained. wall_warning flags numeric evaluations
/// requested too close to a plate, where the cutoff sums oscillate.
struct LambFunctionResult {
  double value = 0.0;
  LambPath path = LambPath::AnalyticClosedForm;
  std::optional<CutoffSpec> cutoff;
  double tail_estimate = 0.0;
  bool wall_warning = false;
};

/// g_{A^2}: numeric sum-minus-integral with the given cutoff.
LambFunctionResult g_a2(const CutoffSpec& c);
/// g_{A^2} closed form, exactly 1/12.
LambFunctionResult g_a2_analytic();

/// f_{A^2}(z0/d): closed form 1/(4 sin^2(pi z0/d)) when no cutoff is
/// given, otherwise the cutoff-weighted numeric sum.
LambFunctionResult f_a2(double z0_over_d,
                        const std::optional<CutoffSpec>& c = std::nullopt);

/// g_{A.p}(nu0): numeric engine evaluation with a cutoff, or the
/// low-frequency closed form (accurate at all frequencies) without one.
LambFunctionResult g_ap(double nu0,
                        const std::optional<CutoffSpec>& c = std::nullopt);
double g_ap_low_freq(double nu0);
double g_ap_high_freq(double nu0);

/// f_{A.p}(nu0, z0/d): cutoff-weighted numeric sum when a cutoff is
/// given, otherwise the contour-integral form (valid at all nu0).
LambFunctionResult f_ap(double nu0, double z0_over_d,
                        const std::optional<CutoffSpec>& c = std::nullopt);
double f_ap_contour(double nu0, double z0_over_d);
double f_ap_low_freq(double nu0);
double f_ap_high_freq(double nu0, double z0_over_d);
/// Abel summation of the divergent low-frequency series
/// -(nu0/2) sum (-1)^n r^n cos(n zeta), extrapolated r -> 1.
double f_ap_abel(double nu0, double zeta);

/// F_A(nu0, z0/d) = 2 pi [g_{A^2} + f_{A^2} - g_{A.p} - f_{A.p}],
/// assembled from the uniformly valid analytic paths; >= 0.
double f_A(double nu0, double z0_over_d);

/// Transverse-mode shift alpha hbar omega0 (q a0/(e d))^2 F_A, in V_C
/// units; always positive.
double delta_e_A(const PlateGeometry& g, const DipoleModel& m);

/// pi nu0 F_A / F_im = delta_e_A / |delta_e_im|; contract: < 1.
double bound_ratio(const PlateGeometry& g, const DipoleModel& m);

}  // namespace vacshift
