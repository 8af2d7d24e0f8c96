#include "vacshift/plates_transverse.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vacshift/constants.hpp"
#include "vacshift/mode_sum.hpp"
#include "vacshift/quadrature.hpp"
#include "vacshift/special.hpp"

namespace vacshift {

namespace {

void check_position(double x) {
  if (!(x > 0.0) || !(x < 1.0)) {
    throw std::domain_error("z0_over_d must lie in (0,1)");
  }
}

bool near_wall(double x) { return x < 0.1 || x > 0.9; }

double zeta_of(double x) { return 2.0 * kPi * x - kPi; }

// integral_n^inf h_c(nu)/nu^2 dnu, n >= 1
double weight_a2(const CutoffSpec& c, double n) {
  if (c.kind == CutoffKind::Sharp) {
    return n < c.lambda ? 1.0 / n - 1.0 / c.lambda : 0.0;
  }
  return integrate_semi_infinite(
             [&c](double nu) { return cutoff_weight(c, nu) / (nu * nu); }, n)
      .value;
}

// G(n) = integral_n^inf nu0/(nu + nu0) h_c(nu) dnu
double weight_gap(const CutoffSpec& c, double nu0, double n) {
  if (c.kind == CutoffKind::Sharp) {
    if (n >= c.lambda) {
      return 0.0;
    }
    return nu0 * std::log((nu0 + c.lambda) / (nu0 + n));
  }
  return integrate_semi_infinite(
             [&c, nu0](double nu) {
               return nu0 / (nu + nu0) * cutoff_weight(c, nu);
             },
             n)
      .value;
}

// n^2 nu0 integral_n^inf h_c(nu)/(nu^2 (nu + nu0)) dnu, n >= 1
double weight_fap(const CutoffSpec& c, double nu0, double n) {
  if (c.kind == CutoffKind::Sharp) {
    if (n >= c.lambda) {
      return 0.0;
    }
    const double l = c.lambda;
    return n * n *
           ((1.0 / n - 1.0 / l) +
            std::log(n * (l + nu0) / (l * (n + nu0))) / nu0);
  }
  return n * n * nu0 *
         integrate_semi_infinite(
             [&c, nu0](double nu) {
               return cutoff_weight(c, nu) / (nu * nu * (nu + nu0));
             },
             n)
             .value;
}

LambPath numeric_path(const CutoffSpec& c) {
  return c.kind == CutoffKind::Sharp ? LambPath::NumericSharp
                                     : LambPath::NumericSmooth;
}

// Kahan-summed series sum_{n>=1} term(n), stopping once terms stay
// negligible; returns the last term magnitude through tail.
template <typename F>
double cutoff_series(const CutoffSpec& c, F term, double* tail) {
  const long n_max = static_cast<long>(std::ceil(c.lambda) + 50.0 * c.lambda);
  double sum = 0.0;
  double carry = 0.0;
  double last = 0.0;
  int streak = 0;
  for (long n = 1; n <= n_max; ++n) {
    last = term(static_cast<double>(n));
    const double y = last - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
    if (std::abs(last) < 1e-16 * (1.0 + std::abs(sum))) {
      if (++streak >= 3) {
        break;
      }
    } else {
      streak = 0;
    }
  }
  *tail = std::abs(last);
  return sum;
}

// u^2 cosh(u zeta)/sinh(u pi), stable for large u
double contour_kernel(double u, double zeta) {
  const double za = std::abs(zeta);
  if (u < 1e-6) {
    return u / kPi;
  }
  const double num = std::exp(u * (za - kPi)) * (1.0 + std::exp(-2.0 * u * za));
  const double den = 1.0 - std::exp(-2.0 * u * kPi);
  return u * u * num / den;
}

}  // namespace

LambFunctionResult g_a2(const CutoffSpec& c) {
  SummandSpec s;
  s.f = [&c](double n) { return cutoff_tail_integral(c, n); };
  LambFunctionResult out;
  out.value = sum_minus_integral(s, CutoffSpec::none());
  out.path = numeric_path(c);
  out.cutoff = c;
  return out;
}

LambFunctionResult g_a2_analytic() {
  LambFunctionResult out;
  out.value = 1.0 / 12.0;
  out.path = LambPath::AnalyticClosedForm;
  return out;
}

LambFunctionResult f_a2(double z0_over_d, const std::optional<CutoffSpec>& c) {
  check_position(z0_over_d);
  LambFunctionResult out;
  if (!c) {
    const double s = std::sin(kPi * z0_over_d);
    out.value = 0.25 / (s * s);
    out.path = LambPath::AnalyticClosedForm;
    return out;
  }
  out.path = numeric_path(*c);
  out.cutoff = *c;
  out.wall_warning = near_wall(z0_over_d);
  const double x = z0_over_d;
  out.value = cutoff_series(
      *c,
      [&](double n) {
        return -n * n * std::cos(2.0 * kPi * n * x) * weight_a2(*c, n);
      },
      &out.tail_estimate);
  return out;
}

double g_ap_low_freq(double nu0) {
  if (nu0 == 0.0) {
    return 0.0;
  }
  return nu0 * ((nu0 + 0.5) * std::log((nu0 + 1.0) / nu0) +
                1.0 / (12.0 * (1.0 + nu0)) - 1.0);
}

double g_ap_high_freq(double nu0) {
  return 1.0 / 12.0 + 1.0 / (360.0 * nu0 * nu0);
}

LambFunctionResult g_ap(double nu0, const std::optional<CutoffSpec>& c) {
  if (!(nu0 >= 0.0)) {
    throw std::domain_error("g_ap: nu0 must be non-negative");
  }
  LambFunctionResult out;
  if (!c) {
    out.value = g_ap_low_freq(nu0);
    out.path = LambPath::AnalyticClosedForm;
    return out;
  }
  SummandSpec s;
  s.f = [&c, nu0](double n) { return weight_gap(*c, nu0, n); };
  out.value = sum_minus_integral(s, CutoffSpec::none());
  out.path = numeric_path(*c);
  out.cutoff = *c;
  return out;
}

double f_ap_low_freq(double nu0) { return 0.25 * nu0; }

double f_ap_high_freq(double nu0, double z0_over_d) {
  check_position(z0_over_d);
  const double s = std::sin(kPi * z0_over_d);
  return 0.25 / (s * s) - f_im(z0_over_d) / (2.0 * kPi * kPi * nu0);
}

double f_ap_contour(double nu0, double z0_over_d) {
  check_position(z0_over_d);
  if (nu0 == 0.0) {
    return 0.0;
  }
  const double zeta = zeta_of(z0_over_d);
  const double integral =
      integrate_semi_infinite(
          [zeta, nu0](double u) {
            return contour_kernel(u, zeta) * std::atan2(nu0, u);
          },
          0.0)
          .value;
  const double s = std::sin(kPi * z0_over_d);
  return 0.25 / (s * s) - integral / nu0;
}

double f_ap_abel(double nu0, double zeta) {
  // Partial Abel sums v(r) at r = 1 - 2^{-k}, extrapolated to r = 1 by
  // Neville's scheme in h = 1 - r.
  constexpr int kPoints = 7;
  double h[kPoints];
  double v[kPoints];
  for (int k = 0; k < kPoints; ++k) {
    const double hh = std::pow(2.0, -(k + 3));
    const double r = 1.0 - hh;
    double sum = 0.0;
    double rn = 1.0;
    double sign = 1.0;
    for (long n = 1; n < 4000000; ++n) {
      rn *= r;
      sign = -sign;
      const double term = sign * rn * std::cos(n * zeta);
      sum += term;
      if (rn < 1e-18) {
        break;
      }
    }
    h[k] = hh;
    v[k] = -0.5 * nu0 * sum;
  }
  for (int j = 1; j < kPoints; ++j) {
    for (int i = kPoints - 1; i >= j; --i) {
      v[i] = (h[i - j] * v[i] - h[i] * v[i - 1]) / (h[i - j] - h[i]);
    }
  }
  return v[kPoints - 1];
}

LambFunctionResult f_ap(double nu0, double z0_over_d,
                        const std::optional<CutoffSpec>& c) {
  check_position(z0_over_d);
  if (!(nu0 >= 0.0)) {
    throw std::domain_error("f_ap: nu0 must be non-negative");
  }
  LambFunctionResult out;
  if (!c) {
    out.value = f_ap_contour(nu0, z0_over_d);
    out.path = LambPath::AnalyticClosedForm;
    return out;
  }
  out.path = numeric_path(*c);
  out.cutoff = *c;
  out.wall_warning = near_wall(z0_over_d);
  if (nu0 == 0.0) {
    return out;
  }
  const double x = z0_over_d;
  out.value = cutoff_series(
      *c,
      [&](double n) {
        return -std::cos(2.0 * kPi * n * x) * weight_fap(*c, nu0, n);
      },
      &out.tail_estimate);
  return out;
}

double f_A(double nu0, double z0_over_d) {
  check_position(z0_over_d);
  if (!(nu0 >= 0.0)) {
    throw std::domain_error("f_A: nu0 must be non-negative");
  }
  const double s = std::sin(kPi * z0_over_d);
  const double value = 2.0 * kPi *
                       (1.0 / 12.0 + 0.25 / (s * s) - g_ap_low_freq(nu0) -
                        f_ap_contour(nu0, z0_over_d));
  return value;
}

double delta_e_A(const PlateGeometry& g, const DipoleModel& m) {
  const double fa = f_A(nu0(g.d_nm, m), g.z0_over_d);
  const double ratio = m.q_over_e * m.a0_nm / g.d_nm;
  const double e_ev = kFineStructure * m.homega0_ev * ratio * ratio * fa;
  return e_ev / coulomb_scale(m);
}

double bound_ratio(const PlateGeometry& g, const DipoleModel& m) {
  const double n0 = nu0(g.d_nm, m);
  return kPi * n0 * f_A(n0, g.z0_over_d) / f_im(g.z0_over_d);
}

}  // namespace vacshift
