#include "vacshift/sphere.hpp"

#include <cmath>
#include <stdexcept>

#include "vacshift/constants.hpp"

namespace vacshift {

namespace {

constexpr double kTailBound = 1e-13;

void check_ell_max(long ell_max) {
  if (ell_max != kEllInfinity && ell_max < 1) {
    throw std::invalid_argument("ell_max must be >= 1 or kEllInfinity");
  }
}

// sum_{j>=0} (a + j)^2 q^j for |q| < 1
double quadratic_geometric(double a, double q) {
  const double om = 1.0 - q;
  return a * a / om + 2.0 * a * q / (om * om) +
         q * (1.0 + q) / (om * om * om);
}

}  // namespace

SphereSetup::SphereSetup(double r_nm_, double z0_nm_, double homega_p_ev_,
                         const DipoleModel& dipole_, long ell_max_)
    : r_nm(r_nm_),
      z0_nm(z0_nm_),
      homega_p_ev(homega_p_ev_),
      dipole(dipole_),
      ell_max(ell_max_) {
  if (!(r_nm > 0.0) || !(z0_nm > 0.0) || !(homega_p_ev > 0.0)) {
    throw std::invalid_argument("SphereSetup: R, z0, omega_P must be positive");
  }
  check_ell_max(ell_max);
}

double omega_ell(long ell, double homega_p_ev) {
  if (ell < 1) {
    throw std::domain_error("omega_ell: ell must be >= 1");
  }
  const double le = static_cast<double>(ell);
  return homega_p_ev * std::sqrt(le / (2.0 * le + 1.0));
}

double eta_p(const SphereSetup& s) {
  const double zp_over_zvac =
      kHbarCEvNm / (kPi * s.r_nm * s.homega_p_ev);
  return s.dipole.q_over_e * s.dipole.a0_nm / s.r_nm *
         std::sqrt(2.0 * kPi * kFineStructure * zp_over_zvac);
}

double g_ell(long ell, const SphereSetup& s) {
  if (ell < 1) {
    throw std::domain_error("g_ell: ell must be >= 1");
  }
  const double le = static_cast<double>(ell);
  const double t = s.r_nm / (s.r_nm + s.z0_nm);
  return s.homega_p_ev * eta_p(s) * 0.5 * (le + 1.0) *
         std::pow(le / (2.0 * le + 1.0), 0.25) * std::pow(t, le + 2.0);
}

double f_im_sp(double z0_over_r, long ell_max) {
  if (!(z0_over_r > 0.0)) {
    throw std::domain_error("f_im_sp: z0/R must be positive");
  }
  check_ell_max(ell_max);
  const double x = z0_over_r;
  const double pref = 0.5 * x * x * x;
  if (ell_max == kEllInfinity) {
    const double s = 1.0 / ((1.0 + x) * (1.0 + x));
    const double om = 1.0 - s;
    return pref * s * s * ((1.0 + s) / (om * om * om) - 1.0);
  }
  const double r = 1.0 / (1.0 + x);
  double sum = 0.0;
  for (long l = 1; l <= ell_max; ++l) {
    const double le = static_cast<double>(l);
    sum += (le + 1.0) * (le + 1.0) * std::pow(r, 2.0 * le + 4.0);
  }
  return pref * sum;
}

double delta_e_im_sphere(const SphereSetup& s) {
  const double ratio = s.dipole.a0_nm / s.z0_nm;
  return -ratio * ratio * ratio * f_im_sp(s.z0_nm / s.r_nm, s.ell_max);
}

double f_p(double x, double y, long ell_max) {
  if (!(x >= 0.0) || !(y > 0.0)) {
    throw std::domain_error("f_p: requires x >= 0 and y > 0");
  }
  check_ell_max(ell_max);
  const double r = 1.0 / (1.0 + y);
  const double r2 = r * r;
  const double pref = 0.5 * kPi * y * y * y;
  double sum = 0.0;
  const long hard_cap = 10000000;
  for (long l = 1;; ++l) {
    const double le = static_cast<double>(l);
    const double root = std::sqrt((2.0 * le + 1.0) / le);
    const double term = (le + 1.0) * (le + 1.0) * root / (1.0 + x * root) *
                        std::pow(r, 2.0 * le + 4.0);
    sum += term;
    if (ell_max != kEllInfinity) {
      if (l >= ell_max) {
        break;
      }
      continue;
    }
    // All remaining terms are bounded by sqrt(3)/(1 + sqrt(2) x) times a
    // quadratic-geometric envelope in r^2.
    const double tail = std::sqrt(3.0) / (1.0 + std::sqrt(2.0) * x) *
                        std::pow(r, 2.0 * le + 6.0) *
                        quadratic_geometric(le + 2.0, r2);
    if (pref * tail < kTailBound) {
      break;
    }
    if (l >= hard_cap) {
      throw std::runtime_error("f_p: multipole sum did not converge");
    }
  }
  return pref * sum;
}

double z_eff_over_zvac(double z0_nm, double homega_p_ev) {
  return kHbarCEvNm / (kPi * z0_nm * homega_p_ev);
}

double delta_e_p(const SphereSetup& s) {
  const double x = s.dipole.homega0_ev / s.homega_p_ev;
  const double y = s.z0_nm / s.r_nm;
  const double ratio = s.dipole.q_over_e * s.dipole.a0_nm / s.z0_nm;
  const double e_ev = kFineStructure * s.dipole.homega0_ev * ratio * ratio *
                      z_eff_over_zvac(s.z0_nm, s.homega_p_ev) *
                      f_p(x, y, s.ell_max);
  return e_ev / coulomb_scale(s.dipole);
}

double delta_e_p_direct(const SphereSetup& s) {
  const double homega0 = s.dipole.homega0_ev;
  double sum_ev = 0.0;
  const long hard_cap = 10000000;
  const double t = s.r_nm / (s.r_nm + s.z0_nm);
  for (long l = 1;; ++l) {
    const double hw = omega_ell(l, s.homega_p_ev);
    const double hg = g_ell(l, s);
    const double term = hg * hg * homega0 / (hw * (hw + homega0));
    sum_ev += term;
    if (s.ell_max != kEllInfinity) {
      if (l >= s.ell_max) {
        break;
      }
      continue;
    }
    // term ratio approaches t^2 from above by at most ((l+2)/(l+1))^2
    const double le = static_cast<double>(l);
    const double tail =
        2.0 * term * t * t *
        quadratic_geometric(le + 2.0, t * t) / ((le + 1.0) * (le + 1.0));
    if (tail < kTailBound * sum_ev) {
      break;
    }
    if (l >= hard_cap) {
      throw std::runtime_error("delta_e_p_direct: mode sum did not converge");
    }
  }
  return sum_ev / coulomb_scale(s.dipole);
}

ShiftBreakdown sphere_total(const SphereSetup& s) {
  ShiftBreakdown out;
  out.unit = ReducedUnits::coulomb_vc(s.dipole);
  out.e_im = delta_e_im_sphere(s);
  out.e_a = 0.0;
  out.e_cav = delta_e_p(s);
  out.total = out.e_im + out.e_a + out.e_cav;
  return out;
}

}  // namespace vacshift
