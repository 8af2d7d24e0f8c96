#include "vacshift/plates_total.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "vacshift/constants.hpp"
#include "vacshift/plates_transverse.hpp"

namespace vacshift {

PlateSetup::PlateSetup(const PlateGeometry& geometry_,
                       const DipoleModel& dipole_, double z_over_zvac_,
                       std::optional<double> homega_c_ev_)
    : geometry(geometry_),
      dipole(dipole_),
      homega_c_ev(homega_c_ev_ ? *homega_c_ev_ : 10.0 * dipole_.homega0_ev),
      z_over_zvac(z_over_zvac_) {
  if (!(z_over_zvac >= 0.0)) {
    throw std::invalid_argument("PlateSetup: Z/Z_vac must be non-negative");
  }
  if (!(homega_c_ev > 0.0)) {
    throw std::invalid_argument("PlateSetup: omega_c must be positive");
  }
  if (!(eta(*this) < 5.0)) {
    throw std::invalid_argument("PlateSetup: eta >= 5, inputs out of range");
  }
}

double eta(const PlateSetup& s) {
  return s.dipole.q_over_e * s.dipole.a0_nm / s.geometry.d_nm *
         std::sqrt(2.0 * kPi * kFineStructure * s.z_over_zvac);
}

double delta_e_cav(const PlateSetup& s, CavMode mode) {
  const double vc = coulomb_scale(s.dipole);
  if (mode == CavMode::Exact) {
    const double hg = eta(s) * s.homega_c_ev;
    return hg * hg * s.dipole.homega0_ev /
           (s.homega_c_ev * (s.homega_c_ev + s.dipole.homega0_ev)) / vc;
  }
  const double ratio =
      s.dipole.q_over_e * s.dipole.a0_nm / s.geometry.d_nm;
  return kFineStructure * s.dipole.homega0_ev * ratio * ratio *
         s.z_over_zvac * 2.0 * kPi / vc;
}

ShiftBreakdown total_shift(const PlateSetup& s) {
  ShiftBreakdown out;
  out.unit = ReducedUnits::coulomb_vc(s.dipole);
  out.e_im = delta_e_im(s.geometry, s.dipole, ImAverageMode::Analytic);
  out.e_a = delta_e_A(s.geometry, s.dipole);
  out.e_cav = delta_e_cav(s, CavMode::Exact);
  out.total = out.e_im + out.e_a + out.e_cav;
  return out;
}

SignBoundaryResult sign_boundary_grid(const std::vector<double>& d_over_a0,
                                      const std::vector<double>& z_over_zvac,
                                      double z0_over_d,
                                      double homega0_over_vc,
                                      double q_over_e) {
  constexpr double kA0 = 0.1;  // nm; results in V_C units depend only on ratios
  SignBoundaryResult out;
  out.rows.reserve(d_over_a0.size() * z_over_zvac.size());

  auto make_setup = [&](double d_a0, double z_ratio) {
    const double vc = kFineStructure * kHbarCEvNm * q_over_e * q_over_e / kA0;
    const DipoleModel m(q_over_e, kA0, homega0_over_vc * vc);
    const PlateGeometry g(d_a0 * kA0, z0_over_d);
    return PlateSetup(g, m, z_ratio);
  };

  for (double d_a0 : d_over_a0) {
    for (double z_ratio : z_over_zvac) {
      SignBoundaryRow row;
      row.d_over_a0 = d_a0;
      row.z_over_zvac = z_ratio;
      row.shift = total_shift(make_setup(d_a0, z_ratio));
      row.sign = row.shift.total > 0.0 ? 1 : (row.shift.total < 0.0 ? -1 : 0);
      out.rows.push_back(row);
    }
  }

  const double z_lo_edge = z_over_zvac.front();
  const double z_hi_edge = z_over_zvac.back();
  for (double d_a0 : d_over_a0) {
    const double t_lo = total_shift(make_setup(d_a0, z_lo_edge)).total;
    const double t_hi = total_shift(make_setup(d_a0, z_hi_edge)).total;
    if (!(t_lo < 0.0 && t_hi > 0.0)) {
      out.contour_z.push_back(std::numeric_limits<double>::quiet_NaN());
      continue;
    }
    double lo = z_lo_edge;
    double hi = z_hi_edge;
    while ((hi - lo) > 1e-3 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (total_shift(make_setup(d_a0, mid)).total > 0.0) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out.contour_z.push_back(0.5 * (lo + hi));
  }
  return out;
}

}  // namespace vacshift
