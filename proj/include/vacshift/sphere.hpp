#pragma once

#include "vacshift/dipole.hpp"
#include "vacshift/units.hpp"

namespace vacshift {

/// Sentinel for an untruncated multipole sum.
inline constexpr long kEllInfinity = -1;

/// Metallic nanosphere of radius R with a z-axis dipole at gap z0 from
/// the surface. ell_max truncates the dynamical plasmon modes;
/// kEllInfinity keeps them all (adaptive summation with a geometric
/// tail bound).
struct SphereSetup {
  double r_nm;
  double z0_nm;
  double homega_p_ev;
  DipoleModel dipole;
  long ell_max = kEllInfinity;

  SphereSetup(double r_nm_, double z0_nm_, double homega_p_ev_,
              const DipoleModel& dipole_, long ell_max_ = kEllInfinity);
};

struct PlasmonMode {
  long ell;
  double homega_ev;
  double hg_ev;
};

/// hbar omega_ell = hbar omega_P sqrt(ell/(2 ell + 1)), in eV; ell >= 1.
double omega_ell(long ell, double homega_p_ev);

/// Plasmon coupling hbar g_ell in eV,
///   g_ell = g_P (ell+1)/2 (ell/(2 ell+1))^{1/4} (R/(R+z0))^{ell+2}
/// with g_P/omega_P = (q a0/(e R)) sqrt(2 pi alpha Z_P/Z_vac).
double g_ell(long ell, const SphereSetup& s);

/// eta_P = g_P/omega_P.
double eta_p(const SphereSetup& s);

/// F_im^sp(x) = (x^3/2) sum_{ell>=1} (ell+1)^2 (1/(1+x))^{2 ell + 4};
/// closed form for the untruncated sum.
double f_im_sp(double z0_over_r, long ell_max = kEllInfinity);

/// Electrostatic shift -(a0/z0)^3 F_im^sp(z0/R), in V_C units.
double delta_e_im_sphere(const SphereSetup& s);

/// F_P(x, y) with x = omega0/omega_P, y = z0/R:
///   (pi y^3/2) sum (ell+1)^2 sqrt((2ell+1)/ell)/(1 + x sqrt((2ell+1)/ell))
///              (1/(1+y))^{2 ell + 4}
double f_p(double x, double y, long ell_max = kEllInfinity);

/// Z_eff/Z_vac = hbar c/(pi z0 hbar omega_P).
double z_eff_over_zvac(double z0_nm, double homega_p_ev);

/// Plasmon vacuum shift via the Z_eff/F_P factorization, in V_C units.
double delta_e_p(const SphereSetup& s);

/// Same shift from the direct second-order mode sum
/// sum_ell hbar g_ell^2 omega0/(omega_ell (omega_ell + omega0)).
double delta_e_p_direct(const SphereSetup& s);

/// Total shift e_im + e_p (transverse modes neglected; e_a recorded as
/// zero); always negative.
ShiftBreakdown sphere_total(const SphereSetup& s);

}  // namespace vacshift
