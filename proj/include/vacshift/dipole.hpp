#pragma once

namespace vacshift {

/// Isotropic harmonic dipole: charge ratio q/e, characteristic size
/// a0 = |<0|z|1>| in nm, transition energy hbar*omega0 in eV.
struct DipoleModel {
  double q_over_e;
  double a0_nm;
  double homega0_ev;

  DipoleModel(double q_over_e_, double a0_nm_, double homega0_ev_);
};

/// nu0 = omega0 * d / (pi c) = omega0 / omega_perp for plate spacing d (nm).
double nu0(double d_nm, const DipoleModel& m);

/// Coulomb scale V_C = q^2/(4 pi eps0 a0) = alpha * hbar c * (q/e)^2 / a0,
/// in eV.
double coulomb_scale(const DipoleModel& m);

}  // namespace vacshift
