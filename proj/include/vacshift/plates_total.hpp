#pragma once

#include <optional>
#include <vector>

#include "vacshift/dipole.hpp"
#include "vacshift/plates_static.hpp"
#include "vacshift/units.hpp"

namespace vacshift {

/// Plate geometry plus the LC resonator parameters. When no resonator
/// frequency is given, omega_c defaults to 10 omega0 (the low-frequency
/// regime of the approximate cavity formula).
struct PlateSetup {
  PlateGeometry geometry;
  DipoleModel dipole;
  double homega_c_ev;
  double z_over_zvac;

  PlateSetup(const PlateGeometry& geometry_, const DipoleModel& dipole_,
             double z_over_zvac_,
             std::optional<double> homega_c_ev_ = std::nullopt);
};

enum class CavMode { Exact, LowFreqApprox };

/// eta = g/omega_c = (q a0/(e d)) sqrt(2 pi alpha Z/Z_vac).
double eta(const PlateSetup& s);

/// LC-mode vacuum shift, in V_C units; strictly positive.
///   Exact:         hbar g^2 omega0 / (omega_c (omega_c + omega0))
///   LowFreqApprox: alpha hbar omega0 (q a0/(e d))^2 (Z/Z_vac) 2 pi
double delta_e_cav(const PlateSetup& s, CavMode mode);

/// Total ground-state shift e_im + e_A + e_cav, in V_C units.
ShiftBreakdown total_shift(const PlateSetup& s);

struct SignBoundaryRow {
  double d_over_a0;
  double z_over_zvac;
  ShiftBreakdown shift;
  int sign;
};

struct SignBoundaryResult {
  std::vector<SignBoundaryRow> rows;
  /// Zero-contour impedance Z*(d) per d grid value; NaN where the sign
  /// does not change inside the Z range.
  std::vector<double> contour_z;
};

/// Sweeps the (d/a0, Z/Z_vac) grid at fixed z0/d, hbar omega0/V_C, and
/// q/e, and locates the sign-change contour by bisection in Z (1e-3
/// relative).
SignBoundaryResult sign_boundary_grid(const std::vector<double>& d_over_a0,
                                      const std::vector<double>& z_over_zvac,
                                      double z0_over_d,
                                      double homega0_over_vc, double q_over_e);

}  // namespace vacshift
