#pragma once

#include "vacshift/dipole.hpp"

namespace vacshift {

enum class EnergyUnit { CoulombVC, HbarOmega0 };

/// Tagged energy unit with its conversion factor to eV, derived from a
/// DipoleModel. Converting a value to another unit and back is the
/// identity to 1e-14 relative.
struct ReducedUnits {
  EnergyUnit energy_unit;
  double to_ev;

  static ReducedUnits coulomb_vc(const DipoleModel& m);
  static ReducedUnits hbar_omega0(const DipoleModel& m);
};

double convert_energy(double value, const ReducedUnits& from,
                      const ReducedUnits& to);

/// Decomposition of the total ground-state shift. All stored values are
/// expressed in the tagged unit (V_C by default).
struct ShiftBreakdown {
  double e_im = 0.0;
  double e_a = 0.0;
  double e_cav = 0.0;
  double total = 0.0;
  ReducedUnits unit;

  ShiftBreakdown in_unit(const ReducedUnits& target) const;
};

}  // namespace vacshift
