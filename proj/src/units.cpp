#include "vacshift/units.hpp"

namespace vacshift {

ReducedUnits ReducedUnits::coulomb_vc(const DipoleModel& m) {
  return {EnergyUnit::CoulombVC, coulomb_scale(m)};
}

ReducedUnits ReducedUnits::hbar_omega0(const DipoleModel& m) {
  return {EnergyUnit::HbarOmega0, m.homega0_ev};
}

double convert_energy(double value, const ReducedUnits& from,
                      const ReducedUnits& to) {
  return value * (from.to_ev / to.to_ev);
}

ShiftBreakdown ShiftBreakdown::in_unit(const ReducedUnits& target) const {
  ShiftBreakdown out;
  out.e_im = convert_energy(e_im, unit, target);
  out.e_a = convert_energy(e_a, unit, target);
  out.e_cav = convert_energy(e_cav, unit, target);
  out.total = convert_energy(total, unit, target);
  out.unit = target;
  return out;
}

}  // namespace vacshift
