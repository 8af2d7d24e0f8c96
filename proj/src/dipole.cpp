#include "vacshift/dipole.hpp"

#include <stdexcept>

#include "vacshift/constants.hpp"

namespace vacshift {

DipoleModel::DipoleModel(double q_over_e_, double a0_nm_, double homega0_ev_)
    : q_over_e(q_over_e_), a0_nm(a0_nm_), homega0_ev(homega0_ev_) {
  if (!(q_over_e > 0.0) || !(a0_nm > 0.0) || !(homega0_ev > 0.0)) {
    throw std::invalid_argument("DipoleModel: all parameters must be positive");
  }
}

double nu0(double d_nm, const DipoleModel& m) {
  if (!(d_nm > 0.0)) {
    throw std::invalid_argument("nu0: spacing must be positive");
  }
  return m.homega0_ev * d_nm / (kPi * kHbarCEvNm);
}

double coulomb_scale(const DipoleModel& m) {
  return kFineStructure * kHbarCEvNm * m.q_over_e * m.q_over_e / m.a0_nm;
}

}  // namespace vacshift
