#pragma once

#include "vacshift/dipole.hpp"

namespace vacshift {

/// Two infinite parallel perfect mirrors separated by d, with the
/// positive charge at height z0 = z0_over_d * d.
struct PlateGeometry {
  double d_nm;
  double z0_over_d;

  PlateGeometry(double d_nm_, double z0_over_d_);
};

/// Displacement of the negative charge relative to r0, in nm.
struct DipoleDisplacement {
  double x_nm = 0.0;
  double y_nm = 0.0;
  double z_nm = 0.0;
};

enum class ImAverageMode { Analytic, NumericFull };

/// Full image-charge interaction energy, in units of V_C. The image
/// series is summed with the conditionally convergent 1/n pieces paired,
/// so every partial sum is finite; the O(1/N^2) tails are corrected
/// analytically. fixed_terms > 0 forces a deterministic truncation
/// (useful for finite differencing); fixed_terms = 0 doubles N until the
/// result is stable to 1e-9 V_C.
double v_im_full(const PlateGeometry& g, const DipoleDisplacement& r,
                 const DipoleModel& m, long fixed_terms = 0);

/// Closed-form quadratic expansion of v_im_full about r = 0, in V_C units.
double v_im_quadratic(const PlateGeometry& g, const DipoleDisplacement& r,
                      const DipoleModel& m);

/// F_im(x) = (1/8)[2/x^3 - Psi2(1-x) - Psi2(1+x)], x = z0/d in (0,1).
double f_im(double z0_over_d);

/// Electrostatic ground-state shift, in V_C units.
///   Analytic:     -(a0/d)^3 F_im(z0/d)
///   NumericFull:  3-D Gauss-Hermite average of v_im_full over the
///                 ground-state Gaussian (requires d >= 5 a0; z-nodes
///                 outside the gap are dropped and weights renormalized)
double delta_e_im(const PlateGeometry& g, const DipoleModel& m,
                  ImAverageMode mode, int gh_order = 20);

}  // namespace vacshift
