#include "vacshift/plates_static.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "vacshift/constants.hpp"
#include "vacshift/gauss_hermite.hpp"
#include "vacshift/mode_sum.hpp"
#include "vacshift/special.hpp"

namespace vacshift {

namespace {

constexpr double kBoundaryGuard = 1e-6;

// Remainder sum_{n > N} n^{-3}, midpoint estimate; error O(1/N^4).
double cubic_tail(long n_terms) {
  const double np = static_cast<double>(n_terms) + 0.5;
  return 0.5 / (np * np);
}

struct ImParts {
  double v_plus;
  double v_minus;
};

// Both parts in V_C units for a truncation at n_terms, with the known
// 1/n^3 tails added back.
ImParts v_im_truncated(const PlateGeometry& g, const DipoleDisplacement& r,
                       const DipoleModel& m, long n_terms) {
  const double d = g.d_nm;
  const double z0 = g.z0_over_d * d;
  const double rho2 = r.x_nm * r.x_nm + r.y_nm * r.y_nm;
  const double zd = r.z_nm;
  const double a = z0 / d;
  const double b = (z0 + zd) / d;
  if (!(b > 0.0 && b < 1.0)) {
    throw std::invalid_argument(
        "v_im_full: negative charge must remain between the plates");
  }

  const double u2 = 2.0 * z0 + zd;
  double sum_plus = 0.0;
  double sum_minus = 0.0;
  for (long n = n_terms; n >= 1; --n) {
    const double s = 2.0 * n * d;
    const double an = 1.0 / std::sqrt(rho2 + (zd + s) * (zd + s));
    const double bn = 1.0 / std::sqrt(rho2 + (zd - s) * (zd - s));
    const double cn = 1.0 / std::sqrt(rho2 + (u2 + s) * (u2 + s));
    const double cm = 1.0 / std::sqrt(rho2 + (u2 - s) * (u2 - s));
    sum_plus += an + bn - cn - cm;

    const double nn = static_cast<double>(n);
    sum_minus += 0.5 * (a * a / (nn * (nn * nn - a * a)) +
                        b * b / (nn * (nn * nn - b * b)));
  }
  const double tail = cubic_tail(n_terms);
  sum_plus += (zd * zd - u2 * u2) / (4.0 * d * d * d) * tail;
  sum_minus += 0.5 * (a * a + b * b) * tail;

  const double c0 = 1.0 / std::sqrt(rho2 + u2 * u2);
  ImParts out;
  out.v_plus = -m.a0_nm * (sum_plus - c0);
  out.v_minus =
      -(m.a0_nm / d) * (0.25 / a + 0.25 / b + sum_minus);
  return out;
}

}  // namespace

PlateGeometry::PlateGeometry(double d_nm_, double z0_over_d_)
    : d_nm(d_nm_), z0_over_d(z0_over_d_) {
  if (!(d_nm > 0.0)) {
    throw std::invalid_argument("PlateGeometry: spacing must be positive");
  }
  if (!(z0_over_d > kBoundaryGuard) || !(z0_over_d < 1.0 - kBoundaryGuard)) {
    throw std::invalid_argument(
        "PlateGeometry: z0_over_d must lie in (0,1) away from the plates");
  }
}

double v_im_full(const PlateGeometry& g, const DipoleDisplacement& r,
                 const DipoleModel& m, long fixed_terms) {
  if (fixed_terms > 0) {
    const ImParts p = v_im_truncated(g, r, m, fixed_terms);
    return p.v_plus + p.v_minus;
  }
  long n = 512;
  ImParts p = v_im_truncated(g, r, m, n);
  double value = p.v_plus + p.v_minus;
  while (true) {
    n *= 2;
    p = v_im_truncated(g, r, m, n);
    const double next = p.v_plus + p.v_minus;
    const double change = std::abs(next - value);
    value = next;
    if (change <= 1e-9) {
      return value;
    }
    if (n >= (1L << 16)) {
      throw ConvergenceError("v_im_full: image sum not converged", change);
    }
  }
}

double v_im_quadratic(const PlateGeometry& g, const DipoleDisplacement& r,
                      const DipoleModel& m) {
  const double d = g.d_nm;
  const double x = g.z0_over_d;
  const double k = 2.0 / (x * x * x) - polygamma2(1.0 - x) - polygamma2(1.0 + x);
  const double z3 = 4.0 * zeta3();
  const double rho2 = r.x_nm * r.x_nm + r.y_nm * r.y_nm;
  const double zd2 = r.z_nm * r.z_nm;
  return -(m.a0_nm / (d * d * d)) *
         (rho2 / 32.0 * (k - z3) + zd2 / 16.0 * (k + z3));
}

double f_im(double z0_over_d) {
  if (!(z0_over_d > 0.0) || !(z0_over_d < 1.0)) {
    throw std::domain_error("f_im: argument must lie in (0,1)");
  }
  const double x = z0_over_d;
  return 0.125 *
         (2.0 / (x * x * x) - polygamma2(1.0 - x) - polygamma2(1.0 + x));
}

double delta_e_im(const PlateGeometry& g, const DipoleModel& m,
                  ImAverageMode mode, int gh_order) {
  const double a0_over_d = m.a0_nm / g.d_nm;
  if (mode == ImAverageMode::Analytic) {
    return -a0_over_d * a0_over_d * a0_over_d * f_im(g.z0_over_d);
  }

  if (!(g.d_nm >= 5.0 * m.a0_nm)) {
    throw std::invalid_argument(
        "delta_e_im: NumericFull requires d >= 5 a0");
  }
  const GaussHermiteRule rule = gauss_hermite_rule(gh_order);
  const double scale = std::sqrt(2.0) * m.a0_nm;
  const double norm = 1.0 / std::sqrt(kPi);

  const double z0 = g.z0_over_d * g.d_nm;
  std::vector<double> z_disp;
  std::vector<double> z_weight;
  double z_total = 0.0;
  for (int i = 0; i < gh_order; ++i) {
    const double zd = scale * rule.nodes[i];
    if (z0 + zd <= 0.0 || z0 + zd >= g.d_nm) {
      continue;
    }
    z_disp.push_back(zd);
    z_weight.push_back(norm * rule.weights[i]);
    z_total += norm * rule.weights[i];
  }
  for (double& w : z_weight) {
    w /= z_total;
  }

  double acc = 0.0;
  for (int ix = 0; ix < gh_order; ++ix) {
    const double wx = norm * rule.weights[ix];
    const double xd = scale * rule.nodes[ix];
    for (int iy = 0; iy < gh_order; ++iy) {
      const double wy = norm * rule.weights[iy];
      const double yd = scale * rule.nodes[iy];
      for (std::size_t iz = 0; iz < z_disp.size(); ++iz) {
        const DipoleDisplacement r{xd, yd, z_disp[iz]};
        acc += wx * wy * z_weight[iz] * v_im_full(g, r, m);
      }
    }
  }
  return acc;
}

}  // namespace vacshift
