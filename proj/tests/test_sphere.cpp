#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "vacshift/constants.hpp"
#include "vacshift/dipole.hpp"
#include "vacshift/sphere.hpp"

using namespace vacshift;

namespace {
const DipoleModel kModel(1.0, 0.1, 1.0);
}

TEST_CASE("setup validation") {
  CHECK_THROWS_AS(SphereSetup(0.0, 0.5, 5.0, kModel), std::invalid_argument);
  CHECK_THROWS_AS(SphereSetup(5.0, -0.5, 5.0, kModel), std::invalid_argument);
  CHECK_THROWS_AS(SphereSetup(5.0, 0.5, 0.0, kModel), std::invalid_argument);
  CHECK_THROWS_AS(SphereSetup(5.0, 0.5, 5.0, kModel, 0),
                  std::invalid_argument);
  CHECK_NOTHROW(SphereSetup(5.0, 0.5, 5.0, kModel));
  CHECK_NOTHROW(SphereSetup(5.0, 0.5, 5.0, kModel, 1));
}

TEST_CASE("plasmon mode frequencies") {
  const double wp = 9.0;
  CHECK(omega_ell(1, wp) == doctest::Approx(wp / std::sqrt(3.0))
                                .epsilon(1e-14));
  CHECK(std::abs(omega_ell(1000000, wp) / (wp / std::sqrt(2.0)) - 1.0) <
        1e-6);
  double prev = 0.0;
  for (long l = 1; l <= 200; ++l) {
    const double w = omega_ell(l, wp);
    CHECK(w > prev);
    CHECK(w < wp / std::sqrt(2.0));
    prev = w;
  }
  CHECK_THROWS_AS(omega_ell(0, wp), std::domain_error);
}

TEST_CASE("coupling constants") {
  const SphereSetup s(5.0, 0.5, 5.0, kModel);
  // the two printed forms of g_ell are algebraically identical
  const double t = s.r_nm / (s.r_nm + s.z0_nm);
  const double gp = s.homega_p_ev * eta_p(s);
  for (long l = 1; l <= 50; ++l) {
    const double sm_form = gp * (l + 1) / 2.0 *
                           std::pow(l / (2.0 * l + 1.0), 0.25) *
                           std::pow(t, l + 2);
    const double main_form =
        gp * 0.5 *
        std::pow(l * std::pow(l + 1.0, 4) / (2.0 * l + 1.0), 0.25) *
        std::pow(t, l + 2);
    CHECK(g_ell(l, s) == doctest::Approx(sm_form).epsilon(1e-13));
    CHECK(sm_form == doctest::Approx(main_form).epsilon(1e-13));
  }
  // ell = 1 explicit
  CHECK(g_ell(1, s) ==
        doctest::Approx(gp * std::pow(1.0 / 3.0, 0.25) * t * t * t)
            .epsilon(1e-13));
  // far dipole decouples
  const SphereSetup far(5.0, 5000.0, 5.0, kModel);
  CHECK(g_ell(3, far) < 1e-12 * g_ell(3, s));
}

TEST_CASE("electrostatic image function") {
  CHECK(f_im_sp(0.01) == doctest::Approx(0.125).epsilon(0.02));
  // single-term truncation
  const double x = 0.3;
  CHECK(f_im_sp(x, 1) ==
        doctest::Approx(x * x * x / 2.0 * 4.0 *
                        std::pow(1.0 / (1.0 + x), 6))
            .epsilon(1e-14));
  // closed form vs brute-force partial sum
  double sum = 0.0;
  const double xr = 0.1;
  for (long l = 10000; l >= 1; --l) {
    sum += (l + 1.0) * (l + 1.0) * std::pow(1.0 / (1.0 + xr), 2 * l + 4);
  }
  sum *= xr * xr * xr / 2.0;
  CHECK(f_im_sp(xr) == doctest::Approx(sum).epsilon(1e-10));
  // truncated matches brute force too
  double sum5 = 0.0;
  for (long l = 1; l <= 5; ++l) {
    sum5 += (l + 1.0) * (l + 1.0) * std::pow(1.0 / (1.0 + xr), 2 * l + 4);
  }
  sum5 *= xr * xr * xr / 2.0;
  CHECK(f_im_sp(xr, 5) == doctest::Approx(sum5).epsilon(1e-13));
}

TEST_CASE("electrostatic shift on the sphere") {
  const SphereSetup s(50.0, 0.5, 5.0, kModel);  // z0/R = 0.01
  const double e = delta_e_im_sphere(s);
  CHECK(e < 0.0);
  // van der Waals limit -(a0/(2 z0))^3 / 2 ... concretely via F ~ 1/8
  const double vdw = -std::pow(kModel.a0_nm / s.z0_nm, 3) / 8.0;
  CHECK(e == doctest::Approx(vdw).epsilon(0.02));
  // halving z0 multiplies by ~8 in the near-field regime
  const SphereSetup s2(50.0, 0.25, 5.0, kModel);
  CHECK(delta_e_im_sphere(s2) / e == doctest::Approx(8.0).epsilon(0.03));
}

TEST_CASE("F_P limits and convergence") {
  CHECK(f_p(1e-12, 0.01) ==
        doctest::Approx(kPi / std::sqrt(32.0)).epsilon(0.02));
  // monotone in ell_max, converged by L*(y)
  const double full = f_p(1.0, 0.5);
  double prev = 0.0;
  for (long L = 1; L <= 60; ++L) {
    const double v = f_p(1.0, 0.5, L);
    CHECK(v >= prev);
    CHECK(v <= full + 1e-12);
    prev = v;
  }
  CHECK(std::abs(f_p(1.0, 0.5, 60) - full) < 1e-6);
  // smaller gap converges slower
  const double near10 = std::abs(f_p(1.0, 0.1, 10) - f_p(1.0, 0.1));
  const double far10 = std::abs(f_p(1.0, 0.5, 10) - f_p(1.0, 0.5));
  CHECK(near10 > far10);
}

TEST_CASE("effective impedance headline numbers") {
  CHECK(z_eff_over_zvac(0.5, 1.0) == doctest::Approx(125.622).epsilon(1e-4));
  CHECK(z_eff_over_zvac(0.5, 10.0) == doctest::Approx(12.5622).epsilon(1e-4));
  CHECK(z_eff_over_zvac(0.5, 1.0) > 11.5);
  CHECK(z_eff_over_zvac(0.5, 10.0) < 130.0);
}

TEST_CASE("factorized plasmon shift equals the direct mode sum") {
  std::mt19937 rng(4242);
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double r = 1.0 + 49.0 * dist(rng);
    const double z0 = r * (0.01 + 0.99 * dist(rng));
    const double wp = 0.5 + 9.5 * dist(rng);
    const double w0 = wp * (0.05 + 2.0 * dist(rng));
    const DipoleModel m(0.5 + dist(rng), 0.02 + 0.1 * dist(rng), w0);
    const SphereSetup s(r, z0, wp, m);
    const double fac = delta_e_p(s);
    const double dir = delta_e_p_direct(s);
    CHECK(fac == doctest::Approx(dir).epsilon(1e-10));
    CHECK(fac > 0.0);
  }
}

TEST_CASE("quadratic-coupling resummation identity") {
  // sum_{ell<=L} g_ell^2/omega_ell reproduces the truncated image
  // function: the modes beyond L are exactly the electrostatic remainder
  const SphereSetup s(8.0, 1.3, 6.0, kModel);
  const double x = s.z0_nm / s.r_nm;
  for (long L : {1L, 3L, 10L, 40L}) {
    double acc = 0.0;
    for (long l = 1; l <= L; ++l) {
      const double g = g_ell(l, s);
      acc += g * g / omega_ell(l, s.homega_p_ev);
    }
    const double lhs = acc / coulomb_scale(kModel);
    const double rhs =
        std::pow(kModel.a0_nm / s.z0_nm, 3) * f_im_sp(x, L);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
  }
}

TEST_CASE("total sphere shift is negative everywhere") {
  const double r = 5.0;
  const double wp = 5.0;
  for (int i = 0; i < 100; ++i) {
    const double w0 = wp * 0.1 * std::pow(100.0, i / 99.0);
    for (int j = 0; j < 100; ++j) {
      const double z0 = r * 0.01 * std::pow(100.0, j / 99.0);
      const DipoleModel m(1.0, 0.05, w0);
      const SphereSetup s(r, z0, wp, m);
      const ShiftBreakdown b = sphere_total(s);
      CHECK(b.total < 0.0);
      CHECK(b.e_a == 0.0);
      CHECK(b.total ==
            doctest::Approx(b.e_im + b.e_cav).epsilon(1e-12));
    }
  }
}

TEST_CASE("far-away dipole decouples") {
  const SphereSetup far(5.0, 5e4, 5.0, kModel);
  CHECK(std::abs(delta_e_im_sphere(far)) < 1e-12);
  CHECK(std::abs(delta_e_p(far)) < 1e-12);
}
