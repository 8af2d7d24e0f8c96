#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "vacshift/constants.hpp"
#include "vacshift/cutoff.hpp"
#include "vacshift/gauss_hermite.hpp"
#include "vacshift/mode_sum.hpp"
#include "vacshift/quadrature.hpp"
#include "vacshift/special.hpp"

using namespace vacshift;

namespace {

// Independent oracle: Psi^(2)(z) = -2 sum_k 1/(z+k)^3 with an integral
// tail bound after K terms.
double polygamma2_series(double z) {
  double sum = 0.0;
  const long kTerms = 4000000;
  for (long k = kTerms - 1; k >= 0; --k) {
    const double t = z + static_cast<double>(k);
    sum += 1.0 / (t * t * t);
  }
  const double edge = z + static_cast<double>(kTerms);
  // Euler-Maclaurin tail: integral + half endpoint.
  sum += 0.5 / (edge * edge) + 0.5 / (edge * edge * edge);
  return -2.0 * sum;
}

}  // namespace

TEST_CASE("polygamma2 against the direct series") {
  CHECK(polygamma2(1.0) == doctest::Approx(-2.404113806319188).epsilon(1e-12));
  CHECK(polygamma2(0.5) ==
        doctest::Approx(-16.828796644234319).epsilon(1e-12));
  for (double x : {0.1, 0.3, 0.7, 1.2, 1.9}) {
    CHECK(polygamma2(x) ==
          doctest::Approx(polygamma2_series(x)).epsilon(1e-11));
  }
  CHECK_THROWS_AS(polygamma2(0.0), std::domain_error);
  CHECK_THROWS_AS(polygamma2(-1.0), std::domain_error);
}

TEST_CASE("polygamma2 recurrence at random points") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(0.05, 1.95);
  for (int i = 0; i < 100; ++i) {
    const double x = dist(rng);
    const double lhs = polygamma2(x + 1.0) - polygamma2(x);
    CHECK(std::abs(lhs - 2.0 / (x * x * x)) <
          1e-10 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("zeta3 value and polygamma identity") {
  CHECK(zeta3() == doctest::Approx(1.202056903159594).epsilon(1e-13));
  CHECK(-polygamma2(1.0) / 2.0 == doctest::Approx(zeta3()).epsilon(1e-13));
  // -(1/4) Psi2(1/2) = (7/2) zeta(3)
  CHECK(-0.25 * polygamma2(0.5) ==
        doctest::Approx(3.5 * zeta3()).epsilon(1e-13));
}

TEST_CASE("cutoff weights") {
  const CutoffSpec lg = CutoffSpec::logistic(10.0);
  CHECK(cutoff_weight(lg, 0.0) ==
        doctest::Approx(1.0 - 1.0 / (1.0 + std::exp(10.0))).epsilon(1e-14));
  CHECK(cutoff_weight(lg, 10.0) == doctest::Approx(0.5).epsilon(1e-14));

  const CutoffSpec sh = CutoffSpec::sharp(5.0);
  CHECK(cutoff_weight(sh, 5.0) == 1.0);
  CHECK(cutoff_weight(sh, 5.0001) == 0.0);

  const CutoffSpec gs = CutoffSpec::gaussian_tail(10.0);
  CHECK(cutoff_weight(gs, 0.0) == 1.0);
  CHECK(cutoff_weight(gs, 10.0) == doctest::Approx(std::exp(-1.0)));

  // non-increasing, bounded in [0,1]
  for (const CutoffSpec& c : {lg, sh, gs}) {
    double prev = cutoff_weight(c, 0.0);
    CHECK(prev <= 1.0);
    for (double nu = 0.5; nu <= 40.0; nu += 0.5) {
      const double w = cutoff_weight(c, nu);
      CHECK(w <= prev + 1e-15);
      CHECK(w >= 0.0);
      prev = w;
    }
  }
}

TEST_CASE("cutoff tail integrals match direct quadrature") {
  CHECK(cutoff_tail_integral(CutoffSpec::sharp(10.0), 3.0) ==
        doctest::Approx(7.0).epsilon(1e-14));
  CHECK(cutoff_tail_integral(CutoffSpec::sharp(10.0), 12.0) == 0.0);
  for (const CutoffSpec& c :
       {CutoffSpec::logistic(8.0), CutoffSpec::gaussian_tail(8.0)}) {
    for (double n : {0.0, 2.0, 7.5, 12.0}) {
      const double direct =
          integrate_semi_infinite(
              [&](double nu) { return cutoff_weight(c, nu); }, n)
              .value;
      CHECK(cutoff_tail_integral(c, n) ==
            doctest::Approx(direct).epsilon(1e-9));
    }
  }
}

TEST_CASE("sum_minus_integral closed-form cases") {
  SummandSpec zero;
  zero.f = [](double) { return 0.0; };
  CHECK(sum_minus_integral(zero, CutoffSpec::none()) == 0.0);

  SummandSpec expo;
  expo.f = [](double n) { return std::exp(-n); };
  const double expected = 0.5 + 1.0 / (std::exp(1.0) - 1.0) - 1.0;
  CHECK(sum_minus_integral(expo, CutoffSpec::none()) ==
        doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("cutoff-family independence of the 1/12 constant") {
  for (double lam : {5.0, 7.0, 10.0, 15.0, 20.0}) {
    for (const CutoffSpec& c :
         {CutoffSpec::logistic(lam), CutoffSpec::gaussian_tail(lam)}) {
      SummandSpec s;
      s.f = [&c](double n) { return cutoff_tail_integral(c, n); };
      const double v = sum_minus_integral(s, CutoffSpec::none());
      CHECK(std::abs(v - 1.0 / 12.0) < 1e-3);
    }
  }
}

TEST_CASE("adaptive quadrature basics") {
  CHECK(integrate([](double x) { return std::exp(-x); }, 0.0, 40.0).value ==
        doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate_semi_infinite([](double x) { return std::exp(-x); }, 0.0)
            .value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(integrate_semi_infinite([](double x) { return 1.0 / (x * x); }, 1.0)
            .value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite quadrature reproduces 1/n tails") {
  for (int n = 1; n <= 50; ++n) {
    const double v =
        integrate_semi_infinite([](double nu) { return 1.0 / (nu * nu); },
                                static_cast<double>(n))
            .value;
    CHECK(std::abs(v - 1.0 / n) < 1e-10);
  }
}

TEST_CASE("semi-infinite quadrature against a polygamma closed form") {
  // integral_0^inf u^2/sinh(pi u) du = 7 zeta(3)/(2 pi^3)
  const double v =
      integrate_semi_infinite(
          [](double u) {
            if (u < 1e-12) return u / kPi;
            return u * u / std::sinh(kPi * u);
          },
          0.0)
          .value;
  CHECK(v == doctest::Approx(3.5 * zeta3() / (kPi * kPi * kPi))
                 .epsilon(1e-10));
}

TEST_CASE("Gauss-Hermite moments at order 20") {
  const double sigma = 0.7;
  auto mom = [&](int p) {
    return gauss_hermite_average(
        [p](double x) { return std::pow(x, p); }, sigma, 20);
  };
  CHECK(std::abs(mom(0) - 1.0) < 1e-12);
  CHECK(std::abs(mom(2) - sigma * sigma) < 1e-12);
  CHECK(std::abs(mom(4) - 3.0 * std::pow(sigma, 4)) < 1e-12);
  CHECK(std::abs(mom(6) - 15.0 * std::pow(sigma, 6)) < 1e-12);
  CHECK(std::abs(mom(1)) < 1e-14);
  CHECK(std::abs(mom(3)) < 1e-14);
}

TEST_CASE("3-D Gauss-Hermite average") {
  const double sigma = 0.35;
  CHECK(gauss_hermite_average3([](double, double, double) { return 1.0; },
                               sigma) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(gauss_hermite_average3(
            [](double x, double, double) { return x * x; }, sigma) ==
        doctest::Approx(sigma * sigma).epsilon(1e-12));
  CHECK(gauss_hermite_average3(
            [](double x, double y, double z) { return x * x + y * y + z * z; },
            sigma) == doctest::Approx(3.0 * sigma * sigma).epsilon(1e-12));
  CHECK(gauss_hermite_average3(
            [](double x, double y, double) { return x * y; }, sigma) ==
        doctest::Approx(0.0).epsilon(1e-14));
}
