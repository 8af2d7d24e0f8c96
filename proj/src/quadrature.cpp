#include "vacshift/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace vacshift {

namespace {

// 15-point Kronrod abscissae/weights with the embedded 7-point Gauss rule.
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
constexpr double kWg[4] = {0.129484966168870, 0.279705391489277,
                           0.381830050505119, 0.417959183673469};

struct Panel {
  double a, b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kXgk[i];
    const double fsum = f(center - dx) + f(center + dx);
    kronrod += kWgk[i] * fsum;
    if (i % 2 == 1) {
      gauss += kWg[i / 2] * fsum;
    }
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = kronrod * half;
  p.error = std::abs((kronrod - gauss) * half);
  return p;
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a,
                     double b, double rel_tol) {
  constexpr int kMaxPanels = 4000;
  constexpr double kAbsFloor = 1e-300;

  std::priority_queue<Panel> panels;
  panels.push(gk15(f, a, b));
  double total = panels.top().value;
  double total_err = panels.top().error;
  int n_panels = 1;

  while (total_err > std::max(rel_tol * std::abs(total), kAbsFloor) &&
         n_panels < kMaxPanels) {
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {
      // Interval exhausted at machine precision; give up on refining it.
      panels.push(worst);
      break;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
    ++n_panels;
  }

  if (total_err > std::max(rel_tol * std::abs(total), 1e-14) &&
      total_err > 1e-13) {
    throw ToleranceError("integrate: tolerance not met", total_err);
  }
  return {total, total_err};
}

QuadResult integrate_semi_infinite(const std::function<double(double)>& f,
                                   double a, double rel_tol) {
  auto mapped = [&f, a](double t) {
    const double one_minus = 1.0 - t;
    const double x = a + t / one_minus;
    if (!std::isfinite(x)) {
      return 0.0;
    }
    const double fx = f(x);
    return fx / (one_minus * one_minus);
  };
  return integrate(mapped, 0.0, 1.0, rel_tol);
}

}  // namespace vacshift
