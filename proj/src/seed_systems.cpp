#include <array>
#include <cmath>
#include <functional>

#include "sle/residual.hpp"

namespace sle {

namespace {

using V2 = std::array<double, 2>;

double dist(PQ a, PQ b) { return std::hypot(a.p - b.p, a.q - b.q); }

// Newton's method with a central-difference Jacobian.
V2 newton2(const std::function<V2(V2)>& f, V2 x) {
  for (int it = 0; it < 60; ++it) {
    V2 r = f(x);
    if (std::hypot(r[0], r[1]) < 1e-15) break;
    double J[2][2];
    for (int j = 0; j < 2; ++j) {
      double h = 1e-7 * std::max(1.0, std::abs(x[j]));
      V2 xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      V2 fp = f(xp), fm = f(xm);
      J[0][j] = (fp[0] - fm[0]) / (2 * h);
      J[1][j] = (fp[1] - fm[1]) / (2 * h);
    }
    double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (det == 0.0) break;
    double dx0 = (J[1][1] * r[0] - J[0][1] * r[1]) / det;
    double dx1 = (-J[1][0] * r[0] + J[0][0] * r[1]) / det;
    x[0] -= dx0;
    x[1] -= dx1;
    if (std::hypot(dx0, dx1) < 1e-16 * (1.0 + std::hypot(x[0], x[1]))) break;
  }
  return x;
}

// Root of a monotone function on [lo, hi] with f(lo), f(hi) of opposite sign.
double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  if (flo == 0.0) return lo;
  if (f(hi) == 0.0) return hi;
  for (int it = 0; it < 300; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    double fm = f(mid);
    if ((fm < 0) == (flo < 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Maximizer of a unimodal function on [a, b]: bisection on the sign of a
// central difference, which is exact for quadratics.
double argmax(const std::function<double(double)>& f, double a, double b) {
  auto slope = [&](double x) {
    double h = 1e-3 * std::max(1.0, std::abs(x));
    return f(x + h) - f(x - h);
  };
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (slope(mid) > 0.0) a = mid;
    else b = mid;
  }
  return 0.5 * (a + b);
}

}  // namespace

SeedReport seed_systems(double k) {
  SeedReport rep;
  rep.kappa = k;
  const double dual = 2.0 / k + 0.5;

  // red: A(p, q, g) = 0 and C(p, g) = 0
  for (int i = 0; i <= 50; ++i) {
    double g = -2.0 + 5.0 * i / 50.0;
    V2 s = newton2(
        [&](V2 v) {
          CoeffTriple t = abc_check(v[0], v[1], g, k);
          return V2{t.A, t.C};
        },
        {0.0, 0.0});
    rep.red_dev = std::max(rep.red_dev, dist({s[0], s[1]}, curve_eval(Curve::redParabola, k, g)));
  }

  // green: A(p, q, g') = 0 and C(p, g'') = 0 with g' + g'' = 2/k + 1/2
  for (int i = 0; i <= 50; ++i) {
    double g1 = -2.0 + 5.0 * i / 50.0;
    V2 s = newton2(
        [&](V2 v) {
          return V2{abc_check(v[0], v[1], g1, k).A, abc_check(v[0], v[1], dual - g1, k).C};
        },
        {0.0, 0.0});
    rep.green_dev =
        std::max(rep.green_dev, dist({s[0], s[1]}, curve_eval(Curve::greenParabola, k, g1)));
  }

  // quartic: beta(p, g) = beta(p, g0) - 2 g0 - 1 with C(p, g0) = 0 and
  // A(p, q, g) = 0; the first condition does not involve p.
  const double g_start = 1.0 + 2.0 / k;
  for (int i = 0; i <= 100; ++i) {
    double g = g_start + 10.0 * i / 100.0;
    auto cond = [&](double g0) {
      return spectrum_function(0.0, g, k) - spectrum_function(0.0, g0, k) + 2.0 * g0 + 1.0;
    };
    double vertex = (8.0 + k) / (4.0 * k);
    double lo = vertex - 1.0;
    while (cond(lo) * cond(vertex) > 0.0) lo = vertex - 2.0 * (vertex - lo);
    double g0 = bisect(cond, lo, vertex);
    double p = (2.0 + 0.5 * k) * g0 - 0.5 * k * g0 * g0;
    double q = p + g - 0.5 * k * g * g;
    rep.quartic_dev = std::max(rep.quartic_dev, dist({p, q}, curve_eval(Curve::blueQuartic, k, g)));
    double g0_formula = ((8.0 + k) / 2.0 - std::sqrt(quartic_delta(k, g))) / (2.0 * k);
    rep.gamma0_dev = std::max(rep.gamma0_dev, std::abs(g0 - g0_formula));
    if (2.0 * g0 + 1.0 > 1e-12) rep.tip_condition = false;
  }

  // intersections in parameter space
  auto meet = [&](Curve a, Curve b, V2 start) {
    V2 s = newton2(
        [&](V2 v) {
          PQ x = curve_eval(a, k, v[0]), y = curve_eval(b, k, v[1]);
          return V2{x.p - y.p, x.q - y.q};
        },
        start);
    return curve_eval(a, k, s[0]);
  };
  const double e = 0.02;
  rep.P0 = meet(Curve::redParabola, Curve::greenParabola, {1.0 / k + 0.25 + e, 1.0 / k + 0.25 - e});
  rep.P1 = meet(Curve::redParabola, Curve::greenParabola, {2.0 / k + 0.25 - e, -0.25 + e});
  rep.Q1 = meet(Curve::redParabola, Curve::blueQuartic, {-0.5 + e, -0.5 - e});
  rep.Q0 = meet(Curve::greenParabola, Curve::blueQuartic, {g_start - e, g_start + e});

  // tangencies: red to Delta0 (max p), red and green to Delta1 (max q - p)
  auto red = [&](double g) { return curve_eval(Curve::redParabola, k, g); };
  auto green = [&](double g) { return curve_eval(Curve::greenParabola, k, g); };
  rep.T0 = red(argmax([&](double g) { return red(g).p; }, -10.0, 10.0));
  rep.T1 = red(argmax([&](double g) { return red(g).q - red(g).p; }, -10.0, 10.0));
  rep.T2 = green(argmax([&](double g) { return green(g).q - green(g).p; }, -10.0, 10.0));

  SpecialPoints sp = special_points(k);
  for (auto [found, expected] : {std::pair{rep.P0, sp.P0}, std::pair{rep.P1, sp.P1},
                                 std::pair{rep.Q0, sp.Q0}, std::pair{rep.Q1, sp.Q1},
                                 std::pair{rep.T0, sp.T0}, std::pair{rep.T1, sp.T1},
                                 std::pair{rep.T2, sp.T2}}) {
    rep.special_dev = std::max(rep.special_dev, dist(found, expected));
  }

  // green parabola on q = 0 (smaller root) and on q = 2p
  auto green_raw = [&](double p, double q) {
    double s = 2.0 * p - q;
    return 0.5 * k * s * s - (4.0 + k) * (4.0 + k) * s / 8.0 + p +
           (4.0 + k) * (4.0 + k) * (8.0 + k) / 128.0;
  };
  double vq0 = ((4.0 + k) * (4.0 + k) / 4.0 - 1.0) / (4.0 * k);
  double lo = vq0 - 1.0;
  while (green_raw(lo, 0.0) < 0.0) lo = vq0 - 2.0 * (vq0 - lo);
  double p_star = bisect([&](double p) { return green_raw(p, 0.0); }, lo, vq0);
  rep.p_star_dev = std::abs(p_star - sp.p_star);
  double p_dd = bisect([&](double p) { return green_raw(p, 2.0 * p); }, -1e6, 1e6);
  rep.p0dblprime_dev = std::abs(p_dd - sp.p0dblprime);

  rep.delta_min = INFINITY;
  for (int i = 0; i <= 20000; ++i) {
    rep.delta_min = std::min(rep.delta_min, quartic_delta(k, -100.0 + 0.01 * i));
  }

  // red parabola crossed along the full quartic (all real parameters)
  auto red_raw = [&](double g) {
    PQ x = curve_eval(Curve::blueQuartic, k, g);
    double u = (2.0 * x.p - x.q) / (2.0 + k);
    return 2.0 * k * u * u - (4.0 + k) * u + x.p;
  };
  const double step = 1e-3;
  double prev_g = -50.0, prev = red_raw(prev_g);
  for (int i = 1; i <= 100000; ++i) {
    double g = -50.0 + step * i;
    double cur = red_raw(g);
    if (prev != 0.0 && (cur == 0.0 || (cur < 0.0) != (prev < 0.0))) {
      double root = cur == 0.0 ? g : bisect(red_raw, prev_g, g);
      rep.red_quartic_gammas.push_back(root);
      rep.red_quartic_points.push_back(curve_eval(Curve::blueQuartic, k, root));
    }
    prev_g = g;
    prev = cur;
  }
  return rep;
}

}  // namespace sle
