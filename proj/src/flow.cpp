#include <algorithm>
#include <cmath>
#include <string>

#include "sle/errors.hpp"
#include "sle/loewner.hpp"

namespace sle {

namespace {

// Right-hand side of the reverse flow for (w, logderiv, logratio) at
// driving point lambda = (cr, ci). The log drifts depend on w only.
struct Rhs {
  double wr, wi, dr, di, lr, li;
};

inline Rhs rhs(double wr, double wi, double cr, double ci) {
  double er = wr - cr, ei = wi - ci;  // w - lambda
  double sr = wr + cr, si = wi + ci;  // w + lambda
  double inv = 1.0 / (er * er + ei * ei);
  double ur = er * inv, ui = -ei * inv;  // 1/(w - lambda)
  double rr = sr * ur - si * ui, ri = sr * ui + si * ur;
  double u2r = ur * ur - ui * ui, u2i = 2.0 * ur * ui;
  double mr = cr * wr - ci * wi, mi = cr * wi + ci * wr;  // lambda w
  double tr = mr * u2r - mi * u2i, ti = mr * u2i + mi * u2r;
  return {wr * rr - wi * ri, wr * ri + wi * rr, rr - 2.0 * tr, ri - 2.0 * ti, rr, ri};
}

struct Point {
  double wr, wi, dr, di, lr, li;
};

// Driving point at the start, middle and end of a step.
struct Lambdas {
  double c0, s0, cm, sm, c1, s1;
};

inline Lambdas lambdas(double a, double b) {
  double am = 0.5 * (a + b);
  return {std::cos(a), std::sin(a), std::cos(am), std::sin(am), std::cos(b), std::sin(b)};
}

// One classical RK4 step of length h; theta linear over the step.
inline Point rk4(const Point& p, double h, const Lambdas& lam) {
  const auto& [c0, s0, cm, sm, c1, s1] = lam;
  Rhs k1 = rhs(p.wr, p.wi, c0, s0);
  Rhs k2 = rhs(p.wr + 0.5 * h * k1.wr, p.wi + 0.5 * h * k1.wi, cm, sm);
  Rhs k3 = rhs(p.wr + 0.5 * h * k2.wr, p.wi + 0.5 * h * k2.wi, cm, sm);
  Rhs k4 = rhs(p.wr + h * k3.wr, p.wi + h * k3.wi, c1, s1);
  double f = h / 6.0;
  return {p.wr + f * (k1.wr + 2.0 * k2.wr + 2.0 * k3.wr + k4.wr),
          p.wi + f * (k1.wi + 2.0 * k2.wi + 2.0 * k3.wi + k4.wi),
          p.dr + f * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr),
          p.di + f * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di),
          p.lr + f * (k1.lr + 2.0 * k2.lr + 2.0 * k3.lr + k4.lr),
          p.li + f * (k1.li + 2.0 * k2.li + 2.0 * k3.li + k4.li)};
}

inline double abs2(double x, double y) { return x * x + y * y; }

inline bool acceptable(const Point& before, const Point& after) {
  double n0 = abs2(before.wr, before.wi), n1 = abs2(after.wr, after.wi);
  return std::isfinite(n1) && std::isfinite(after.dr) && std::isfinite(after.di) &&
         std::isfinite(after.lr) && std::isfinite(after.li) && n1 <= n0;
}

constexpr int kMaxHalvings = 60;
constexpr long kMaxSubsteps = 10'000'000;
constexpr double kMinGap = 1e-12;

// Sub-cycled advance over [t0, t0 + h] for a point near the driving
// point or whose plain step was rejected.
Point advance_guarded(Point p, double t0, double h, double a, double b, double delta) {
  double s = 0.0;
  long substeps = 0;
  while (s < h) {
    double theta = a + (b - a) * (s / h);
    double gap = std::sqrt(abs2(p.wr - std::cos(theta), p.wi - std::sin(theta)));
    if (!(gap >= kMinGap)) {
      throw SingularityError("flow reached the driving point", t0 + s);
    }
    double ratio = gap / delta;
    double step = h * std::min(1.0, ratio * ratio);
    step = std::min(step, h - s);
    int halvings = 0;
    for (;;) {
      double s1 = s + step;
      if (h - s1 <= 1e-14 * h) s1 = h;
      double theta1 = a + (b - a) * (s1 / h);
      Point q = rk4(p, s1 - s, lambdas(theta, theta1));
      if (acceptable(p, q)) {
        p = q;
        s = s1;
        break;
      }
      step *= 0.5;
      if (++halvings > kMaxHalvings) {
        throw SingularityError("step rejected after repeated halving", t0 + s);
      }
    }
    if (++substeps > kMaxSubsteps) {
      throw SingularityError("too many sub-steps near the driving point", t0 + s);
    }
  }
  return p;
}

}  // namespace

std::vector<FlowState> evolve(const DrivingPath& path, const SimConfig& cfg,
                              std::span<const cplx> points) {
  cfg.validate();
  if (path.times.size() < 2 || path.theta.size() != path.times.size()) {
    throw UsageError("driving path must have at least one step and matching theta");
  }
  if (path.horizon() < cfg.horizon * (1.0 - 1e-12)) {
    throw UsageError("driving path horizon is shorter than the flow horizon");
  }
  const std::size_t n = points.size();
  for (const cplx& z : points) {
    if (!(std::abs(z) <= cfg.r_max)) {
      throw DomainError("point outside |z| <= r_max: (" + std::to_string(z.real()) + ", " +
                        std::to_string(z.imag()) + ")");
    }
  }

  // structure of arrays so the plain RK4 sweep vectorizes
  std::vector<double> buf(12 * n);
  double* c[6];
  double* x[6];
  for (int i = 0; i < 6; ++i) {
    c[i] = buf.data() + i * n;
    x[i] = buf.data() + (6 + i) * n;
  }
  for (std::size_t j = 0; j < n; ++j) {
    c[0][j] = points[j].real();
    c[1][j] = points[j].imag();
    c[2][j] = c[3][j] = c[4][j] = c[5][j] = 0.0;
  }
  auto load = [](double* const* a, std::size_t j) {
    return Point{a[0][j], a[1][j], a[2][j], a[3][j], a[4][j], a[5][j]};
  };
  auto store = [](double* const* a, std::size_t j, const Point& p) {
    a[0][j] = p.wr;
    a[1][j] = p.wi;
    a[2][j] = p.dr;
    a[3][j] = p.di;
    a[4][j] = p.lr;
    a[5][j] = p.li;
  };

  const double T = cfg.horizon;
  const double delta2 = cfg.singular_delta * cfg.singular_delta;
  // lambda at the left end of the step, carried over from the previous one
  double cos_a = std::cos(path.theta[0]), sin_a = std::sin(path.theta[0]);
  for (std::size_t k = 0; k + 1 < path.times.size(); ++k) {
    double t0 = path.times[k];
    if (t0 >= T) break;
    double t1 = path.times[k + 1];
    double a = path.theta[k], b = path.theta[k + 1];
    if (t1 > T) {
      b = a + (b - a) * (T - t0) / (t1 - t0);
      t1 = T;
    }
    double h = t1 - t0;
    if (h <= 0.0) continue;

    const double am = 0.5 * (a + b);
    const Lambdas lam{cos_a, sin_a, std::cos(am), std::sin(am), std::cos(b), std::sin(b)};
    cos_a = lam.c1;
    sin_a = lam.s1;
    {
      double* __restrict c0 = c[0];
      double* __restrict c1 = c[1];
      double* __restrict c2 = c[2];
      double* __restrict c3 = c[3];
      double* __restrict c4 = c[4];
      double* __restrict c5 = c[5];
      double* __restrict x0 = x[0];
      double* __restrict x1 = x[1];
      double* __restrict x2 = x[2];
      double* __restrict x3 = x[3];
      double* __restrict x4 = x[4];
      double* __restrict x5 = x[5];
      const double l0r = lam.c0, l0i = lam.s0, lmr = lam.cm, lmi = lam.sm, l1r = lam.c1,
                   l1i = lam.s1;
      const double hh = 0.5 * h, f = h / 6.0;
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) {
        const double wr = c0[j], wi = c1[j];
        Rhs k1 = rhs(wr, wi, l0r, l0i);
        Rhs k2 = rhs(wr + hh * k1.wr, wi + hh * k1.wi, lmr, lmi);
        Rhs k3 = rhs(wr + hh * k2.wr, wi + hh * k2.wi, lmr, lmi);
        Rhs k4 = rhs(wr + h * k3.wr, wi + h * k3.wi, l1r, l1i);
        x0[j] = wr + f * (k1.wr + 2.0 * k2.wr + 2.0 * k3.wr + k4.wr);
        x1[j] = wi + f * (k1.wi + 2.0 * k2.wi + 2.0 * k3.wi + k4.wi);
        x2[j] = c2[j] + f * (k1.dr + 2.0 * k2.dr + 2.0 * k3.dr + k4.dr);
        x3[j] = c3[j] + f * (k1.di + 2.0 * k2.di + 2.0 * k3.di + k4.di);
        x4[j] = c4[j] + f * (k1.lr + 2.0 * k2.lr + 2.0 * k3.lr + k4.lr);
        x5[j] = c5[j] + f * (k1.li + 2.0 * k2.li + 2.0 * k3.li + k4.li);
      }
    }

    for (std::size_t j = 0; j < n; ++j) {
      Point p = load(c, j);
      double g = std::min(abs2(p.wr - lam.c0, p.wi - lam.s0), abs2(p.wr - lam.c1, p.wi - lam.s1));
      if (g < delta2 || !acceptable(p, load(x, j))) {
        store(x, j, advance_guarded(p, t0, h, a, b, cfg.singular_delta));
      }
    }
    for (int i = 0; i < 6; ++i) std::swap(c[i], x[i]);
  }

  std::vector<FlowState> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j] = {points[j], {c[0][j], c[1][j]}, {c[2][j], c[3][j]}, {c[4][j], c[5][j]}};
  }
  return out;
}

cplx WholePlaneSample::logf(std::size_t i) const {
  return log_f_over_z.at(i) + std::log(points.at(i));
}

WholePlaneSample whole_plane_sample(const SimConfig& cfg, std::span<const cplx> points) {
  DrivingPath path = sample_driver(cfg);
  std::vector<FlowState> states = evolve(path, cfg, points);
  WholePlaneSample s;
  s.seed = cfg.seed;
  s.stream_id = cfg.stream_id;
  s.kappa = cfg.kappa;
  s.horizon = cfg.horizon;
  s.dt = cfg.dt;
  s.points.assign(points.begin(), points.end());
  s.log_f_over_z.resize(points.size());
  s.logfp.resize(points.size());
  for (std::size_t j = 0; j < points.size(); ++j) {
    s.log_f_over_z[j] = cfg.horizon + states[j].logratio;
    s.logfp[j] = cfg.horizon + states[j].logderiv;
  }
  return s;
}

}  // namespace sle
