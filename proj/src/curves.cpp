#include <cmath>
#include <string>

#include "sle/errors.hpp"
#include "sle/spectrum.hpp"

namespace sle {

namespace {

double sq(double x) { return x * x; }

// (4+k)^2 / 8k, also the apex abscissa of both parabolas.
double apex(double k) { return sq(4.0 + k) / (8.0 * k); }

PQ red(double k, double g) {
  double p = -0.5 * k * g * g + (2.0 + 0.5 * k) * g;
  return {p, p + g - 0.5 * k * g * g};
}

PQ green(double k, double g) {
  double p = apex(k) - 0.5 * k * g * g;
  return {p, apex(k) + g - k * g * g};
}

PQ quartic(double k, double g) {
  double p = k / 16.0 + (1.0 + 0.25 * k) * g - 0.5 * k * g * g - std::sqrt(quartic_delta(k, g)) / 8.0;
  return {p, p + g - 0.5 * k * g * g};
}

void check_kappa(double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("kappa must be > 0");
}

}  // namespace

double delta0_abscissa(double kappa) { return apex(kappa); }

double quartic_delta(double k, double g) {
  return 4.0 * k * k * g * g - 2.0 * k * (4.0 + k) * g + sq(8.0 + k) / 4.0 + 4.0 * k;
}

SpecialPoints special_points(double k) {
  check_kappa(k);
  SpecialPoints s;
  s.p0 = 3.0 * sq(4.0 + k) / (32.0 * k);
  s.p0prime = -1.0 - 3.0 * k / 8.0;
  s.p0dblprime = -sq(4.0 + k) * (8.0 + k) / 128.0;
  double r = std::sqrt(2.0 * sq(4.0 + k) + 4.0);
  s.p_star = (sq(4.0 + k) - 4.0 - 2.0 * r) / (16.0 * k);
  double q0 = (4.0 + k) * (8.0 + k) / (16.0 * k);
  s.P0 = {s.p0, q0};
  s.P1 = {(8.0 + k) * (8.0 + 3.0 * k) / (32.0 * k), q0};
  s.Q0 = {s.p0prime, -2.0 - 7.0 * k / 8.0};
  s.Q1 = {s.p0prime, -0.5 * (3.0 + k)};
  s.T0 = red(k, 2.0 / k + 0.5);
  s.T1 = red(k, 1.0 / k);
  s.T2 = green(k, 1.0 / k);
  return s;
}

std::string_view curve_name(Curve c) {
  switch (c) {
    case Curve::redParabola: return "redParabola";
    case Curve::greenParabola: return "greenParabola";
    case Curve::blueQuartic: return "blueQuartic";
    case Curve::D0: return "D0";
    case Curve::D1: return "D1";
    case Curve::D0prime: return "D0prime";
    case Curve::Delta0: return "Delta0";
    case Curve::Delta1: return "Delta1";
  }
  return "";
}

const std::vector<Curve>& all_curves() {
  static const std::vector<Curve> v{Curve::redParabola, Curve::greenParabola, Curve::blueQuartic,
                                    Curve::D0,          Curve::D1,            Curve::D0prime,
                                    Curve::Delta0,      Curve::Delta1};
  return v;
}

Curve curve_from_name(std::string_view name) {
  for (Curve c : all_curves()) {
    if (curve_name(c) == name) return c;
  }
  throw UsageError("unknown curve id: " + std::string(name));
}

PQ curve_eval(Curve c, double k, double t) {
  check_kappa(k);
  switch (c) {
    case Curve::redParabola: return red(k, t);
    case Curve::greenParabola: return green(k, t);
    case Curve::blueQuartic: return quartic(k, t);
    case Curve::D0: return {3.0 * sq(4.0 + k) / (32.0 * k), t};
    case Curve::D1: return {t, t + (16.0 - k * k) / (32.0 * k)};
    case Curve::D0prime: return {-1.0 - 3.0 * k / 8.0, t};
    case Curve::Delta0: return {apex(k), t};
    case Curve::Delta1: return {t, t + 1.0 / (2.0 * k)};
  }
  throw UsageError("unknown curve id");
}

double cartesian_residual(Curve c, double k, double p, double q) {
  check_kappa(k);
  auto rel = [](double lhs, double rhs) { return (lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0); };
  switch (c) {
    case Curve::redParabola: {
      double u = (2.0 * p - q) / (2.0 + k);
      double a = 2.0 * k * u * u, b = (4.0 + k) * u;
      return (a - b + p) / (std::abs(a) + std::abs(b) + std::abs(p) + 1.0);
    }
    case Curve::greenParabola: {
      double s = 2.0 * p - q;
      double a = 0.5 * k * s * s, b = sq(4.0 + k) * s / 8.0, d = sq(4.0 + k) * (8.0 + k) / 128.0;
      return (a - b + p + d) / (std::abs(a) + std::abs(b) + std::abs(p) + std::abs(d) + 1.0);
    }
    case Curve::blueQuartic: {
      double s = 2.0 * p - q;
      double cc = sq(8.0 + k) / 64.0 + k / 4.0;
      double lhs = (sq(s - k / 16.0) - cc / 4.0) * (s - 1.0 - k / 8.0) * s;
      double rhs = 0.5 * k * (p - q) * sq(s - 0.25 - k / 8.0);
      return rel(lhs, rhs);
    }
    case Curve::D0: return rel(p, 3.0 * sq(4.0 + k) / (32.0 * k));
    case Curve::D1: return rel(q - p, (16.0 - k * k) / (32.0 * k));
    case Curve::D0prime: return rel(p, -1.0 - 3.0 * k / 8.0);
    case Curve::Delta0: return rel(p, apex(k));
    case Curve::Delta1: return rel(q - p, 1.0 / (2.0 * k));
  }
  throw UsageError("unknown curve id");
}

}  // namespace sle
