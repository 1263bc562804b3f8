#include "sle/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "sle/errors.hpp"

namespace sle {

namespace {

double sq(double x) { return x * x; }

double delta0_root(double p, double k) {
  double d = sq(4.0 + k) - 8.0 * k * p;
  if (d < 0.0) {
    throw DomainError("p = " + std::to_string(p) + " violates Delta0: p <= (4+k)^2/8k");
  }
  return std::sqrt(d);
}

constexpr double kBoundaryTol = 1e-10;

}  // namespace

double beta_tip(double p, double k) {
  return -p - 1.0 + 0.25 * (4.0 + k - delta0_root(p, k));
}

double beta_0(double p, double k) {
  return -p + (4.0 + k) / (4.0 * k) * (4.0 + k - delta0_root(p, k));
}

double beta_lin(double p, double k) { return p - sq(4.0 + k) / (16.0 * k); }

double beta_1(double p, double q, double k) {
  double d = 1.0 + 2.0 * k * (p - q);
  if (d < 0.0) {
    throw DomainError("(p, q) violates Delta1: 1 + 2k(p - q) >= 0");
  }
  return 3.0 * p - 2.0 * q - 0.5 - 0.5 * std::sqrt(d);
}

double beta_m(double p, double q, double k, int m) {
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  double d = 1.0 + 2.0 * k / m * (p - q);
  if (d < 0.0) throw DomainError("(p, q) violates the pulled-back Delta1");
  return (1.0 + 2.0 / m) * p - 2.0 / m * q - 0.5 - 0.5 * std::sqrt(d);
}

std::string_view region_name(Region r) {
  switch (r) {
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
  }
  return "?";
}

PhaseDiagram::PhaseDiagram(double kappa) : kappa_(kappa), sp_(special_points(kappa)) {
  // p along the quartic branch must decrease for the bisection below
  const double g0 = 1.0 + 2.0 / kappa;
  double prev = curve_eval(Curve::blueQuartic, kappa, g0).p;
  for (int i = 1; i <= 400; ++i) {
    double p = curve_eval(Curve::blueQuartic, kappa, g0 + 0.05 * i * i).p;
    if (!(p < prev)) throw std::logic_error("quartic branch is not monotone in p");
    prev = p;
  }
}

double PhaseDiagram::quartic_gamma_at(double p) const {
  const double g0 = 1.0 + 2.0 / kappa_;
  if (p > sp_.p0prime) throw DomainError("quartic branch covers p <= p0' only");
  auto pq = [&](double g) { return curve_eval(Curve::blueQuartic, kappa_, g).p; };
  double lo = g0, hi = g0 + 1.0;
  while (pq(hi) > p) {
    double w = hi - lo;
    lo = hi;
    hi = lo + 2.0 * w;
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, hi); ++it) {
    double mid = 0.5 * (lo + hi);
    if (pq(mid) > p) lo = mid;
    else hi = mid;
  }
  return 0.5 * (lo + hi);
}

double PhaseDiagram::green_gamma_at(double p) const {
  double a = delta0_abscissa(kappa_) - p;
  if (a < 0.0) throw DomainError("green parabola does not reach this p");
  return std::sqrt(2.0 * a / kappa_);
}

double PhaseDiagram::boundary_q(double p) const {
  if (p < sp_.p0prime) return curve_eval(Curve::blueQuartic, kappa_, quartic_gamma_at(p)).q;
  if (p <= sp_.p0) return curve_eval(Curve::greenParabola, kappa_, green_gamma_at(p)).q;
  return curve_eval(Curve::D1, kappa_, p).q;
}

SpectrumPoint PhaseDiagram::classify(double p, double q) const {
  SpectrumPoint s;
  s.p = p;
  s.q = q;
  s.kappa = kappa_;
  const double qb = boundary_q(p);
  const double qtol = kBoundaryTol * std::max(1.0, std::abs(qb));
  const double ptol = kBoundaryTol * std::max(1.0, std::abs(p));

  Region upper;
  std::optional<Region> upper_adj;
  if (std::abs(p - sp_.p0prime) <= ptol) {
    upper = Region::I;
    upper_adj = Region::II;
  } else if (std::abs(p - sp_.p0) <= ptol) {
    upper = Region::II;
    upper_adj = Region::III;
  } else if (p < sp_.p0prime) {
    upper = Region::I;
  } else if (p < sp_.p0) {
    upper = Region::II;
  } else {
    upper = Region::III;
  }

  if (q < qb - qtol) {
    s.region = Region::IV;
  } else if (q <= qb + qtol) {
    s.region = upper;
    s.adjacent = Region::IV;
  } else {
    s.region = upper;
    s.adjacent = upper_adj;
  }
  switch (s.region) {
    case Region::I: s.beta = beta_tip(p, kappa_); break;
    case Region::II: s.beta = beta_0(p, kappa_); break;
    case Region::III: s.beta = beta_lin(p, kappa_); break;
    case Region::IV: s.beta = beta_1(p, q, kappa_); break;
  }
  return s;
}

SpectrumPoint classify(double p, double q, double kappa) {
  return PhaseDiagram(kappa).classify(p, q);
}

PQ mfold_map(int m, PQ pq) {
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  return {pq.p, (1.0 - 1.0 / m) * pq.p + pq.q / m};
}

PQ mfold_inverse(int m, PQ pq) {
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  return {pq.p, m * pq.q - (m - 1.0) * pq.p};
}

SpectrumPoint classify_mfold(double p, double q, double kappa, int m) {
  PQ t = mfold_map(m, {p, q});
  SpectrumPoint s = classify(t.p, t.q, kappa);
  s.p = p;
  s.q = q;
  s.m = m;
  return s;
}

KoebePartition koebe_limit_partition() {
  const double inf = INFINITY;
  KoebePartition k;
  k.curves = {
      {"redParabola", 3.0, -2.0, 0.0, -inf, inf},
      {"greenParabola", 3.0, -2.0, -1.0, -1.0, inf},
      {"blueQuartic", 2.0, -1.0, 0.0, -inf, -1.0},
      {"D0prime", 1.0, 0.0, 1.0, -1.0, -1.0},
  };
  k.Q0 = {-1.0, -2.0};
  return k;
}

SpectrumPoint classify_koebe(double p, double q) {
  SpectrumPoint s;
  s.p = p;
  s.q = q;
  s.kappa = 0.0;
  double qb = p <= -1.0 ? 2.0 * p : 0.5 * (3.0 * p - 1.0);
  double qtol = kBoundaryTol * std::max(1.0, std::abs(qb));
  Region upper = p < -1.0 ? Region::I : Region::II;
  if (q < qb - qtol) {
    s.region = Region::IV;
  } else {
    s.region = upper;
    if (q <= qb + qtol) s.adjacent = Region::IV;
  }
  switch (s.region) {
    case Region::I: s.beta = -p - 1.0; break;
    case Region::IV: s.beta = 3.0 * p - 2.0 * q - 1.0; break;
    default: s.beta = 0.0; break;
  }
  return s;
}

}  // namespace sle
