#include "sle/phase_grid.hpp"

#include <algorithm>
#include <cmath>

#include "sle/closed_form.hpp"
#include "sle/errors.hpp"

namespace sle {

void GridSpec::validate() const {
  if (!(p_hi > p_lo) || !(q_hi > q_lo)) throw UsageError("grid ranges must be non-empty");
  if (np < 2 || nq < 2) throw UsageError("grid needs at least 2 nodes per axis");
}

double GridSpec::p_at(int i) const { return p_lo + (p_hi - p_lo) * i / (np - 1); }
double GridSpec::q_at(int j) const { return q_lo + (q_hi - q_lo) * j / (nq - 1); }

GridSpec default_grid(double kappa) {
  SpecialPoints sp = special_points(kappa);
  GridSpec g;
  g.p_lo = sp.p0prime - 6.0;
  g.p_hi = sp.p0 + 6.0;
  g.q_lo = sp.Q0.q - 6.0;
  g.q_hi = sp.P0.q + 6.0;
  return g;
}

namespace {

void fill_row(const PhaseDiagram& pd, int m, const GridSpec& g, int j, SpectrumPoint* row) {
  const double q = g.q_at(j);
  for (int i = 0; i < g.np; ++i) {
    const double p = g.p_at(i);
    PQ t = m == 1 ? PQ{p, q} : mfold_map(m, {p, q});
    SpectrumPoint s = pd.classify(t.p, t.q);
    s.p = p;
    s.q = q;
    s.m = m;
    row[i] = s;
  }
}

}  // namespace

std::vector<SpectrumPoint> phase_grid_serial(double kappa, int m, const GridSpec& g) {
  g.validate();
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  PhaseDiagram pd(kappa);
  std::vector<SpectrumPoint> out(static_cast<std::size_t>(g.np) * g.nq);
  for (int j = 0; j < g.nq; ++j) fill_row(pd, m, g, j, out.data() + static_cast<std::size_t>(j) * g.np);
  return out;
}

std::vector<SpectrumPoint> phase_grid(double kappa, int m, const GridSpec& g) {
  g.validate();
  if (m == 0) throw DomainError("m-fold transform needs m != 0");
  PhaseDiagram pd(kappa);
  std::vector<SpectrumPoint> out(static_cast<std::size_t>(g.np) * g.nq);
#pragma omp parallel for schedule(dynamic, 4)
  for (int j = 0; j < g.nq; ++j) fill_row(pd, m, g, j, out.data() + static_cast<std::size_t>(j) * g.np);
  return out;
}

std::vector<CurveSample> phase_curves(double kappa, int m, const GridSpec& g, int samples) {
  g.validate();
  if (samples < 2) throw UsageError("need at least 2 samples per curve");
  PhaseDiagram pd(kappa);
  const SpecialPoints& sp = pd.points();

  // window in the m = 1 coordinates
  double p_lo = g.p_lo, p_hi = g.p_hi, q_lo = INFINITY, q_hi = -INFINITY;
  for (double p : {g.p_lo, g.p_hi}) {
    for (double q : {g.q_lo, g.q_hi}) {
      PQ t = mfold_map(m, {p, q});
      q_lo = std::min(q_lo, t.q);
      q_hi = std::max(q_hi, t.q);
    }
  }
  const double dp = 1e-9 * (g.p_hi - g.p_lo), dq = 1e-9 * (g.q_hi - g.q_lo);
  auto inside = [&](PQ d) {
    return d.p >= g.p_lo - dp && d.p <= g.p_hi + dp && d.q >= g.q_lo - dq && d.q <= g.q_hi + dq;
  };

  std::vector<CurveSample> out;
  auto sweep = [&](Curve c, double a, double b, int n) {
    if (!(b > a)) return;
    for (int i = 0; i < n; ++i) {
      double t = a + (b - a) * i / (n - 1);
      PQ d = mfold_inverse(m, curve_eval(c, kappa, t));
      if (inside(d)) out.push_back({std::string(curve_name(c)), t, d.p, d.q});
    }
  };

  const double apex = delta0_abscissa(kappa);
  const double p_low = std::min(p_lo, sp.p0prime - 1.0);
  sweep(Curve::redParabola, parabola_gamma(kappa, std::min(p_low, apex), Branch::minus),
        parabola_gamma(kappa, std::min(p_low, apex), Branch::plus), samples);
  const double gg = std::sqrt(2.0 * std::max(apex - p_low, 0.0) / kappa);
  sweep(Curve::greenParabola, -gg, gg, samples);
  const double gq = pd.quartic_gamma_at(p_low);
  sweep(Curve::blueQuartic, -gq, gq, 4 * samples);
  sweep(Curve::D0, sp.P0.q, std::max(q_hi, sp.P0.q), samples);
  sweep(Curve::D0prime, sp.Q0.q, std::max(q_hi, sp.Q0.q), samples);
  sweep(Curve::D1, sp.p0, std::max(p_hi, sp.p0), samples);
  sweep(Curve::Delta0, q_lo, q_hi, samples);
  sweep(Curve::Delta1, p_lo, p_hi, samples);

  const std::pair<const char*, PQ> named[] = {{"P0", sp.P0}, {"P1", sp.P1}, {"Q0", sp.Q0}, {"Q1", sp.Q1},
                                              {"T0", sp.T0}, {"T1", sp.T1}, {"T2", sp.T2}};
  for (const auto& [name, pt] : named) {
    PQ d = mfold_inverse(m, pt);
    out.push_back({name, 0.0, d.p, d.q});
  }
  return out;
}

}  // namespace sle
