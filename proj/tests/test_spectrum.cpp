#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "gen.hpp"
#include "sle/errors.hpp"
#include "sle/parallel.hpp"
#include "sle/phase_grid.hpp"
#include "sle/spectrum.hpp"
#include "sle/universal.hpp"
#include "sle/xy_geometry.hpp"

using sle::Curve;
using sle::PQ;
using sle::Region;

namespace {

double spectrum_of(Region r, double p, double q, double k) {
  switch (r) {
    case Region::I: return sle::beta_tip(p, k);
    case Region::II: return sle::beta_0(p, k);
    case Region::III: return sle::beta_lin(p, k);
    case Region::IV: return sle::beta_1(p, q, k);
  }
  return NAN;
}

// Regions met in order along q = 0, consecutive repeats removed.
std::vector<Region> sweep_q0(double k, int m, double p_lo, double p_hi) {
  std::vector<Region> seen;
  for (int i = 0; i <= 20000; ++i) {
    double p = p_lo + (p_hi - p_lo) * i / 20000.0;
    auto s = sle::classify_mfold(p, 0.0, k, m);
    if (seen.empty() || seen.back() != s.region) seen.push_back(s.region);
  }
  return seen;
}

}  // namespace

TEST_CASE("spectrum examples") {
  CHECK(sle::beta_tip(-4.0, 6.0) == doctest::Approx(1.2279981273412348).epsilon(1e-14));
  CHECK(sle::beta_0(1.0, 6.0) == doctest::Approx(0.16204060378000906).epsilon(1e-14));
  CHECK(sle::beta_lin(3.0, 6.0) == doctest::Approx(1.9583333333333333).epsilon(1e-14));
  CHECK(sle::beta_1(1.0, -2.0, 6.0) == doctest::Approx(3.4586187348508903).epsilon(1e-14));
  CHECK(sle::beta_m(1.0, -2.0, 6.0, 3) == doctest::Approx(0.6972243622680054).epsilon(1e-14));
  CHECK(sle::beta_m(1.0, 2.0, 6.0, -2) == doctest::Approx(0.17712434446770464).epsilon(1e-14));
  CHECK(sle::beta_m(1.0, -2.0, 6.0, 1) == sle::beta_1(1.0, -2.0, 6.0));
  CHECK(sle::beta_0(0.0, 6.0) == 0.0);
  CHECK(sle::delta0_abscissa(6.0) == doctest::Approx(100.0 / 48.0));

  CHECK_THROWS_AS(sle::beta_tip(3.0, 6.0), sle::DomainError);
  CHECK_THROWS_AS(sle::beta_0(3.0, 6.0), sle::DomainError);
  CHECK_THROWS_AS(sle::beta_1(0.0, 1.0, 6.0), sle::DomainError);
  CHECK_THROWS_AS(sle::beta_m(0.0, 1.0, 6.0, 0), sle::DomainError);
}

TEST_CASE("special points for kappa = 6") {
  auto sp = sle::special_points(6.0);
  auto near = [](PQ a, double p, double q) {
    return std::abs(a.p - p) < 1e-12 && std::abs(a.q - q) < 1e-12;
  };
  CHECK(near(sp.P0, 1.5625, 35.0 / 24.0));
  CHECK(near(sp.P1, 364.0 / 192.0, 35.0 / 24.0));
  CHECK(near(sp.Q0, -3.25, -7.25));
  CHECK(near(sp.Q1, -3.25, -4.5));
  CHECK(near(sp.T0, 100.0 / 48.0, 5.0 / 6.0));
  CHECK(near(sp.T1, 0.75, 5.0 / 6.0));
  CHECK(near(sp.T2, 2.0, 100.0 / 48.0));
  CHECK(sp.p_star == doctest::Approx(0.7024404821440479).epsilon(1e-13));
  CHECK(sp.p0dblprime == doctest::Approx(-10.9375).epsilon(1e-14));
  CHECK(sp.p0 == sp.P0.p);
  CHECK(sp.p0prime == sp.Q0.p);
}

TEST_CASE("special points lie on the curves that define them") {
  Gen g(4);
  for (int i = 0; i < 200; ++i) {
    double k = g.uniform(0.2, 40.0);
    auto sp = sle::special_points(k);
    auto on = [&](Curve c, PQ x) { return std::abs(sle::cartesian_residual(c, k, x.p, x.q)) < 1e-12; };
    CHECK(on(Curve::redParabola, sp.P0));
    CHECK(on(Curve::greenParabola, sp.P0));
    CHECK(on(Curve::D0, sp.P0));
    CHECK(on(Curve::D1, sp.P0));
    CHECK(on(Curve::redParabola, sp.P1));
    CHECK(on(Curve::greenParabola, sp.P1));
    CHECK(on(Curve::greenParabola, sp.Q0));
    CHECK(on(Curve::blueQuartic, sp.Q0));
    CHECK(on(Curve::D0prime, sp.Q0));
    CHECK(on(Curve::redParabola, sp.Q1));
    CHECK(on(Curve::blueQuartic, sp.Q1));
    CHECK(on(Curve::Delta0, sp.T0));
    CHECK(on(Curve::redParabola, sp.T0));
    CHECK(on(Curve::redParabola, sp.T1));
    CHECK(on(Curve::Delta1, sp.T1));
    CHECK(on(Curve::greenParabola, sp.T2));
    CHECK(on(Curve::Delta1, sp.T2));
    CHECK(on(Curve::greenParabola, PQ{sp.p_star, 0.0}));
    CHECK(on(Curve::greenParabola, PQ{sp.p0dblprime, 2.0 * sp.p0dblprime}));
  }
}

TEST_CASE("curve names and parametrizations") {
  CHECK(sle::all_curves().size() == 8);
  for (Curve c : sle::all_curves()) CHECK(sle::curve_from_name(sle::curve_name(c)) == c);
  CHECK(sle::curve_name(Curve::blueQuartic) == "blueQuartic");
  CHECK_THROWS_AS(sle::curve_from_name("purple"), sle::UsageError);

  PQ red = sle::curve_eval(Curve::redParabola, 6.0, 1.0);
  CHECK(red.p == doctest::Approx(2.0));
  CHECK(red.q == doctest::Approx(0.0));
  PQ quartic = sle::curve_eval(Curve::blueQuartic, 6.0, 2.0);
  CHECK(quartic.p == doctest::Approx(-9.152968552019585).epsilon(1e-14));
  CHECK(quartic.q == doctest::Approx(-19.152968552019587).epsilon(1e-14));
  CHECK(sle::quartic_delta(6.0, 2.0) == doctest::Approx(409.0));
  PQ d1 = sle::curve_eval(Curve::D1, 6.0, 1.0);
  CHECK(d1.q == doctest::Approx(1.0 + (16.0 - 36.0) / 192.0));

  Gen g(5);
  for (int i = 0; i < 2000; ++i) {
    double k = g.uniform(0.2, 40.0), t = g.uniform(-10.0, 10.0);
    for (Curve c : sle::all_curves()) {
      PQ x = sle::curve_eval(c, k, t);
      CHECK(std::abs(sle::cartesian_residual(c, k, x.p, x.q)) < 1e-10);
    }
    CHECK(sle::quartic_delta(k, t) > 0.0);
  }
  CHECK(std::abs(sle::cartesian_residual(Curve::redParabola, 6.0, 2.0, 0.5)) > 1e-3);
}

TEST_CASE("classification examples") {
  auto s = sle::classify(0.0, 0.0, 6.0);
  CHECK(s.region == Region::II);
  CHECK(s.beta == 0.0);
  CHECK_FALSE(s.on_boundary());
  CHECK(sle::classify(-5.0, 0.0, 6.0).region == Region::I);
  CHECK(sle::classify(1.9, 5.0, 6.0).region == Region::III);
  CHECK(sle::classify(1.0, -2.0, 6.0).region == Region::IV);
  CHECK(sle::classify(-5.0, -30.0, 6.0).region == Region::IV);

  auto sp = sle::special_points(6.0);
  auto q0 = sle::classify(sp.Q0.p, sp.Q0.q, 6.0);
  CHECK(q0.region == Region::I);
  CHECK(q0.on_boundary());
  auto p0 = sle::classify(sp.P0.p, sp.P0.q + 1.0, 6.0);
  CHECK(p0.region == Region::II);
  CHECK(p0.adjacent == Region::III);
  auto green = sle::curve_eval(Curve::greenParabola, 6.0, 0.5);
  auto on_green = sle::classify(green.p, green.q, 6.0);
  CHECK(on_green.region == Region::II);
  CHECK(on_green.adjacent == Region::IV);
}

TEST_CASE("spectrum is continuous across every separatrix") {
  Gen g(6);
  for (int i = 0; i < 300; ++i) {
    double k = g.uniform(0.3, 30.0);
    sle::PhaseDiagram pd(k);
    const auto& sp = pd.points();
    // lower boundary: quartic, green arc and D1 pieces
    double p = g.uniform(sp.p0prime - 20.0, sp.p0 + 5.0);
    double qb = pd.boundary_q(p);
    auto up = pd.classify(p, qb + 1e-6);
    auto down = pd.classify(p, qb - 1e-6);
    CHECK(down.region == Region::IV);
    CHECK(up.region != Region::IV);
    double tol = 1e-5 * (1.0 + std::abs(p));
    CHECK(std::abs(spectrum_of(up.region, p, qb, k) - sle::beta_1(p, qb, k)) < tol);
    // vertical separatrices
    double q_hi = g.uniform(sp.P0.q + 0.1, sp.P0.q + 10.0);
    CHECK(std::abs(sle::beta_tip(sp.p0prime, k) - sle::beta_0(sp.p0prime, k)) < 1e-12 * (1 + k));
    CHECK(std::abs(sle::beta_0(sp.p0, k) - sle::beta_lin(sp.p0, k)) < 1e-12 * (1 + k));
    CHECK(pd.classify(sp.p0 - 1e-6, q_hi).region == Region::II);
    CHECK(pd.classify(sp.p0 + 1e-6, q_hi).region == Region::III);
    // the lower boundary is continuous at p0' and p0
    CHECK(std::abs(pd.boundary_q(sp.p0prime - 1e-9) - pd.boundary_q(sp.p0prime + 1e-9)) < 1e-6);
    CHECK(std::abs(pd.boundary_q(sp.p0 - 1e-9) - pd.boundary_q(sp.p0 + 1e-9)) < 1e-6);
    // the attained spectrum dominates the others where they are defined
    double pr = g.uniform(sp.p0prime - 10.0, sp.p0 + 5.0), qr = g.uniform(-30.0, 10.0);
    auto s = pd.classify(pr, qr);
    if (s.region == Region::IV && pr < sle::delta0_abscissa(k)) {
      CHECK(s.beta >= std::max(sle::beta_tip(pr, k), sle::beta_0(pr, k)) - 1e-9);
    }
  }
}

TEST_CASE("phase diagram inverses") {
  Gen g(7);
  for (int i = 0; i < 200; ++i) {
    double k = g.uniform(0.3, 30.0);
    sle::PhaseDiagram pd(k);
    double gq = 1.0 + 2.0 / k + g.uniform(0.0, 20.0);
    PQ x = sle::curve_eval(Curve::blueQuartic, k, gq);
    CHECK(pd.quartic_gamma_at(x.p) == doctest::Approx(gq).epsilon(1e-10));
    double gg = g.uniform(0.0, 3.0);
    PQ y = sle::curve_eval(Curve::greenParabola, k, gg);
    CHECK(pd.green_gamma_at(y.p) == doctest::Approx(gg).epsilon(1e-10));
  }
  sle::PhaseDiagram pd(6.0);
  CHECK_THROWS_AS(pd.quartic_gamma_at(0.0), sle::DomainError);
  CHECK_THROWS_AS(pd.green_gamma_at(3.0), sle::DomainError);
}

TEST_CASE("m-fold map") {
  Gen g(8);
  for (int i = 0; i < 500; ++i) {
    int m = g.integer(-40, 40);
    if (m == 0) continue;
    PQ a{g.uniform(-10.0, 10.0), g.uniform(-10.0, 10.0)};
    PQ b = sle::mfold_inverse(m, sle::mfold_map(m, a));
    CHECK(b.p == a.p);
    CHECK(b.q == doctest::Approx(a.q).epsilon(1e-12));
    // p = q is fixed
    PQ d = sle::mfold_map(m, {a.p, a.p});
    CHECK(d.q == doctest::Approx(a.p).epsilon(1e-12));
  }
  CHECK_THROWS_AS(sle::mfold_map(0, {1.0, 1.0}), sle::DomainError);
  CHECK(sle::classify_mfold(0.3, 0.7, 6.0, 1).region == sle::classify(0.3, 0.7, 6.0).region);
  auto s = sle::classify_mfold(1.0, -2.0, 6.0, 3);
  CHECK(s.m == 3);
  CHECK(s.p == 1.0);
  CHECK(s.q == -2.0);
  REQUIRE(s.region == Region::IV);
  CHECK(s.beta == doctest::Approx(sle::beta_m(1.0, -2.0, 6.0, 3)).epsilon(1e-13));
}

TEST_CASE("region sequences along q = 0") {
  CHECK(sweep_q0(30.0, 10, -40.0, 40.0) ==
        std::vector<Region>{Region::I, Region::II, Region::III, Region::IV});
  CHECK(sweep_q0(2.0, -30, -40.0, 40.0) ==
        std::vector<Region>{Region::I, Region::II, Region::IV, Region::III});
}

TEST_CASE("(x, y) coordinates") {
  Gen g(9);
  for (int i = 0; i < 1000; ++i) {
    double k = g.uniform(0.3, 60.0);
    double x = g.uniform(0.01, 20.0), y = g.uniform(0.01, 20.0);
    PQ pq = sle::xy_inverse(x, y, k);
    REQUIRE(sle::in_sector(pq.p, pq.q, k));
    auto back = sle::xy_forward(pq.p, pq.q, k);
    CHECK(back.x == doctest::Approx(x).epsilon(1e-9));
    CHECK(back.y == doctest::Approx(y).epsilon(1e-9));
    auto s = sle::xy_spectra(x, y, k);
    CHECK(s.beta_1 == doctest::Approx(sle::beta_1(pq.p, pq.q, k)).epsilon(1e-9));
    CHECK(s.beta_0 == doctest::Approx(sle::beta_0(pq.p, k)).epsilon(1e-9));
    CHECK(s.beta_tip == doctest::Approx(sle::beta_tip(pq.p, k)).epsilon(1e-9));
    double lhs = 4.0 * k * (s.beta_1 - s.beta_0);
    double rhs = (2 * y + x - k - 2) * (2 * y - x + 2);
    CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(rhs) + k * k));
  }
  CHECK_THROWS_AS(sle::xy_forward(10.0, 0.0, 6.0), sle::DomainError);
}

TEST_CASE("quartic is a hyperbola in (x, y)") {
  Gen g(10);
  for (int i = 0; i < 500; ++i) {
    double k = g.uniform(0.3, 60.0);
    double gamma = g.uniform(-20.0, 20.0);
    PQ x = sle::curve_eval(Curve::blueQuartic, k, gamma);
    if (!sle::in_sector(x.p, x.q, k)) continue;
    auto xy = sle::xy_forward(x.p, x.q, k);
    // the boundary branch uses the positive root y; the rest of the curve
    // continues through y < 0
    double y = std::abs(sle::quartic_hyperbola_residual(xy.x, xy.y, k)) < 1e-10 ? xy.y : -xy.y;
    CHECK(std::abs(sle::quartic_hyperbola_residual(xy.x, y, k)) < 1e-10);
    if (gamma >= 1.0 + 2.0 / k) CHECK(y == xy.y);
    bool upper = xy.x >= 0.5 * k;
    CHECK(sle::hyperbola_x(y, k, upper) == doctest::Approx(xy.x).epsilon(1e-8));
  }
  // relevance of the lower component switches at 12 + 8 sqrt 3
  const double kc = 12.0 + 8.0 * std::sqrt(3.0);
  CHECK_FALSE(sle::quartic_asymptotes(kc - 1e-6).lower_component_relevant);
  CHECK(sle::quartic_asymptotes(kc + 1e-6).lower_component_relevant);
}

TEST_CASE("quartic asymptotes") {
  for (double k : {0.5, 2.0, 6.0, 30.0}) {
    for (int m : {1, 2, 5, -3}) {
      auto a = sle::quartic_asymptotes(k, m);
      CHECK(a.slope == m + 1.0);
      CHECK(a.intercept == doctest::Approx(-m * (2.0 + k) / 8.0));
      // pulled-back quartic approaches the line as gamma -> +infinity
      double prev = INFINITY;
      for (double gamma : {1e1, 1e2, 1e3}) {
        PQ x = sle::mfold_inverse(m, sle::curve_eval(Curve::blueQuartic, k, gamma));
        double gap = std::abs(x.q - (a.slope * x.p + a.intercept));
        CHECK(gap < prev);
        prev = gap;
      }
      CHECK(prev < 1e-2 * std::abs(m));
    }
    // parabolic asymptote for gamma -> -infinity, error O(1/gamma)
    auto a = sle::quartic_asymptotes(k);
    CHECK(a.center_x == 0.5 * k);
    CHECK(a.center_y == 0.25 * k);
    auto v = [&](double gamma) {
      PQ x = sle::curve_eval(Curve::blueQuartic, k, gamma);
      return sle::parabolic_asymptote_value(x.p, x.q, k);
    };
    double extrap = 2.0 * v(-100.0) - v(-50.0);
    CHECK(extrap == doctest::Approx(a.parabola_c).epsilon(2e-4));
    CHECK(std::abs(v(-100.0) - a.parabola_c) > std::abs(extrap - a.parabola_c));
  }
  CHECK(sle::quartic_asymptotes(6.0).parabola_c == doctest::Approx(0.625 + 18.0 / 16.0));
  CHECK_THROWS_AS(sle::quartic_asymptotes(6.0, 0), sle::DomainError);
}

TEST_CASE("universal spectrum") {
  auto model = sle::B0Model::kraetzer();
  CHECK(sle::universal_Bp(-3.0, model) == 2.0);
  CHECK(sle::universal_Bp(1.0, model) == 0.25);
  CHECK(sle::universal_Bp(3.0, model) == 2.0);
  // continuous at p_dagger and at 2
  CHECK(sle::universal_Bp(-2.0, model) == doctest::Approx(1.0));
  CHECK(model(-2.0) == doctest::Approx(1.0));
  CHECK(model(2.0) == doctest::Approx(1.0));
  CHECK(sle::universal_B(0.0, -5.0, model) == 9.0);
  CHECK(sle::universal_region(0.0, -5.0, model) == Region::IV);
  CHECK(sle::universal_region(-3.0, 0.0, model) == Region::I);
  CHECK(sle::universal_region(0.5, 1.0, model) == Region::II);
  CHECK(sle::universal_region(3.0, 5.0, model) == Region::III);

  // the three partition curves meet at the triple point (-2, -4)
  auto rows = sle::universal_partition(model);
  bool tip_end = false, bulk_start = false;
  for (const auto& r : rows) {
    if (r.curve == "tipLine" && r.p == -2.0) tip_end = std::abs(r.q + 4.0) < 1e-14;
    if (r.curve == "bulkCurve" && r.p == -2.0) bulk_start = std::abs(r.q + 4.0) < 1e-14;
    CHECK(std::abs(3.0 * r.p - 2.0 * r.q - 1.0 - sle::universal_Bp(r.p, model)) < 1e-12);
  }
  CHECK(tip_end);
  CHECK(bulk_start);
  CHECK(rows.size() == 303);

  auto table = sle::B0Model::from_table({{-2.0, 1.0}, {0.0, 0.0}, {2.0, 1.0}});
  CHECK(table(-1.0) == 0.5);
  CHECK(table(5.0) == 1.0);
  CHECK_THROWS_AS(sle::B0Model::from_table({{0.0, 1.0}}), sle::ConfigError);
  CHECK_THROWS_AS(sle::B0Model::from_table({{0.0, 1.0}, {0.0, 2.0}}), sle::ConfigError);

  CHECK(sle::feng_mcgregor_domain(2.0, 1.0));
  CHECK_FALSE(sle::feng_mcgregor_domain(2.0, 2.0));
  CHECK_FALSE(sle::feng_mcgregor_domain(0.2, 0.0));
  CHECK_FALSE(sle::feng_mcgregor_domain(-0.1, -5.0));
}

TEST_CASE("small kappa approaches the Koebe partition") {
  auto part = sle::koebe_limit_partition();
  CHECK(part.Q0.p == -1.0);
  CHECK(part.Q0.q == -2.0);
  CHECK(part.curves.size() == 4);
  CHECK(sle::classify_koebe(-3.0, 0.0).region == Region::I);
  CHECK(sle::classify_koebe(0.0, 0.0).region == Region::II);
  CHECK(sle::classify_koebe(0.0, -3.0).region == Region::IV);
  CHECK(sle::classify_koebe(0.0, -3.0).beta == 5.0);
  CHECK(sle::classify_koebe(1.0, 1.0).on_boundary());

  Gen g(12);
  sle::PhaseDiagram pd(1e-4);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    double p = g.uniform(-6.0, 6.0), q = g.uniform(-12.0, 8.0);
    double qb = p <= -1.0 ? 2.0 * p : 0.5 * (3.0 * p - 1.0);
    if (std::abs(q - qb) < 0.05 || std::abs(p + 1.0) < 0.05) continue;
    auto lim = sle::classify_koebe(p, q);
    auto s = pd.classify(p, q);
    CHECK(s.region == lim.region);
    CHECK(s.beta == doctest::Approx(lim.beta).epsilon(1e-2).scale(1.0));
    ++checked;
  }
  CHECK(checked > 1500);
}

TEST_CASE("phase grid: parallel rows match the serial reference") {
  sle::GridSpec g = sle::default_grid(6.0);
  g.np = 37;
  g.nq = 29;
  CHECK(g.p_lo == doctest::Approx(-1.0 - 18.0 / 8.0 - 6.0));
  CHECK(g.q_hi == doctest::Approx(1.4583333333333333 + 6.0));
  for (int m : {1, -1, 3}) {
    auto ref = sle::phase_grid_serial(6.0, m, g);
    REQUIRE(ref.size() == 37u * 29u);
    for (int workers : {1, 2, 4}) {
      sle::set_worker_count(workers);
      auto par = sle::phase_grid(6.0, m, g);
      bool same = true;
      for (std::size_t i = 0; i < ref.size(); ++i)
        same = same && ref[i].region == par[i].region && ref[i].beta == par[i].beta && ref[i].p == par[i].p &&
               ref[i].q == par[i].q && ref[i].adjacent == par[i].adjacent;
      CHECK(same);
    }
    sle::set_worker_count(0);
    // cell (i, j) sits at j * np + i and classifies like classify_mfold
    const auto& c = ref[5 * g.np + 11];
    auto direct = sle::classify_mfold(g.p_at(11), g.q_at(5), 6.0, m);
    CHECK(c.region == direct.region);
    CHECK(c.beta == direct.beta);
  }
  g.np = 1;
  CHECK_THROWS_AS(sle::phase_grid(6.0, 1, g), sle::UsageError);
}

TEST_CASE("phase curves carry the special points and stay in the window") {
  sle::GridSpec g = sle::default_grid(6.0);
  auto rows = sle::phase_curves(6.0, 1, g, 51);
  bool found = false;
  for (const auto& r : rows) {
    if (r.curve == "P0") {
      found = true;
      CHECK(r.p == doctest::Approx(1.5625).epsilon(1e-12));
      CHECK(r.q == doctest::Approx(1.4583333333333333).epsilon(1e-12));
      continue;
    }
    if (r.curve.size() == 2 && std::string("PQT").find(r.curve[0]) != std::string::npos) continue;
    CHECK(r.p >= g.p_lo - 1e-6);
    CHECK(r.p <= g.p_hi + 1e-6);
    CHECK(r.q >= g.q_lo - 1e-6);
    CHECK(r.q <= g.q_hi + 1e-6);
    CHECK(sle::cartesian_residual(sle::curve_from_name(r.curve), 6.0, r.p, r.q) < 1e-10);
  }
  CHECK(found);
  // in the m = -1 diagram the green parabola crosses q = 0 at p0''
  auto sp = sle::special_points(6.0);
  sle::GridSpec w{sp.p0dblprime - 1.0, sp.p0dblprime + 1.0, -1.0, 1.0};
  auto minus = sle::phase_curves(6.0, -1, w, 2001);
  int crossings = 0;
  for (std::size_t i = 1; i < minus.size(); ++i) {
    const auto &a = minus[i - 1], &b = minus[i];
    if (a.curve != "greenParabola" || b.curve != "greenParabola" || (a.q < 0.0) == (b.q < 0.0)) continue;
    double p = a.p + (b.p - a.p) * a.q / (a.q - b.q);
    CHECK(p == doctest::Approx(sp.p0dblprime).epsilon(1e-4));
    ++crossings;
  }
  CHECK(crossings == 1);
}
