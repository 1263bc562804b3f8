#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "sle/batch.hpp"
#include "sle/closed_form.hpp"
#include "sle/errors.hpp"
#include "sle/estimators.hpp"
#include "sle/integral_means.hpp"
#include "sle/log_coeffs.hpp"

using sle::cplx;

namespace {

sle::SimConfig config(double kappa, double T, double dt) {
  sle::SimConfig c;
  c.kappa = kappa;
  c.horizon = T;
  c.dt = dt;
  c.seed = 77;
  return c;
}

// Batch of n copies of the constant-driver map; every row is identical.
sle::SampleBatch frozen_batch(double T, double dt, std::span<const cplx> pts, std::size_t n) {
  sle::SampleBatch b;
  b.cfg = config(2.0, T, dt);
  b.points.assign(pts.begin(), pts.end());
  b.n_samples = n;
  auto st = sle::evolve(sle::DrivingPath::constant(T, dt, 0.0), b.cfg, pts);
  for (std::size_t s = 0; s < n; ++s) {
    for (const auto& x : st) {
      b.log_f_over_z.push_back(T + x.logratio);
      b.logfp.push_back(T + x.logderiv);
    }
  }
  return b;
}

cplx frozen_log_ratio(cplx z, double T) {
  cplx c = std::exp(-T) * z / ((1.0 + z) * (1.0 + z));
  cplx w = (1.0 - 2.0 * c - std::sqrt(1.0 - 4.0 * c)) / (2.0 * c);
  return T + std::log(w / z);
}

}  // namespace

TEST_CASE("parabola examples") {
  auto [p, q] = sle::parabola_point(6.0, 1.0);
  CHECK(p == doctest::Approx(2.0));
  CHECK(q == doctest::Approx(0.0));
  auto [p2, q2] = sle::parabola_point(2.0, -0.5);
  CHECK(p2 == doctest::Approx(-1.75));
  CHECK(q2 == doctest::Approx(-2.5));
  CHECK(sle::parabola_gamma(6.0, 2.0, sle::Branch::minus) == doctest::Approx(2.0 / 3.0));
  CHECK(sle::parabola_gamma(6.0, 2.0, sle::Branch::plus) == doctest::Approx(1.0));
  CHECK_THROWS_AS(sle::parabola_gamma(6.0, 100.0 / 48.0 + 0.01, sle::Branch::minus), sle::DomainError);
  const sle::MomentSpec at_zero{0.0, 1.0, {}};
  CHECK_THROWS_AS(at_zero.sigma(), sle::DomainError);
  const sle::MomentSpec spec{2.0, 3.0, {}};
  CHECK(spec.sigma() == doctest::Approx(0.5));
}

TEST_CASE("parabola round trips") {
  Gen g(1);
  for (int i = 0; i < 500; ++i) {
    double k = g.uniform(0.1, 20.0);
    double gamma = g.uniform(-5.0, 5.0);
    auto [p, q] = sle::parabola_point(k, gamma);
    CHECK(std::abs(sle::parabola_residual(k, p, q)) <= 1e-9 * (1.0 + p * p + q * q));
    auto spec = sle::MomentSpec::from_pq(k, p, q);
    REQUIRE(spec.gamma.has_value());
    CHECK(*spec.gamma == doctest::Approx(gamma).epsilon(1e-9));
    // both roots of the quadratic in gamma lie on the parabola at the same p
    double other = (4.0 + k) / k - gamma;
    CHECK(sle::parabola_point(k, other).first == doctest::Approx(p).epsilon(1e-9));
    double vertex = (4.0 + k) / (2.0 * k);
    auto br = gamma <= vertex ? sle::Branch::minus : sle::Branch::plus;
    CHECK(sle::parabola_gamma(k, p, br) == doctest::Approx(gamma).epsilon(1e-7));
    CHECK_FALSE(sle::MomentSpec::from_pq(k, p, q + 1e-3).gamma.has_value());
  }
}

TEST_CASE("two-point closed form symmetries") {
  Gen g(2);
  for (int i = 0; i < 300; ++i) {
    double k = g.uniform(0.5, 10.0), gamma = g.uniform(-2.0, 2.0);
    cplx z1 = g.disk(0.95), z2 = g.disk(0.95);
    cplx a = sle::closed_two_point(z1, std::conj(z2), k, gamma);
    cplx b = sle::closed_two_point(z2, std::conj(z1), k, gamma);
    CHECK(std::abs(a - std::conj(b)) <= 1e-12 * std::abs(a));
    cplx c = sle::closed_two_point(z1, 0.0, k, gamma);
    CHECK(std::abs(c - sle::closed_one_point(z1, k, gamma)) <= 1e-13 * std::abs(c));
    // on the diagonal the value is real and positive
    cplx d = sle::closed_two_point(z1, std::conj(z1), k, gamma);
    CHECK(std::abs(d.imag()) <= 1e-12 * std::abs(d));
    CHECK(d.real() > 0.0);
  }
}

TEST_CASE("trivial exponents give exact estimates") {
  const cplx pts[] = {0.5, cplx(0.2, -0.3), 0.0};
  auto b = sle::generate_batch(config(2.0, 2.0, 1e-2), pts, 40);
  auto e = sle::estimate_one_point(b, 0.0, 0.0, 0.5);
  CHECK(e.value == cplx(1.0));
  CHECK(e.std_error == 0.0);
  CHECK(e.n_samples == 40);
  CHECK(e.kappa == 2.0);
  auto m = sle::estimate_moduli(b, 0.0, 0.0, cplx(0.2, -0.3));
  CHECK(m.value == cplx(1.0));
  // X(0) = 1 for every sample
  auto t = sle::estimate_two_point(b, 1.3, 0.7, 0.5, 0.0);
  auto o = sle::estimate_one_point(b, 1.3, 0.7, 0.5);
  CHECK(t.value == o.value);
  CHECK_THROWS_AS(sle::estimate_one_point(b, 1.0, 1.0, 0.4), sle::UsageError);
}

TEST_CASE("summary statistics") {
  std::vector<cplx> v = {1.0, 2.0, 3.0, cplx(4.0, 2.0)};
  auto s = sle::summarize(v);
  CHECK(s.value == cplx(2.5, 0.5));
  // sample variances 5/3 and 1, divided by n
  CHECK(s.std_error_re == doctest::Approx(std::sqrt(5.0 / 12.0)));
  CHECK(s.std_error_im == doctest::Approx(0.5));
  CHECK(s.std_error == doctest::Approx(std::sqrt(5.0 / 12.0 + 0.25)));
  cplx x = sle::one_point_integrand(cplx(0.1, 0.2), cplx(-0.3, 0.4), 2.0, 1.0);
  CHECK(std::abs(x - std::exp(cplx(-0.3, 0.4) - 0.5 * cplx(0.1, 0.2))) < 1e-15);
}

TEST_CASE("one-point estimate agrees with the closed form") {
  const cplx z(0.3, 0.3);
  const cplx pts[] = {z};
  const double k = 2.0;
  auto b = sle::generate_batch(config(k, 8.0, 2e-3), pts, 4000);
  for (double gamma : {-0.5, 0.25, 0.5}) {
    auto [p, q] = sle::parabola_point(k, gamma);
    auto e = sle::estimate_one_point(b, p, q, z);
    cplx exact = sle::closed_one_point(z, k, gamma);
    CHECK(std::abs(e.value.real() - exact.real()) < 4.0 * e.std_error_re + 1e-3);
    CHECK(std::abs(e.value.imag() - exact.imag()) < 4.0 * e.std_error_im + 1e-3);
  }
}

TEST_CASE("m-fold transform identity holds pathwise") {
  const cplx z(0.5, 0.4);
  const cplx ext(1.3, -0.9);
  std::vector<cplx> pts = {z, z * z, z * z * z, std::pow(1.0 / ext, 2)};
  auto b = sle::generate_batch(config(4.0, 8.0, 1e-2), pts, 20);
  Gen g(3);
  for (std::size_t s = 0; s < b.n_samples; ++s) {
    double p = g.uniform(-2.0, 2.0), q = g.uniform(-2.0, 2.0);
    CHECK(sle::mfold_identity_check(b, s, 1, z, p, q) < 1e-12);
    CHECK(sle::mfold_identity_check(b, s, 2, z, p, q) < 1e-10);
    CHECK(sle::mfold_identity_check(b, s, 3, z, p, q) < 1e-10);
    CHECK(sle::mfold_identity_check(b, s, -2, ext, p, q) < 1e-10);
  }
  CHECK_THROWS_AS(sle::mfold_identity_check(b, 0, 4, z, 1.0, 1.0), sle::UsageError);
  CHECK_THROWS_AS(sle::mfold_identity_check(b, 0, 0, z, 1.0, 1.0), sle::DomainError);
  CHECK_THROWS_AS(sle::mfold_identity_check(b, 0, -2, z, 1.0, 1.0), sle::DomainError);
  CHECK_THROWS_AS(sle::mfold_identity_check(b, 20, 2, z, 1.0, 1.0), sle::UsageError);
}

TEST_CASE("log coefficients of the frozen map") {
  const double r = 0.5, T = 8.0;
  auto pts = sle::circle_points(r, 32);
  auto b = frozen_batch(T, 1e-3, pts, 3);
  auto st = sle::extract_log_coeffs(b, r, 4, 32);
  CHECK(st.n_samples == 3);
  CHECK(st.aliasing_bound == doctest::Approx(std::pow(0.5, 32)));
  CHECK(st.noise_amplification == doctest::Approx(256.0));

  // oracle: DFT of the exact flow on a much finer circle
  const int M = 512;
  for (int n = 1; n <= 4; ++n) {
    cplx c = 0.0;
    for (int j = 0; j < M; ++j) {
      cplx zj = std::polar(r, 2.0 * std::numbers::pi * j / M);
      c += frozen_log_ratio(zj, T) * std::polar(1.0, -2.0 * std::numbers::pi * n * j / M);
    }
    cplx oracle = 0.5 * c / (double(M) * std::pow(r, n));
    CHECK(std::abs(st.mean_gamma[n - 1] - oracle) < 1e-6);
    // T -> infinity gives log(z/(1+z)^2 / z)
    CHECK(std::abs(st.mean_gamma[n - 1] - std::pow(-1.0, n) / n) < 5e-3);
    CHECK(st.se_gamma_re[n - 1] == 0.0);
    CHECK(st.mean_sq[n - 1] == doctest::Approx(std::norm(st.mean_gamma[n - 1])));
  }
  for (int n = 1; n < 4; ++n) {
    CHECK(std::abs(st.cross[n - 1] - st.mean_gamma[n - 1] * std::conj(st.mean_gamma[n])) < 1e-14);
  }
}

TEST_CASE("log coefficient extraction of a polynomial") {
  const double r = 0.4;
  auto pts = sle::circle_points(r, 16);
  std::vector<cplx> vals;
  const cplx a1(0.3, -0.2), a3(-1.1, 0.5);
  for (cplx z : pts) vals.push_back(a1 * z + a3 * z * z * z);
  auto g = sle::log_coeffs_of(vals, r, 5);
  REQUIRE(g.size() == 5);
  CHECK(std::abs(g[0] - 0.5 * a1) < 1e-14);
  CHECK(std::abs(g[1]) < 1e-14);
  CHECK(std::abs(g[2] - 0.5 * a3) < 1e-13);
  CHECK_THROWS_AS(sle::log_coeffs_of(vals, r, 8), sle::UsageError);
}

TEST_CASE("log coefficient usage errors") {
  auto pts = sle::circle_points(0.5, 8);
  auto b = frozen_batch(1.0, 1e-2, pts, 1);
  CHECK_THROWS_AS(sle::extract_log_coeffs(b, 0.5, 4, 8), sle::UsageError);
  CHECK_THROWS_AS(sle::extract_log_coeffs(b, 0.5, 0, 8), sle::UsageError);
  CHECK_THROWS_AS(sle::extract_log_coeffs(b, 0.6, 2, 8), sle::UsageError);
  CHECK_THROWS_AS(sle::extract_log_coeffs(b, 0.5, 2, 16), sle::UsageError);
  CHECK_THROWS_AS(sle::circle_points(0.5, 0), sle::UsageError);
}

TEST_CASE("Milin expectation equals minus half the summed harmonic numbers") {
  double h = 0.0, sum = 0.0;
  for (int n = 1; n <= 30; ++n) {
    h += 1.0 / n;
    sum += h;
    CHECK(sle::milin_expectation(n) == doctest::Approx(-0.5 * sum).epsilon(1e-13));
    // with E|gamma_k|^2 = 1/(2k^2) the Milin functional has the same mean
    double f = 0.0;
    for (int k = 1; k <= n; ++k) f += (n - k + 1) * (k * 0.5 / (k * k) - 1.0 / k);
    CHECK(sle::milin_expectation(n) == doctest::Approx(f).epsilon(1e-13));
  }
  CHECK(sle::milin_expectation(1) == -0.5);
  CHECK_THROWS_AS(sle::milin_expectation(0), sle::DomainError);
}

TEST_CASE("integral means slopes") {
  auto radii = sle::default_radii();
  REQUIRE(radii.size() == 26);
  CHECK(radii.front() == doctest::Approx(1.0 - std::pow(10.0, -0.5)));
  CHECK(radii.back() == doctest::Approx(0.999));

  std::vector<double> power;
  for (double r : radii) power.push_back(3.0 * std::pow(1.0 - r, -1.7));
  CHECK(sle::fit_means_slope(radii, power) == doctest::Approx(1.7).epsilon(1e-12));

  for (double k : {2.0, 6.0}) {
    for (double gamma : {-0.3, 0.3, 0.8}) {
      auto [p, q] = sle::parabola_point(k, gamma);
      auto scan = sle::integral_means_scan_closed(k, p, q, radii, 4096);
      REQUIRE(scan.beta.has_value());
      CHECK_FALSE(scan.tip_dominated);
      // the bounded tip factor corrects the slope by O((1-r)^(1+2 gamma))
      double tol = gamma < 0.0 ? 0.04 : 0.01;
      CHECK(std::abs(*scan.beta - 0.5 * k * gamma * gamma) < tol);
    }
    auto [p, q] = sle::parabola_point(k, -0.8);
    auto tip = sle::integral_means_scan_closed(k, p, q, radii, 256);
    CHECK(tip.tip_dominated);
    CHECK_FALSE(tip.beta.has_value());
    CHECK_THROWS_AS(sle::integral_means_scan_closed(k, p, q + 0.5, radii, 256), sle::DomainError);
  }
  const double bad[] = {0.5, 0.4, 0.9, 0.95};
  CHECK_THROWS_AS(sle::integral_means_scan([](cplx) { return 1.0; }, bad, 16), sle::UsageError);
  const double outside[] = {0.5, 1.0};
  CHECK_THROWS_AS(sle::integral_means_scan([](cplx) { return 1.0; }, outside, 16), sle::DomainError);
}

TEST_CASE("Monte Carlo means scan uses the radius-major layout") {
  const double radii[] = {0.3, 0.5, 0.7, 0.8};
  auto pts = sle::means_scan_points(radii, 8);
  REQUIRE(pts.size() == 32);
  CHECK(std::abs(pts[9] - std::polar(0.5, std::numbers::pi / 4)) < 1e-15);
  auto b = sle::generate_batch(config(2.0, 2.0, 1e-2), pts, 10);
  auto scan = sle::integral_means_scan_mc(b, 0.0, 0.0, radii, 8);
  for (double v : scan.integrals) CHECK(v == doctest::Approx(2.0 * std::numbers::pi));
  CHECK(std::abs(*scan.beta) < 1e-12);
  CHECK_THROWS_AS(sle::integral_means_scan_mc(b, 0.0, 0.0, radii, 4), sle::UsageError);
}
