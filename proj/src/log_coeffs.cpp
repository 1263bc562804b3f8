#include "sle/log_coeffs.hpp"

#include <cmath>
#include <numbers>

#include "sle/errors.hpp"
#include "sle/estimators.hpp"

namespace sle {

std::vector<cplx> circle_points(double radius, int M) {
  if (M <= 0) throw UsageError("circle needs M > 0 points");
  std::vector<cplx> pts(M);
  for (int j = 0; j < M; ++j) pts[j] = std::polar(radius, 2.0 * std::numbers::pi * j / M);
  return pts;
}

std::vector<cplx> log_coeffs_of(std::span<const cplx> values, double radius, int n_max) {
  const int M = static_cast<int>(values.size());
  if (!(2 * n_max < M)) throw UsageError("aliasing guard: need n_max < M/2");
  std::vector<cplx> g(n_max);
  for (int n = 1; n <= n_max; ++n) {
    cplx c = 0.0;
    for (int j = 0; j < M; ++j) {
      // exponent reduced mod M keeps the twiddle angle small
      int k = static_cast<int>((static_cast<long>(j) * n) % M);
      c += values[j] * std::polar(1.0, -2.0 * std::numbers::pi * k / M);
    }
    c /= static_cast<double>(M);
    g[n - 1] = 0.5 * c * std::pow(radius, -n);
  }
  return g;
}

LogCoeffStats extract_log_coeffs(const SampleBatch& b, double radius, int n_max, int M) {
  if (n_max < 1) throw UsageError("n_max must be >= 1");
  if (!(2 * n_max < M)) throw UsageError("aliasing guard: need n_max < M/2");
  if (b.points.size() != static_cast<std::size_t>(M)) {
    throw UsageError("batch points are not the M-point circle");
  }
  std::vector<cplx> circle = circle_points(radius, M);
  for (int j = 0; j < M; ++j) {
    if (std::abs(circle[j] - b.points[j]) > 1e-14) {
      throw UsageError("batch points are not the M-point circle of the given radius");
    }
  }

  const std::size_t N = b.n_samples;
  std::vector<std::vector<cplx>> gammas(N);
  const long n = static_cast<long>(N);
#pragma omp parallel for schedule(static)
  for (long s = 0; s < n; ++s) {
    std::span<const cplx> row(b.log_f_over_z.data() + s * M, M);
    gammas[s] = log_coeffs_of(row, radius, n_max);
  }

  LogCoeffStats st;
  st.n_max = n_max;
  st.M = M;
  st.radius = radius;
  st.n_samples = N;
  st.aliasing_bound = std::pow(radius, M);
  st.noise_amplification = std::pow(radius, -2.0 * n_max);
  std::vector<cplx> col(N);
  for (int k = 0; k < n_max; ++k) {
    for (std::size_t s = 0; s < N; ++s) col[s] = gammas[s][k];
    MomentEstimate e = summarize(col);
    st.mean_gamma.push_back(e.value);
    st.se_gamma_re.push_back(e.std_error_re);
    st.se_gamma_im.push_back(e.std_error_im);
    for (std::size_t s = 0; s < N; ++s) col[s] = std::norm(gammas[s][k]);
    e = summarize(col);
    st.mean_sq.push_back(e.value.real());
    st.se_sq.push_back(e.std_error_re);
    if (k + 1 < n_max) {
      for (std::size_t s = 0; s < N; ++s) col[s] = gammas[s][k] * std::conj(gammas[s][k + 1]);
      e = summarize(col);
      st.cross.push_back(e.value);
      st.se_cross_re.push_back(e.std_error_re);
      st.se_cross_im.push_back(e.std_error_im);
    }
  }
  return st;
}

double milin_expectation(int n) {
  if (n < 1) throw DomainError("milin_expectation needs n >= 1");
  double h = 0.0;
  for (int k = 2; k <= n + 1; ++k) h += 1.0 / k;
  return -0.5 * (n + 1) * h;
}

}  // namespace sle
