#include "sle/batch.hpp"

#include <cmath>
#include <exception>

#include "sle/errors.hpp"
#include "sle/estimators.hpp"

namespace sle {

cplx SampleBatch::logf_at(std::size_t s, std::size_t j) const {
  return ratio_at(s, j) + std::log(points[j]);
}

std::size_t SampleBatch::index_of(cplx z, double tol) const {
  for (std::size_t j = 0; j < points.size(); ++j) {
    if (std::abs(points[j] - z) <= tol) return j;
  }
  throw UsageError("point (" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) +
                   ") is not among the sample points");
}

WholePlaneSample SampleBatch::sample(std::size_t s) const {
  if (s >= n_samples) throw UsageError("sample index out of range");
  WholePlaneSample out;
  out.seed = cfg.seed;
  out.stream_id = first_stream + s;
  out.kappa = cfg.kappa;
  out.horizon = cfg.horizon;
  out.dt = cfg.dt;
  out.points = points;
  std::size_t m = points.size();
  out.log_f_over_z.assign(log_f_over_z.begin() + s * m, log_f_over_z.begin() + (s + 1) * m);
  out.logfp.assign(logfp.begin() + s * m, logfp.begin() + (s + 1) * m);
  return out;
}

namespace {

SampleBatch empty_batch(const SimConfig& cfg, std::span<const cplx> points, std::size_t n,
                        std::uint64_t first_stream) {
  cfg.validate();
  for (const cplx& z : points) {
    if (!(std::abs(z) <= cfg.r_max)) throw DomainError("point outside |z| <= r_max");
  }
  SampleBatch b;
  b.cfg = cfg;
  b.first_stream = first_stream;
  b.points.assign(points.begin(), points.end());
  b.n_samples = n;
  b.log_f_over_z.resize(n * points.size());
  b.logfp.resize(n * points.size());
  return b;
}

void fill_slot(SampleBatch& b, std::size_t s) {
  SimConfig c = b.cfg;
  c.stream_id = b.first_stream + s;
  DrivingPath path = sample_driver(c);
  std::vector<FlowState> st = evolve(path, c, b.points);
  std::size_t m = b.points.size();
  for (std::size_t j = 0; j < m; ++j) {
    b.log_f_over_z[s * m + j] = c.horizon + st[j].logratio;
    b.logfp[s * m + j] = c.horizon + st[j].logderiv;
  }
}

}  // namespace

SampleBatch generate_batch_serial(const SimConfig& cfg, std::span<const cplx> points,
                                  std::size_t n_samples, std::uint64_t first_stream) {
  SampleBatch b = empty_batch(cfg, points, n_samples, first_stream);
  for (std::size_t s = 0; s < n_samples; ++s) fill_slot(b, s);
  return b;
}

SampleBatch generate_batch(const SimConfig& cfg, std::span<const cplx> points,
                           std::size_t n_samples, std::uint64_t first_stream) {
  SampleBatch b = empty_batch(cfg, points, n_samples, first_stream);
  std::vector<std::exception_ptr> errors(n_samples);
  const long n = static_cast<long>(n_samples);
#pragma omp parallel for schedule(dynamic, 16)
  for (long s = 0; s < n; ++s) {
    try {
      fill_slot(b, static_cast<std::size_t>(s));
    } catch (...) {
      errors[s] = std::current_exception();
    }
  }
  // report the failure of the lowest stream, as the serial version would
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return b;
}

std::vector<StationarityRow> stationarity_diagnostic(const SimConfig& cfg, cplx z,
                                                     std::span<const double> horizons,
                                                     std::size_t n_samples, double p, double q) {
  for (std::size_t i = 1; i < horizons.size(); ++i) {
    if (!(horizons[i] > horizons[i - 1])) throw ConfigError("horizons must be increasing");
  }
  std::vector<StationarityRow> rows;
  if (n_samples == 0) return rows;
  const cplx pts[] = {z};
  for (double T : horizons) {
    SimConfig c = cfg;
    c.horizon = T;
    SampleBatch b = generate_batch(c, pts, n_samples, cfg.stream_id);
    MomentEstimate e = estimate_moduli(b, p, q, z);
    rows.push_back({T, e.value.real(), e.std_error});
  }
  return rows;
}

}  // namespace sle
