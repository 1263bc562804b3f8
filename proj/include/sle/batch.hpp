#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sle/loewner.hpp"

namespace sle {

// Samples for streams first_stream, first_stream+1, ... evaluated at a
// common point list. Row-major: value(s, j) is sample s at point j.
struct SampleBatch {
  SimConfig cfg;  // stream_id unused; see first_stream
  std::uint64_t first_stream = 0;
  std::vector<cplx> points;
  std::size_t n_samples = 0;
  std::vector<cplx> log_f_over_z;
  std::vector<cplx> logfp;

  std::size_t n_points() const { return points.size(); }
  cplx ratio_at(std::size_t s, std::size_t j) const { return log_f_over_z[s * points.size() + j]; }
  cplx logfp_at(std::size_t s, std::size_t j) const { return logfp[s * points.size() + j]; }
  cplx logf_at(std::size_t s, std::size_t j) const;

  // Index of z in points (match within tol); UsageError if absent.
  std::size_t index_of(cplx z, double tol = 1e-14) const;
  WholePlaneSample sample(std::size_t s) const;
};

// Reference implementation: one sample after another.
SampleBatch generate_batch_serial(const SimConfig& cfg, std::span<const cplx> points,
                                  std::size_t n_samples, std::uint64_t first_stream = 0);

// OpenMP over samples. Results are bit-identical to the serial version
// for any worker count since each sample owns its output slot.
SampleBatch generate_batch(const SimConfig& cfg, std::span<const cplx> points,
                           std::size_t n_samples, std::uint64_t first_stream = 0);

struct StationarityRow {
  double horizon;
  double estimate;
  double std_error;
};

// Ê|z|^q |f'|^p / |f|^q across horizons, with common random numbers
// (same streams for every horizon).
std::vector<StationarityRow> stationarity_diagnostic(const SimConfig& cfg, cplx z,
                                                     std::span<const double> horizons,
                                                     std::size_t n_samples, double p = 2.0,
                                                     double q = 2.0);

}  // namespace sle
