#include "sle/universal.hpp"

#include <algorithm>
#include <cmath>

#include "sle/errors.hpp"

namespace sle {

B0Model B0Model::kraetzer(double p_dagger) {
  B0Model m;
  m.p_dagger = p_dagger;
  return m;
}

B0Model B0Model::from_table(std::vector<std::pair<double, double>> rows, double p_dagger) {
  if (rows.size() < 2) throw ConfigError("B0 table needs at least two rows");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (!(rows[i].first > rows[i - 1].first)) throw ConfigError("B0 table p values must increase");
  }
  B0Model m;
  m.kind = Kind::table;
  m.table = std::move(rows);
  m.p_dagger = p_dagger;
  return m;
}

double B0Model::operator()(double p) const {
  if (kind == Kind::kraetzer) return 0.25 * p * p;
  if (p <= table.front().first) return table.front().second;
  if (p >= table.back().first) return table.back().second;
  auto it = std::upper_bound(table.begin(), table.end(), p,
                             [](double v, const std::pair<double, double>& r) { return v < r.first; });
  const auto& [p1, b1] = *it;
  const auto& [p0, b0] = *(it - 1);
  return b0 + (b1 - b0) * (p - p0) / (p1 - p0);
}

double universal_Bp(double p, const B0Model& model) {
  if (p <= model.p_dagger) return -p - 1.0;
  if (p >= 2.0) return p - 1.0;
  return model(p);
}

double universal_B(double p, double q, const B0Model& model) {
  return std::max(universal_Bp(p, model), 3.0 * p - 2.0 * q - 1.0);
}

Region universal_region(double p, double q, const B0Model& model) {
  if (3.0 * p - 2.0 * q - 1.0 > universal_Bp(p, model)) return Region::IV;
  if (p <= model.p_dagger) return Region::I;
  if (p >= 2.0) return Region::III;
  return Region::II;
}

std::vector<CurveRow> universal_partition(const B0Model& model, int samples, double p_min,
                                          double p_max) {
  if (samples < 2) throw UsageError("need at least two samples per curve");
  std::vector<CurveRow> rows;
  auto piece = [&](const char* name, double a, double b, auto q_of) {
    if (!(b > a)) return;
    for (int i = 0; i < samples; ++i) {
      double p = a + (b - a) * i / (samples - 1);
      rows.push_back({name, p, p, q_of(p)});
    }
  };
  double pd = model.p_dagger;
  piece("tipLine", std::min(p_min, pd), pd, [](double p) { return 2.0 * p; });
  piece("bulkCurve", pd, 2.0, [&](double p) { return 0.5 * (3.0 * p - 1.0 - model(p)); });
  piece("linLine", 2.0, std::max(p_max, 2.0), [](double p) { return p; });
  return rows;
}

bool feng_mcgregor_domain(double p, double q) {
  return p >= 0.0 && q < std::min(2.0, 1.25 * p - 0.5);
}

}  // namespace sle
