#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sle/spectrum.hpp"

namespace sle {

// Model for the unknown bulk universal spectrum B0 on [p_dagger, 2].
struct B0Model {
  enum class Kind { kraetzer, table };
  Kind kind = Kind::kraetzer;
  // (p, B0) pairs, increasing p, linearly interpolated (table kind)
  std::vector<std::pair<double, double>> table;
  double p_dagger = -2.0;

  static B0Model kraetzer(double p_dagger = -2.0);
  static B0Model from_table(std::vector<std::pair<double, double>> rows, double p_dagger = -2.0);

  double operator()(double p) const;
};

// B(p): -p - 1 for p <= p_dagger, B0 on [p_dagger, 2], p - 1 for p >= 2.
double universal_Bp(double p, const B0Model& model);

// max{B(p), 3p - 2q - 1}.
double universal_B(double p, double q, const B0Model& model);

// I (tip), II (B0), III (linear) or IV (3p - 2q - 1): the attaining term.
Region universal_region(double p, double q, const B0Model& model);

struct CurveRow {
  std::string curve;
  double param;
  double p;
  double q;
};

// q = 2p (p <= p_dagger), 2q = 3p - 1 - B0(p) (p_dagger <= p <= 2),
// q = p (p >= 2); samples per piece over a default window.
std::vector<CurveRow> universal_partition(const B0Model& model, int samples = 101,
                                          double p_min = -8.0, double p_max = 8.0);

// 0 <= p and q < min{2, 5p/4 - 1/2}.
bool feng_mcgregor_domain(double p, double q);

}  // namespace sle
