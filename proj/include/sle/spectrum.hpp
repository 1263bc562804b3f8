#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sle {

struct PQ {
  double p = 0.0;
  double q = 0.0;
};

// The four spectra. beta_tip and beta_0 need p <= (4+k)^2/8k (Delta0),
// beta_1 needs 1 + 2k(p - q) >= 0 (Delta1); DomainError otherwise.
double beta_tip(double p, double kappa);
double beta_0(double p, double kappa);
double beta_lin(double p, double kappa);
double beta_1(double p, double q, double kappa);

// Region-IV spectrum of the m-fold transform.
double beta_m(double p, double q, double kappa, int m);

// Abscissa of Delta0: (4+k)^2/8k.
double delta0_abscissa(double kappa);

struct SpecialPoints {
  PQ P0, P1, Q0, Q1, T0, T1, T2;
  double p_star = 0.0;
  double p0 = 0.0;
  double p0prime = 0.0;
  double p0dblprime = 0.0;
};

SpecialPoints special_points(double kappa);

enum class Curve { redParabola, greenParabola, blueQuartic, D0, D1, D0prime, Delta0, Delta1 };

std::string_view curve_name(Curve c);
Curve curve_from_name(std::string_view name);  // UsageError on unknown ids
const std::vector<Curve>& all_curves();

// Parameters: gamma (red, quartic), gamma' (green), q (D0, D0prime,
// Delta0), p (D1, Delta1).
PQ curve_eval(Curve c, double kappa, double param);

// Cartesian equation divided by the sum of magnitudes of its terms.
double cartesian_residual(Curve c, double kappa, double p, double q);

// Discriminant under the root of the quartic parametrization.
double quartic_delta(double kappa, double gamma);

enum class Region { I = 1, II = 2, III = 3, IV = 4 };
std::string_view region_name(Region r);

struct SpectrumPoint {
  double p = 0.0;
  double q = 0.0;
  double kappa = 0.0;
  int m = 1;
  Region region = Region::II;
  // set for points on a separatrix: the other region meeting there
  std::optional<Region> adjacent;
  double beta = 0.0;

  bool on_boundary() const { return adjacent.has_value(); }
};

// Four-region partition for one kappa. Construction samples the quartic
// branch and verifies that its p is monotone (std::logic_error if not).
class PhaseDiagram {
 public:
  explicit PhaseDiagram(double kappa);

  double kappa() const { return kappa_; }
  const SpecialPoints& points() const { return sp_; }

  // Ordinate of the composite lower boundary (quartic, green arc, D1).
  double boundary_q(double p) const;
  // Quartic branch parameter gamma >= 1 + 2/k with p_Q(gamma) = p, p <= p0'.
  double quartic_gamma_at(double p) const;
  // Green arc parameter gamma' with p_G(gamma') = p.
  double green_gamma_at(double p) const;

  SpectrumPoint classify(double p, double q) const;

 private:
  double kappa_;
  SpecialPoints sp_;
};

SpectrumPoint classify(double p, double q, double kappa);

// T_m(p, q) = (p, (1 - 1/m) p + q/m) and its inverse. DomainError for m = 0.
PQ mfold_map(int m, PQ pq);
PQ mfold_inverse(int m, PQ pq);

SpectrumPoint classify_mfold(double p, double q, double kappa, int m);

// kappa -> 0 partition: red 3p - 2q = 0, green 3p - 2q - 1 = 0, quartic
// q = 2p (p <= -1), Q0 -> (-1, -2).
struct KoebeCurve {
  std::string name;
  double a, b, c;  // a p + b q + c = 0
  double p_lo, p_hi;
};
struct KoebePartition {
  std::vector<KoebeCurve> curves;
  PQ Q0;
};
KoebePartition koebe_limit_partition();

// Three-region limit classification (I: -p - 1, II: 0, IV: 3p - 2q - 1).
SpectrumPoint classify_koebe(double p, double q);

}  // namespace sle
