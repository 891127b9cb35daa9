#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylspec/graph.hpp"
#include "cylspec/numeric.hpp"
#include "cylspec/spectrum.hpp"

namespace cylspec {

/// Right-continuous empirical CDF of a spectrum. Cumulative probabilities
/// are exact multiplicity ratios; the double views are their nearest
/// representable values.
class EmpiricalCDF {
 public:
  struct Jump {
    double value;
    Rational cumulative;
    double cumulative_d;
  };

  static EmpiricalCDF from_spectrum(const Spectrum& s);

  const std::vector<Jump>& jumps() const { return jumps_; }

  double at(double x) const;         // F(x)
  double left(double x) const;       // F(x-)
  Rational at_exact(double x) const;
  Rational left_exact(double x) const;

 private:
  std::vector<Jump> jumps_;
};

/// Reference distributions for Kolmogorov distances: a point mass (step
/// CDF) or the uniform law on an interval.
class ReferenceCDF {
 public:
  static ReferenceCDF step_at(double c);
  static ReferenceCDF uniform(double a, double b);

  double at(double x) const;
  double left(double x) const;
  /// Points where the sup can be attained beyond the empirical jumps.
  std::vector<double> breakpoints() const;

 private:
  enum class Family { StepAt, Uniform };
  Family family_;
  double a_ = 0.0;
  double b_ = 0.0;
};

/// Sup-norm distance, evaluated with both one-sided limits at every jump
/// point of either CDF.
double kolmogorov_distance(const EmpiricalCDF& cdf, const ReferenceCDF& reference);

/// Exact rational sup distance to a step CDF; valid because the sup against
/// a step is attained at a jump or at the step location.
Rational kolmogorov_to_step_exact(const EmpiricalCDF& cdf, double c);

/// lambda_1 - lambda_2 over the two largest distinct values.
double spectral_gap(const Spectrum& s);

/// Exact variant; requires an exact spectrum.
Rational spectral_gap_exact(const Spectrum& s);

/// Kolmogorov distance between the spectrum's CDF and the CDF of its
/// reflection through 0. Zero iff the multiset is symmetric.
double symmetry_defect(const Spectrum& s);
Rational symmetry_defect_exact(const Spectrum& s);

/// Multiplicity-weighted raw mean (order 1) or central variance (order 2).
double moments(const Spectrum& s, int order);

struct HistogramBin {
  double lo;
  double hi;
  Rational mass;
  double mass_d;
};

/// Probability mass per bin over [lo, hi): half-open bins, final bin
/// closed. Masses sum to the fraction of the spectrum inside the range.
std::vector<HistogramBin> histogram(const Spectrum& s, int bins, double lo, double hi);

/// Exact probability mass at |value| > threshold (walk-scale concentration).
Rational mass_outside(const Spectrum& s, const Rational& threshold);

struct GapCurvePoint {
  int iterations;
  double gap;
  std::string gap_exact;  // "p/q" when the exact path applies, else empty
};

struct GapCurve {
  std::vector<GapCurvePoint> points;
  bool degenerate_top = false;  // top eigenvalue multiplicity > 1 (disconnected base)
};

/// Normalized walk gap for 0 <= N <= n_max via the symbolic path.
GapCurve gap_decay_curve(const Graph& g, int n_max,
                         int dense_cap = default_limits().dense_cap);

struct DistributionSummary {
  double gap = 0.0;
  double normalized_gap = 0.0;
  double mean = 0.0;
  double variance = 0.0;
  double symmetry_defect = 0.0;
  double kolmogorov_to_step_at_zero = 0.0;
  std::optional<double> kolmogorov_to_uniform_0_2;  // laplacian spectra
  std::optional<double> kolmogorov_to_step_at_one;  // laplacian spectra
};

DistributionSummary summarize(const Spectrum& s);

}  // namespace cylspec
