#include "cylspec/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cylspec/errors.hpp"

namespace cylspec {

EmpiricalCDF EmpiricalCDF::from_spectrum(const Spectrum& s) {
  BigInt total = s.total_mass();
  EmpiricalCDF cdf;
  cdf.jumps_.reserve(s.entries().size());
  BigInt acc = 0;
  for (const auto& e : s.entries()) {
    acc += e.multiplicity;
    Jump j;
    j.value = e.value_d;
    j.cumulative = make_rational(acc, total);
    j.cumulative_d = j.cumulative.get_d();
    cdf.jumps_.push_back(std::move(j));
  }
  return cdf;
}

namespace {

struct JumpValueLess {
  bool operator()(const EmpiricalCDF::Jump& j, double x) const { return j.value < x; }
  bool operator()(double x, const EmpiricalCDF::Jump& j) const { return x < j.value; }
};

}  // namespace

double EmpiricalCDF::at(double x) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x, JumpValueLess{});
  return it == jumps_.begin() ? 0.0 : std::prev(it)->cumulative_d;
}

double EmpiricalCDF::left(double x) const {
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), x, JumpValueLess{});
  return it == jumps_.begin() ? 0.0 : std::prev(it)->cumulative_d;
}

Rational EmpiricalCDF::at_exact(double x) const {
  auto it = std::upper_bound(jumps_.begin(), jumps_.end(), x, JumpValueLess{});
  return it == jumps_.begin() ? Rational(0) : std::prev(it)->cumulative;
}

Rational EmpiricalCDF::left_exact(double x) const {
  auto it = std::lower_bound(jumps_.begin(), jumps_.end(), x, JumpValueLess{});
  return it == jumps_.begin() ? Rational(0) : std::prev(it)->cumulative;
}

ReferenceCDF ReferenceCDF::step_at(double c) {
  ReferenceCDF r;
  r.family_ = Family::StepAt;
  r.a_ = c;
  return r;
}

ReferenceCDF ReferenceCDF::uniform(double a, double b) {
  if (!(a < b)) fail(ErrorKind::InvalidParameter, "uniform reference needs a < b");
  ReferenceCDF r;
  r.family_ = Family::Uniform;
  r.a_ = a;
  r.b_ = b;
  return r;
}

double ReferenceCDF::at(double x) const {
  if (family_ == Family::StepAt) return x >= a_ ? 1.0 : 0.0;
  if (x <= a_) return 0.0;
  if (x >= b_) return 1.0;
  return (x - a_) / (b_ - a_);
}

double ReferenceCDF::left(double x) const {
  if (family_ == Family::StepAt) return x > a_ ? 1.0 : 0.0;
  return at(x);  // continuous
}

std::vector<double> ReferenceCDF::breakpoints() const {
  if (family_ == Family::StepAt) return {a_};
  return {a_, b_};
}

double kolmogorov_distance(const EmpiricalCDF& cdf, const ReferenceCDF& reference) {
  double sup = 0.0;
  auto consider = [&](double x) {
    sup = std::max(sup, std::abs(cdf.at(x) - reference.at(x)));
    sup = std::max(sup, std::abs(cdf.left(x) - reference.left(x)));
  };
  for (const auto& j : cdf.jumps()) consider(j.value);
  for (double x : reference.breakpoints()) consider(x);
  return sup;
}

Rational kolmogorov_to_step_exact(const EmpiricalCDF& cdf, double c) {
  // against a step the sup is attained just below c or at c
  Rational below = cdf.left_exact(c);
  Rational above = Rational(1) - cdf.at_exact(c);
  return std::max(below, above);
}

double spectral_gap(const Spectrum& s) {
  if (s.distinct_count() < 2) {
    fail(ErrorKind::DegenerateSpectrum, "spectral gap needs at least two distinct eigenvalues");
  }
  const auto& entries = s.entries();
  return entries[entries.size() - 1].value_d - entries[entries.size() - 2].value_d;
}

Rational spectral_gap_exact(const Spectrum& s) {
  if (!s.exact()) {
    fail(ErrorKind::InvalidParameter, "exact gap requires an exact-valued spectrum");
  }
  if (s.distinct_count() < 2) {
    fail(ErrorKind::DegenerateSpectrum, "spectral gap needs at least two distinct eigenvalues");
  }
  const auto& entries = s.entries();
  return entries[entries.size() - 1].value - entries[entries.size() - 2].value;
}

namespace {

struct StepPoint {
  Rational key_exact;
  double key_d;
  Rational cumulative;
};

// Sup-norm distance between two right-continuous step CDFs given as jump
// lists ascending by key. Keys compare exactly when `exact`, else as
// doubles. The sup over all of R is attained right after some merged jump
// (left limits equal the previous after-event level, and both CDFs start
// at 0 and end at 1).
Rational step_cdf_sup(const std::vector<StepPoint>& f, const std::vector<StepPoint>& g,
                      bool exact) {
  auto key_less = [exact](const StepPoint& a, const StepPoint& b) {
    return exact ? a.key_exact < b.key_exact : a.key_d < b.key_d;
  };
  auto key_equal = [exact](const StepPoint& a, const StepPoint& b) {
    return exact ? a.key_exact == b.key_exact : a.key_d == b.key_d;
  };
  Rational sup = 0;
  Rational level_f = 0;
  Rational level_g = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < f.size() || j < g.size()) {
    bool advance_f;
    bool advance_g;
    if (i == f.size()) {
      advance_f = false;
      advance_g = true;
    } else if (j == g.size()) {
      advance_f = true;
      advance_g = false;
    } else if (key_equal(f[i], g[j])) {
      advance_f = advance_g = true;
    } else if (key_less(f[i], g[j])) {
      advance_f = true;
      advance_g = false;
    } else {
      advance_f = false;
      advance_g = true;
    }
    if (advance_f) level_f = f[i++].cumulative;
    if (advance_g) level_g = g[j++].cumulative;
    Rational diff = level_f - level_g;
    if (diff < 0) diff = -diff;
    if (diff > sup) sup = diff;
  }
  return sup;
}

std::vector<StepPoint> spectrum_step_points(const Spectrum& s, bool reflect) {
  BigInt total = s.total_mass();
  std::vector<StepPoint> points;
  points.reserve(s.entries().size());
  BigInt acc = 0;
  const auto& entries = s.entries();
  if (reflect) {
    for (auto it = entries.rbegin(); it != entries.rend(); ++it) {
      acc += it->multiplicity;
      points.push_back({s.exact() ? Rational(-it->value) : Rational(0), -it->value_d,
                        make_rational(acc, total)});
    }
  } else {
    for (const auto& e : entries) {
      acc += e.multiplicity;
      points.push_back({s.exact() ? e.value : Rational(0), e.value_d,
                        make_rational(acc, total)});
    }
  }
  return points;
}

}  // namespace

Rational symmetry_defect_exact(const Spectrum& s) {
  return step_cdf_sup(spectrum_step_points(s, false), spectrum_step_points(s, true),
                      s.exact());
}

double symmetry_defect(const Spectrum& s) { return symmetry_defect_exact(s).get_d(); }

double moments(const Spectrum& s, int order) {
  if (order != 1 && order != 2) {
    fail(ErrorKind::InvalidParameter, "moment order must be 1 or 2");
  }
  BigInt total = s.total_mass();
  if (s.exact()) {
    Rational mean = 0;
    for (const auto& e : s.entries()) mean += e.value * Rational(e.multiplicity);
    mean /= Rational(total);
    if (order == 1) return mean.get_d();
    Rational var = 0;
    for (const auto& e : s.entries()) {
      Rational d = e.value - mean;
      var += d * d * Rational(e.multiplicity);
    }
    var /= Rational(total);
    return var.get_d();
  }
  long double mean = 0.0L;
  for (const auto& e : s.entries()) {
    mean += static_cast<long double>(ratio_as_double(e.multiplicity, total)) * e.value_d;
  }
  if (order == 1) return static_cast<double>(mean);
  long double var = 0.0L;
  for (const auto& e : s.entries()) {
    long double d = e.value_d - mean;
    var += static_cast<long double>(ratio_as_double(e.multiplicity, total)) * d * d;
  }
  return static_cast<double>(var);
}

std::vector<HistogramBin> histogram(const Spectrum& s, int bins, double lo, double hi) {
  if (bins < 1) fail(ErrorKind::InvalidParameter, "histogram needs at least one bin");
  if (!(lo < hi)) fail(ErrorKind::InvalidParameter, "histogram range needs lo < hi");
  double width = (hi - lo) / bins;
  std::vector<HistogramBin> out(static_cast<std::size_t>(bins));
  for (int i = 0; i < bins; ++i) {
    out[i].lo = lo + i * width;
    out[i].hi = (i == bins - 1) ? hi : lo + (i + 1) * width;
    out[i].mass = 0;
  }
  BigInt total = s.total_mass();
  for (const auto& e : s.entries()) {
    double v = e.value_d;
    if (v < lo || v > hi) continue;
    int idx = static_cast<int>(std::floor((v - lo) / width));
    idx = std::clamp(idx, 0, bins - 1);
    // half-open bins: nudge up when rounding placed v below its bin
    while (idx + 1 < bins && v >= out[idx + 1].lo) ++idx;
    while (idx > 0 && v < out[idx].lo) --idx;
    out[idx].mass += make_rational(e.multiplicity, total);
  }
  for (auto& bin : out) bin.mass_d = bin.mass.get_d();
  return out;
}

Rational mass_outside(const Spectrum& s, const Rational& threshold) {
  BigInt total = s.total_mass();
  BigInt outside = 0;
  double t = threshold.get_d();
  for (const auto& e : s.entries()) {
    bool is_outside;
    if (s.exact()) {
      Rational magnitude = e.value < 0 ? Rational(-e.value) : e.value;
      is_outside = magnitude > threshold;
    } else {
      is_outside = std::abs(e.value_d) > t;
    }
    if (is_outside) outside += e.multiplicity;
  }
  return make_rational(outside, total);
}

GapCurve gap_decay_curve(const Graph& g, int n_max, int dense_cap) {
  if (n_max < 0) fail(ErrorKind::InvalidParameter, "n_max must be nonnegative");
  Spectrum base = base_spectrum(g, dense_cap);
  GapCurve curve;
  curve.degenerate_top = base.entries().back().multiplicity > 1;
  curve.points.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    Spectrum walk = normalize_walk(shift_iterate(base, n));
    GapCurvePoint point;
    point.iterations = n;
    point.gap = spectral_gap(walk);
    if (walk.exact()) point.gap_exact = rational_to_string(spectral_gap_exact(walk));
    curve.points.push_back(std::move(point));
  }
  return curve;
}

DistributionSummary summarize(const Spectrum& s) {
  DistributionSummary summary;
  summary.gap = spectral_gap(s);
  summary.normalized_gap =
      s.kind() == SpectrumKind::Adjacency ? summary.gap / s.degree() : summary.gap;
  summary.mean = moments(s, 1);
  summary.variance = moments(s, 2);
  summary.symmetry_defect = symmetry_defect(s);
  EmpiricalCDF cdf = EmpiricalCDF::from_spectrum(s);
  summary.kolmogorov_to_step_at_zero = kolmogorov_to_step_exact(cdf, 0.0).get_d();
  if (s.kind() == SpectrumKind::Laplacian) {
    summary.kolmogorov_to_uniform_0_2 = kolmogorov_distance(cdf, ReferenceCDF::uniform(0.0, 2.0));
    summary.kolmogorov_to_step_at_one = kolmogorov_to_step_exact(cdf, 1.0).get_d();
  }
  return summary;
}

}  // namespace cylspec
