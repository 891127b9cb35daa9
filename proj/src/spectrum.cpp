#include "cylspec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>

#include "cylspec/dense.hpp"
#include "cylspec/errors.hpp"

namespace cylspec {

std::string kind_name(SpectrumKind kind) {
  switch (kind) {
    case SpectrumKind::Adjacency: return "adjacency";
    case SpectrumKind::Walk: return "walk";
    case SpectrumKind::Laplacian: return "laplacian";
  }
  return "unknown";
}

SpectrumKind kind_from_name(const std::string& name) {
  if (name == "adjacency") return SpectrumKind::Adjacency;
  if (name == "walk") return SpectrumKind::Walk;
  if (name == "laplacian") return SpectrumKind::Laplacian;
  fail(ErrorKind::Parse, "unknown spectrum kind '" + name + "'");
}

double merge_tolerance(int degree) {
  return kMergeTolScale * std::max(1.0, static_cast<double>(degree));
}

Rational ShiftedBinomial::support_point(int j) const {
  if (j < 0 || j > steps) fail(ErrorKind::InvalidParameter, "support index out of range");
  return center + (steps - 2 * j);
}

Rational ShiftedBinomial::weight(int j) const {
  if (j < 0 || j > steps) fail(ErrorKind::InvalidParameter, "support index out of range");
  return make_rational(binomial_row(static_cast<unsigned>(steps))[static_cast<std::size_t>(j)],
                       pow2(static_cast<unsigned>(steps)));
}

std::vector<std::pair<ShiftedBinomial, BigInt>> mixture_components(const Spectrum& base,
                                                                   int n) {
  if (base.kind() != SpectrumKind::Adjacency) {
    fail(ErrorKind::InvalidKind, "mixture components require an adjacency spectrum");
  }
  if (!base.exact()) {
    fail(ErrorKind::InvalidParameter, "mixture components require an exact-valued spectrum");
  }
  if (n < 0) fail(ErrorKind::InvalidParameter, "iteration count must be nonnegative");
  std::vector<std::pair<ShiftedBinomial, BigInt>> out;
  out.reserve(base.entries().size());
  for (const auto& e : base.entries()) {
    out.push_back({ShiftedBinomial{e.value, n}, e.multiplicity});
  }
  return out;
}

Spectrum::Spectrum(SpectrumKind kind, int base_regularity, int iterations,
                   long base_vertex_count, bool exact,
                   std::vector<SpectrumEntry> entries)
    : kind_(kind),
      base_regularity_(base_regularity),
      iterations_(iterations),
      base_vertex_count_(base_vertex_count),
      exact_(exact),
      entries_(std::move(entries)) {
  if (base_regularity_ < 0) fail(ErrorKind::Validation, "negative base regularity");
  if (iterations_ < 0) fail(ErrorKind::Validation, "negative iteration count");
  if (base_vertex_count_ <= 0) fail(ErrorKind::Validation, "base vertex count must be positive");
  if (entries_.empty()) fail(ErrorKind::Validation, "spectrum has no entries");

  BigInt mass = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity <= 0) {
      fail(ErrorKind::Validation, "multiplicity must be positive");
    }
    if (i > 0) {
      bool ascending = exact_ ? entries_[i - 1].value < entries_[i].value
                              : entries_[i - 1].value_d < entries_[i].value_d;
      if (!ascending) fail(ErrorKind::Validation, "spectrum values must be strictly ascending");
    }
    if (exact_) entries_[i].value_d = entries_[i].value.get_d();
    mass += entries_[i].multiplicity;
  }
  BigInt expected = BigInt(base_vertex_count_) * pow2(static_cast<unsigned>(iterations_));
  if (mass != expected) {
    fail(ErrorKind::Validation, "total multiplicity " + bigint_to_string(mass) +
                                    " does not equal base_vertex_count*2^N = " +
                                    bigint_to_string(expected));
  }
}

BigInt Spectrum::total_mass() const {
  BigInt mass = 0;
  for (const auto& e : entries_) mass += e.multiplicity;
  return mass;
}

bool Spectrum::operator==(const Spectrum& other) const {
  if (kind_ != other.kind_ || base_regularity_ != other.base_regularity_ ||
      iterations_ != other.iterations_ ||
      base_vertex_count_ != other.base_vertex_count_ || exact_ != other.exact_ ||
      entries_.size() != other.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].multiplicity != other.entries_[i].multiplicity) return false;
    if (exact_) {
      if (entries_[i].value != other.entries_[i].value) return false;
    } else {
      if (entries_[i].value_d != other.entries_[i].value_d) return false;
    }
  }
  return true;
}

namespace {

// Groups an ascending list of (value, count) by gap: adjacent values within
// tol coalesce. Returns entries with midpoint-of-cluster representatives.
std::vector<SpectrumEntry> merge_float_entries(std::vector<std::pair<double, BigInt>> raw,
                                               double tol) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SpectrumEntry> merged;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i + 1;
    BigInt mult = raw[i].second;
    while (j < raw.size() && raw[j].first - raw[j - 1].first <= tol) {
      mult += raw[j].second;
      ++j;
    }
    SpectrumEntry entry;
    entry.value_d = 0.5 * (raw[i].first + raw[j - 1].first);
    entry.multiplicity = mult;
    merged.push_back(std::move(entry));
    i = j;
  }
  return merged;
}

std::vector<SpectrumEntry> entries_from_exact_map(const std::map<Rational, BigInt>& acc) {
  std::vector<SpectrumEntry> entries;
  entries.reserve(acc.size());
  for (const auto& [value, mult] : acc) {
    SpectrumEntry e;
    e.value = value;
    e.value_d = value.get_d();
    e.multiplicity = mult;
    entries.push_back(std::move(e));
  }
  return entries;
}

}  // namespace

Spectrum base_spectrum(const Graph& g, int dense_cap) {
  int k = check_regular(g);
  if (g.vertex_count() > dense_cap) {
    fail(ErrorKind::SizeGuard, "base graph has " + std::to_string(g.vertex_count()) +
                                   " vertices, above the dense cap of " +
                                   std::to_string(dense_cap));
  }
  std::vector<double> values = dense_spectrum(DenseSymmetricMatrix::adjacency_of(g), dense_cap);

  std::vector<std::pair<double, BigInt>> raw;
  raw.reserve(values.size());
  for (double v : values) raw.emplace_back(v, BigInt(1));
  std::vector<SpectrumEntry> merged = merge_float_entries(std::move(raw), merge_tolerance(k));

  bool integer_lattice = true;
  for (const auto& e : merged) {
    if (std::abs(e.value_d - std::round(e.value_d)) > kIntegerSnapTol) {
      integer_lattice = false;
      break;
    }
  }
  if (integer_lattice) {
    for (auto& e : merged) {
      e.value = Rational(static_cast<long>(std::llround(e.value_d)));
      e.value_d = e.value.get_d();
    }
  }
  return Spectrum(SpectrumKind::Adjacency, k, 0, g.vertex_count(), integer_lattice,
                  std::move(merged));
}

Spectrum shift_once(const Spectrum& s) { return shift_iterate(s, 1); }

Spectrum shift_iterate(const Spectrum& s, int n) {
  if (s.kind() != SpectrumKind::Adjacency) {
    fail(ErrorKind::InvalidKind, "shift iteration requires an adjacency spectrum, got " +
                                     kind_name(s.kind()));
  }
  if (n < 0) fail(ErrorKind::InvalidParameter, "iteration count must be nonnegative");
  if (n == 0) return s;

  std::vector<BigInt> row = binomial_row(static_cast<unsigned>(n));
  std::vector<SpectrumEntry> entries;

  if (s.exact()) {
    bool small_integers = std::all_of(
        s.entries().begin(), s.entries().end(), [](const SpectrumEntry& e) {
          return e.value.get_den() == 1 && mpz_fits_slong_p(e.value.get_num().get_mpz_t());
        });
    if (small_integers) {
      std::map<long, BigInt> acc;
      for (const auto& e : s.entries()) {
        long base = e.value.get_num().get_si();
        for (int j = 0; j <= n; ++j) acc[base + n - 2 * j] += row[j] * e.multiplicity;
      }
      entries.reserve(acc.size());
      for (const auto& [value, mult] : acc) {
        SpectrumEntry out;
        out.value = Rational(value);
        out.value_d = static_cast<double>(value);
        out.multiplicity = mult;
        entries.push_back(std::move(out));
      }
    } else {
      std::map<Rational, BigInt> acc;
      for (const auto& e : s.entries()) {
        for (int j = 0; j <= n; ++j) acc[e.value + (n - 2 * j)] += row[j] * e.multiplicity;
      }
      entries = entries_from_exact_map(acc);
    }
  } else {
    std::vector<std::pair<double, BigInt>> raw;
    raw.reserve(s.entries().size() * (n + 1));
    for (const auto& e : s.entries()) {
      for (int j = 0; j <= n; ++j) {
        raw.emplace_back(e.value_d + (n - 2 * j), row[j] * e.multiplicity);
      }
    }
    entries = merge_float_entries(std::move(raw),
                                  merge_tolerance(s.degree() + n));
  }

  return Spectrum(s.kind(), s.base_regularity(), s.iterations() + n,
                  s.base_vertex_count(), s.exact(), std::move(entries));
}

namespace {

Spectrum transform_by_degree(const Spectrum& s, SpectrumKind target,
                             bool laplacian) {
  if (s.kind() != SpectrumKind::Adjacency) {
    fail(ErrorKind::InvalidKind, "normalization requires an adjacency spectrum, got " +
                                     kind_name(s.kind()));
  }
  int d = s.degree();
  if (d == 0) {
    fail(ErrorKind::DegenerateDegree, "degree k+N is zero; nothing to normalize by");
  }
  std::vector<SpectrumEntry> entries = s.entries();
  if (laplacian) std::reverse(entries.begin(), entries.end());
  for (auto& e : entries) {
    if (s.exact()) {
      Rational scaled = make_rational(e.value.get_num(), e.value.get_den() * d);
      e.value = laplacian ? Rational(1) - scaled : scaled;
      e.value_d = e.value.get_d();
    } else {
      e.value_d = laplacian ? 1.0 - e.value_d / d : e.value_d / d;
    }
  }
  return Spectrum(target, s.base_regularity(), s.iterations(), s.base_vertex_count(),
                  s.exact(), std::move(entries));
}

}  // namespace

Spectrum normalize_walk(const Spectrum& s) {
  return transform_by_degree(s, SpectrumKind::Walk, /*laplacian=*/false);
}

Spectrum laplacian_spectrum(const Spectrum& s) {
  return transform_by_degree(s, SpectrumKind::Laplacian, /*laplacian=*/true);
}

Spectrum hypercube_spectrum_closed_form(int d) {
  if (d < 1) fail(ErrorKind::InvalidParameter, "hypercube needs d >= 1, got " + std::to_string(d));
  if (d > 62) {
    fail(ErrorKind::SizeGuard, "closed-form hypercube spectrum limited to d <= 62");
  }
  std::vector<BigInt> row = binomial_row(static_cast<unsigned>(d));
  std::vector<SpectrumEntry> entries;
  entries.reserve(d + 1);
  for (int j = d; j >= 0; --j) {
    SpectrumEntry e;
    e.value = Rational(d - 2 * j);
    e.value_d = static_cast<double>(d - 2 * j);
    e.multiplicity = row[static_cast<std::size_t>(j)];
    entries.push_back(std::move(e));
  }
  return Spectrum(SpectrumKind::Adjacency, d, 0, 1L << d, true, std::move(entries));
}

}  // namespace cylspec
