#pragma once

#include <string>
#include <vector>

#include "cylspec/config.hpp"
#include "cylspec/graph.hpp"
#include "cylspec/numeric.hpp"

namespace cylspec {

enum class SpectrumKind { Adjacency, Walk, Laplacian };

std::string kind_name(SpectrumKind kind);
SpectrumKind kind_from_name(const std::string& name);

/// One distinct eigenvalue. `value` is meaningful only on exact spectra
/// (integer-lattice bases and their normalizations); `value_d` is always the
/// double view. Multiplicities are exact at any scale.
struct SpectrumEntry {
  Rational value;
  double value_d = 0.0;
  BigInt multiplicity;
};

/// Eigenvalue multiset of an N-fold cylinder iterate, as (value,
/// multiplicity) pairs ascending by value, plus the provenance needed to
/// interpret it: base regularity k, iteration count N, base vertex count.
/// The degree of the iterate is k+N; total multiplicity is |V|*2^N.
class Spectrum {
 public:
  Spectrum(SpectrumKind kind, int base_regularity, int iterations,
           long base_vertex_count, bool exact, std::vector<SpectrumEntry> entries);

  SpectrumKind kind() const { return kind_; }
  int base_regularity() const { return base_regularity_; }
  int iterations() const { return iterations_; }
  long base_vertex_count() const { return base_vertex_count_; }
  int degree() const { return base_regularity_ + iterations_; }
  bool exact() const { return exact_; }

  const std::vector<SpectrumEntry>& entries() const { return entries_; }
  int distinct_count() const { return static_cast<int>(entries_.size()); }
  BigInt total_mass() const;

  double min_value() const { return entries_.front().value_d; }
  double max_value() const { return entries_.back().value_d; }

  bool operator==(const Spectrum& other) const;

 private:
  SpectrumKind kind_;
  int base_regularity_;
  int iterations_;
  long base_vertex_count_;
  bool exact_;
  std::vector<SpectrumEntry> entries_;
};

/// One mixture component of an n-step iterate: the centered binomial lattice
/// spawned by a single base eigenvalue. Support is center + steps - 2j for
/// 0 <= j <= steps, with weight C(steps,j)/2^steps; the step probability is
/// fixed at 1/2 by the doubling construction.
struct ShiftedBinomial {
  Rational center;
  int steps;

  Rational support_point(int j) const;
  Rational weight(int j) const;
  static Rational probability() { return {1, 2}; }
};

/// The iterate spectrum as a mixture: one ShiftedBinomial per base entry,
/// paired with that entry's multiplicity.
std::vector<std::pair<ShiftedBinomial, BigInt>> mixture_components(const Spectrum& base,
                                                                   int n);

/// Merge tolerance at degree k+N (exact spectra merge by equality instead).
double merge_tolerance(int degree);

/// Adjacency spectrum of a regular base graph from the dense eigensolver,
/// merged into multiplicities. Integer-lattice outcomes are snapped exact.
Spectrum base_spectrum(const Graph& g, int dense_cap = default_limits().dense_cap);

/// One cylinder iteration: every (lambda, m) becomes (lambda-1, m) and
/// (lambda+1, m), coincident values merged.
Spectrum shift_once(const Spectrum& s);

/// n further iterations in one pass: each base (lambda, m) contributes
/// (lambda + n - 2j, C(n,j)*m) for 0 <= j <= n, then merge. Exact
/// multiplicities at any n; equals n-fold shift_once.
Spectrum shift_iterate(const Spectrum& s, int n);

/// Divide by the iterate degree k+N: the walk (normalized adjacency)
/// spectrum, values in [-1, 1].
Spectrum normalize_walk(const Spectrum& s);

/// lambda -> 1 - lambda/(k+N): the normalized Laplacian spectrum, in [0, 2].
Spectrum laplacian_spectrum(const Spectrum& s);

/// Q_d adjacency spectrum without an eigensolve: values d-2j with
/// multiplicity C(d,j).
Spectrum hypercube_spectrum_closed_form(int d);

}  // namespace cylspec
