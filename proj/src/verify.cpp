#include "cylspec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cylspec/dense.hpp"
#include "cylspec/spectrum.hpp"

namespace cylspec {

VerificationReport verify_shift_theorem(const Graph& g, const std::string& base_name,
                                        int iterations, double tol,
                                        double dense_merge_tol, int dense_cap) {
  VerificationReport report;
  report.base_name = base_name;
  report.iterations = iterations;

  // brute-force side: explicit block matrix, dense solve
  DenseSymmetricMatrix block =
      explicit_block_iterate(DenseSymmetricMatrix::adjacency_of(g), iterations, dense_cap);
  std::vector<double> dense = dense_spectrum(block, dense_cap);
  report.eigenvalue_count = static_cast<long>(dense.size());

  // symbolic side
  Spectrum symbolic = shift_iterate(base_spectrum(g, dense_cap), iterations);

  // positional pairing of the fully expanded ascending lists
  double max_residual = 0.0;
  {
    std::size_t di = 0;
    for (const auto& e : symbolic.entries()) {
      // multiplicities on the grid are far below 2^63
      long count = e.multiplicity.get_si();
      for (long c = 0; c < count && di < dense.size(); ++c, ++di) {
        max_residual = std::max(max_residual, std::abs(dense[di] - e.value_d));
      }
    }
  }
  report.max_residual = max_residual;

  // multiplicity comparison after clustering the dense output
  std::vector<std::pair<double, long>> clusters;
  std::size_t i = 0;
  while (i < dense.size()) {
    std::size_t j = i + 1;
    while (j < dense.size() && dense[j] - dense[j - 1] <= dense_merge_tol) ++j;
    clusters.emplace_back(0.5 * (dense[i] + dense[j - 1]), static_cast<long>(j - i));
    i = j;
  }

  bool counts_ok = clusters.size() == symbolic.entries().size();
  std::size_t pairs = std::min(clusters.size(), symbolic.entries().size());
  for (std::size_t p = 0; p < pairs; ++p) {
    const auto& sym = symbolic.entries()[p];
    bool value_ok = std::abs(clusters[p].first - sym.value_d) <= tol;
    bool mult_ok = BigInt(clusters[p].second) == sym.multiplicity;
    if (!value_ok || !mult_ok) {
      counts_ok = false;
      report.mismatches.push_back({clusters[p].first, clusters[p].second, sym.value_d,
                                   bigint_to_string(sym.multiplicity)});
    }
  }
  for (std::size_t p = pairs; p < clusters.size(); ++p) {
    report.mismatches.push_back({clusters[p].first, clusters[p].second,
                                 std::numeric_limits<double>::quiet_NaN(), "0"});
  }
  for (std::size_t p = pairs; p < symbolic.entries().size(); ++p) {
    const auto& sym = symbolic.entries()[p];
    report.mismatches.push_back({std::numeric_limits<double>::quiet_NaN(), 0, sym.value_d,
                                 bigint_to_string(sym.multiplicity)});
  }

  report.passed = counts_ok && report.mismatches.empty() && max_residual <= tol;
  return report;
}

}  // namespace cylspec
