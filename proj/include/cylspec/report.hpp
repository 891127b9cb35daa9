#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/graph.hpp"
#include "cylspec/verify.hpp"

namespace cylspec {

/// The nine bases the verification grid runs over.
const std::vector<std::pair<std::string, Graph>>& standard_fixtures();

struct LaplacianDistanceRow {
  int iterations;
  double to_uniform_0_2;
  double to_step_at_one;
};

struct ReportResult {
  std::vector<VerificationReport> verification;
  std::vector<LaplacianDistanceRow> laplacian_distances;
  bool all_passed = false;
  std::vector<std::string> files;
};

/// One-shot reproduction into out_dir: the K_5 histogram and Q_2 CDF-family
/// figures (SVG + histogram CSV), the Q_2 walk-gap table, the Laplacian
/// distance table, and a verification summary. Deterministic bytes.
ReportResult run_report(const std::filesystem::path& out_dir);

}  // namespace cylspec
