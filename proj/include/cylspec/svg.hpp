#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cylspec/distribution.hpp"

namespace cylspec {

struct PlotOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
};

struct LabeledCdf {
  std::string label;
  EmpiricalCDF cdf;
};

/// Self-contained deterministic SVG (viewBox 0 0 960 600): axes, tick
/// labels, bars. Identical input gives identical bytes.
std::string render_histogram_svg(const std::vector<HistogramBin>& bins,
                                 const PlotOptions& options = {});

/// Overlaid right-continuous step curves with a legend, one per CDF.
std::string render_cdf_family_svg(const std::vector<LabeledCdf>& curves,
                                  const PlotOptions& options = {});

void emit_histogram_svg(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path,
                        const PlotOptions& options = {});
void emit_cdf_family_svg(const std::vector<LabeledCdf>& curves,
                         const std::filesystem::path& path,
                         const PlotOptions& options = {});

}  // namespace cylspec
