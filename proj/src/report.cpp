#include "cylspec/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "cylspec/distribution.hpp"
#include "cylspec/errors.hpp"
#include "cylspec/generators.hpp"
#include "cylspec/io.hpp"
#include "cylspec/spectrum.hpp"
#include "cylspec/svg.hpp"

namespace cylspec {

const std::vector<std::pair<std::string, Graph>>& standard_fixtures() {
  static const std::vector<std::pair<std::string, Graph>> fixtures = [] {
    std::vector<std::pair<std::string, Graph>> list;
    for (const char* name : {"cycle-3", "cycle-4", "cycle-5", "cycle-6", "complete-4",
                             "complete-5", "hypercube-2", "hypercube-3", "petersen"}) {
      list.emplace_back(name, named_graph(name));
    }
    return list;
  }();
  return fixtures;
}

namespace {

std::string trend_label(const std::vector<double>& values) {
  bool increasing = true;
  bool decreasing = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] <= values[i - 1]) increasing = false;
    if (values[i] >= values[i - 1]) decreasing = false;
  }
  if (increasing) return "increasing";
  if (decreasing) return "decreasing";
  return "mixed";
}

std::string residual_text(double r) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.3e", r);
  return buffer;
}

}  // namespace

ReportResult run_report(const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) fail(ErrorKind::Io, "cannot create output directory " + out_dir.string());

  ReportResult result;
  auto record = [&](const std::filesystem::path& p) { result.files.push_back(p.filename().string()); };

  // figure 1: K_5 after 10 iterations, adjacency histogram on unit bins
  {
    Spectrum s = shift_iterate(base_spectrum(generate_complete(5)), 10);
    auto bins = histogram(s, 26, -11.5, 14.5);
    PlotOptions opts;
    opts.title = "Eigenvalue distribution, complete-5 cylinder iterate (N=10)";
    opts.x_label = "eigenvalue";
    opts.y_label = "probability mass";
    auto svg_path = out_dir / "fig1_k5_histogram.svg";
    auto csv_path = out_dir / "fig1_k5_histogram.csv";
    emit_histogram_svg(bins, svg_path, opts);
    emit_histogram_csv(bins, csv_path);
    record(svg_path);
    record(csv_path);
  }

  // figure 2: Q_2 walk CDFs tightening around 0
  {
    Spectrum base = base_spectrum(generate_hypercube(2));
    std::vector<LabeledCdf> curves;
    for (int n : {1, 5, 20, 100}) {
      Spectrum walk = normalize_walk(shift_iterate(base, n));
      curves.push_back({"N=" + std::to_string(n), EmpiricalCDF::from_spectrum(walk)});
    }
    PlotOptions opts;
    opts.title = "Walk-spectrum CDF, hypercube-2 cylinder iterates";
    opts.x_label = "normalized eigenvalue";
    opts.y_label = "cumulative probability";
    auto svg_path = out_dir / "fig2_q2_cdf_family.svg";
    emit_cdf_family_svg(curves, svg_path, opts);
    record(svg_path);
  }

  // Q_2 gap table
  {
    GapCurve curve = gap_decay_curve(generate_hypercube(2), 10);
    auto path = out_dir / "q2_gap_table.csv";
    emit_gap_csv(curve, path);
    record(path);
  }

  // Laplacian distance table
  {
    Spectrum base = base_spectrum(generate_hypercube(2));
    std::ostringstream csv;
    csv << "N,kolmogorov_to_uniform_0_2,kolmogorov_to_step_at_1\n";
    for (int n : {10, 100, 1000}) {
      Spectrum lap = laplacian_spectrum(shift_iterate(base, n));
      EmpiricalCDF cdf = EmpiricalCDF::from_spectrum(lap);
      LaplacianDistanceRow row;
      row.iterations = n;
      row.to_uniform_0_2 = kolmogorov_distance(cdf, ReferenceCDF::uniform(0.0, 2.0));
      row.to_step_at_one = kolmogorov_to_step_exact(cdf, 1.0).get_d();
      csv << n << "," << format_double_15(row.to_uniform_0_2) << ","
          << format_double_15(row.to_step_at_one) << "\n";
      result.laplacian_distances.push_back(row);
    }
    auto path = out_dir / "laplacian_distances.csv";
    write_text_file(csv.str(), path);
    record(path);
  }

  // verification summary
  {
    std::ostringstream text;
    text << "cylspec report summary\n";
    text << "======================\n\n";
    text << "verification grid (symbolic shift engine vs dense block eigensolve, tol 1e-08)\n";
    bool all = true;
    for (const auto& [name, graph] : standard_fixtures()) {
      for (int n = 0; n <= 4; ++n) {
        VerificationReport r = verify_shift_theorem(graph, name, n);
        all = all && r.passed;
        char line[128];
        std::snprintf(line, sizeof(line), "%-12s N=%d  eigenvalues=%-5ld residual=%s  %s\n",
                      name.c_str(), n, r.eigenvalue_count,
                      residual_text(r.max_residual).c_str(), r.passed ? "pass" : "FAIL");
        text << line;
        result.verification.push_back(std::move(r));
      }
    }
    result.all_passed = all;
    text << "\nall_verifications_passed=" << (all ? "true" : "false") << "\n\n";

    std::vector<double> uniform_seq;
    std::vector<double> step_seq;
    text << "laplacian distances (hypercube-2 iterates)\n";
    for (const auto& row : result.laplacian_distances) {
      text << "N=" << row.iterations
           << " to_uniform_0_2=" << format_double_15(row.to_uniform_0_2)
           << " to_step_at_1=" << format_double_15(row.to_step_at_one) << "\n";
      uniform_seq.push_back(row.to_uniform_0_2);
      step_seq.push_back(row.to_step_at_one);
    }
    text << "trend_to_uniform_0_2=" << trend_label(uniform_seq) << "\n";
    text << "trend_to_step_at_1=" << trend_label(step_seq) << "\n";

    auto path = out_dir / "summary.txt";
    write_text_file(text.str(), path);
    record(path);
  }

  return result;
}

}  // namespace cylspec
