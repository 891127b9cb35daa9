#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cylspec/distribution.hpp"
#include "cylspec/errors.hpp"
#include "cylspec/generators.hpp"
#include "cylspec/io.hpp"
#include "cylspec/report.hpp"
#include "cylspec/spectrum.hpp"
#include "cylspec/svg.hpp"
#include "cylspec/verify.hpp"

namespace {

using namespace cylspec;

Graph resolve_graph(const std::string& source) {
  if (is_generator_name(source)) return named_graph(source);
  return load_edge_list(source);
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string girth_text(const Graph& g) {
  auto v = girth(g);
  return v ? std::to_string(*v) : "inf";
}

std::filesystem::path with_stem_suffix(const std::filesystem::path& path,
                                       const std::string& suffix) {
  std::filesystem::path out = path;
  out.replace_filename(path.stem().string() + suffix + path.extension().string());
  return out;
}

Spectrum spectrum_of_kind(const Graph& g, int n, const std::string& kind, int dense_cap) {
  Spectrum s = shift_iterate(base_spectrum(g, dense_cap), n);
  SpectrumKind target = kind_from_name(kind);
  if (target == SpectrumKind::Walk) return normalize_walk(s);
  if (target == SpectrumKind::Laplacian) return laplacian_spectrum(s);
  return s;
}

void print_spectrum_summary(const Spectrum& s) {
  std::cout << "kind=" << kind_name(s.kind()) << "\n";
  std::cout << "base_regularity=" << s.base_regularity() << "\n";
  std::cout << "iterations=" << s.iterations() << "\n";
  std::cout << "distinct_values=" << s.distinct_count() << "\n";
  std::cout << "total_mass=" << bigint_to_string(s.total_mass()) << "\n";
  if (s.distinct_count() >= 2) {
    std::cout << "gap=" << format_double_15(spectral_gap(s)) << "\n";
    if (s.exact()) {
      std::cout << "gap_exact=" << rational_to_string(spectral_gap_exact(s)) << "\n";
    }
  } else {
    std::cout << "gap=nan\n";
  }
  std::cout << "mean=" << format_double_15(moments(s, 1)) << "\n";
  std::cout << "variance=" << format_double_15(moments(s, 2)) << "\n";
}

struct NRange {
  int lo = 0;
  int hi = 0;
};

NRange parse_n_range(const std::string& text) {
  NRange range;
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      range.lo = range.hi = std::stoi(text);
    } else {
      range.lo = std::stoi(text.substr(0, dots));
      range.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    fail(ErrorKind::InvalidParameter, "bad iteration range '" + text + "' (expected N or A..B)");
  }
  if (range.lo < 0 || range.hi < range.lo) {
    fail(ErrorKind::InvalidParameter, "bad iteration range '" + text + "'");
  }
  return range;
}

int run_gen(const std::string& family, std::optional<int> param,
            const std::string& out) {
  std::string name = family;
  if (family.find('-') == std::string::npos && family != "petersen") {
    if (!param) fail(ErrorKind::InvalidParameter, "generator '" + family + "' needs a parameter");
    name = family + "-" + std::to_string(*param);
  } else if (param) {
    fail(ErrorKind::InvalidParameter, "parameter given twice in '" + family + "'");
  }
  Graph g = named_graph(name);
  std::cout << "family=" << name << "\n";
  std::cout << "vertices=" << g.vertex_count() << "\n";
  std::cout << "edges=" << g.edge_count() << "\n";
  std::cout << "k=" << check_regular(g) << "\n";
  std::cout << "bipartite=" << bool_text(is_bipartite(g)) << "\n";
  std::cout << "girth=" << girth_text(g) << "\n";
  if (!out.empty()) {
    save_edge_list(g, out);
    std::cout << "file=" << out << "\n";
  }
  return 0;
}

int run_spectrum(const std::string& source, int n, const std::string& kind,
                 const std::string& out, int dense_cap) {
  Spectrum s = spectrum_of_kind(resolve_graph(source), n, kind, dense_cap);
  print_spectrum_summary(s);
  if (!out.empty()) {
    save_spectrum(s, out);
    std::cout << "file=" << out << "\n";
  }
  return 0;
}

int run_gap(const std::string& source, int n_max, const std::string& out, int dense_cap) {
  GapCurve curve = gap_decay_curve(resolve_graph(source), n_max, dense_cap);
  std::cout << "points=" << curve.points.size() << "\n";
  if (curve.degenerate_top) {
    std::cout << "warning=top-eigenvalue-multiplicity-above-1 (disconnected base)\n";
  }
  emit_gap_csv(curve, out);
  std::cout << "file=" << out << "\n";
  return 0;
}

std::pair<int, std::pair<double, double>> auto_bins(const Spectrum& s) {
  double lo = s.min_value();
  double hi = s.max_value();
  if (lo == hi) return {1, {lo - 0.5, hi + 0.5}};
  if (s.exact() && s.kind() == SpectrumKind::Adjacency) {
    // integer lattice: unit bins centered on integers
    return {static_cast<int>(std::llround(hi - lo)) + 1, {lo - 0.5, hi + 0.5}};
  }
  double pad = 0.02 * (hi - lo);
  return {40, {lo - pad, hi + pad}};
}

int run_dist(const std::string& source, int n, const std::vector<int>& family,
             const std::string& kind, int bins, const std::string& out,
             const std::string& out_svg, int dense_cap) {
  Graph g = resolve_graph(source);
  if (!family.empty()) {
    std::vector<LabeledCdf> curves;
    std::cout << "family=";
    for (std::size_t i = 0; i < family.size(); ++i) {
      std::cout << (i ? "," : "") << family[i];
    }
    std::cout << "\n";
    for (int fn : family) {
      Spectrum s = spectrum_of_kind(g, fn, kind, dense_cap);
      EmpiricalCDF cdf = EmpiricalCDF::from_spectrum(s);
      if (!out.empty()) {
        auto path = with_stem_suffix(out, "_n" + std::to_string(fn));
        emit_cdf_csv(cdf, path);
        std::cout << "file=" << path.string() << "\n";
      }
      curves.push_back({"N=" + std::to_string(fn), std::move(cdf)});
    }
    if (!out_svg.empty()) {
      PlotOptions opts;
      opts.title = kind + "-spectrum CDF, " + source + " cylinder iterates";
      opts.x_label = "eigenvalue";
      opts.y_label = "cumulative probability";
      emit_cdf_family_svg(curves, out_svg, opts);
      std::cout << "file=" << out_svg << "\n";
    }
    return 0;
  }

  Spectrum s = spectrum_of_kind(g, n, kind, dense_cap);
  auto [auto_count, range] = auto_bins(s);
  int bin_count = bins > 0 ? bins : auto_count;
  auto histo = histogram(s, bin_count, range.first, range.second);
  Rational in_range = 0;
  for (const auto& b : histo) in_range += b.mass;
  std::cout << "distinct_values=" << s.distinct_count() << "\n";
  std::cout << "bins=" << bin_count << "\n";
  std::cout << "mass_in_range=" << format_double_15(in_range.get_d()) << "\n";
  if (!out.empty()) {
    emit_histogram_csv(histo, out);
    std::cout << "file=" << out << "\n";
    auto cdf_path = with_stem_suffix(out, "_cdf");
    emit_cdf_csv(EmpiricalCDF::from_spectrum(s), cdf_path);
    std::cout << "file=" << cdf_path.string() << "\n";
  }
  if (!out_svg.empty()) {
    PlotOptions opts;
    opts.title = kind + " spectrum, " + source + " (N=" + std::to_string(n) + ")";
    opts.x_label = "eigenvalue";
    opts.y_label = "probability mass";
    emit_histogram_svg(histo, out_svg, opts);
    std::cout << "file=" << out_svg << "\n";
  }
  return 0;
}

int run_verify(const std::vector<std::string>& sources, bool all, const std::string& n_text,
               double tol, int dense_cap) {
  NRange range = parse_n_range(n_text);
  std::vector<std::pair<std::string, Graph>> fixtures;
  if (all || sources.empty()) {
    fixtures = standard_fixtures();
  } else {
    for (const auto& source : sources) fixtures.emplace_back(source, resolve_graph(source));
  }
  bool ok = true;
  for (const auto& [name, graph] : fixtures) {
    for (int n = range.lo; n <= range.hi; ++n) {
      VerificationReport r = verify_shift_theorem(graph, name, n, tol, kDenseMergeTol, dense_cap);
      ok = ok && r.passed;
      std::cout << "verify base=" << name << " n=" << n << " eigenvalues=" << r.eigenvalue_count
                << " max_residual=" << format_double_15(r.max_residual)
                << " status=" << (r.passed ? "pass" : "FAIL") << "\n";
      for (const auto& m : r.mismatches) {
        std::cout << "  mismatch dense_value=" << format_double_15(m.dense_value)
                  << " dense_count=" << m.dense_count
                  << " symbolic_value=" << format_double_15(m.symbolic_value)
                  << " symbolic_count=" << m.symbolic_count << "\n";
      }
    }
  }
  std::cout << "all=" << (ok ? "pass" : "FAIL") << "\n";
  return ok ? 0 : 1;
}

int run_report(const std::string& out_dir) {
  ReportResult result = cylspec::run_report(out_dir);
  for (const auto& f : result.files) std::cout << "file=" << f << "\n";
  std::cout << "verifications=" << result.verification.size() << "\n";
  std::cout << "all=" << (result.all_passed ? "pass" : "FAIL") << "\n";
  return result.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cylspec: exact spectra of iterated graph cylinders"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a graph and write it as an edge list");
  std::string gen_family;
  int gen_param = -1;
  std::string gen_out;
  gen->add_option("family", gen_family, "cycle|complete|hypercube|petersen or family-N")->required();
  gen->add_option("param", gen_param, "family parameter (e.g. cycle size)");
  gen->add_option("--out", gen_out, "edge-list output path");

  // spectrum
  auto* spectrum = app.add_subcommand("spectrum", "Compute an iterate spectrum symbolically");
  std::string sp_source, sp_kind = "adjacency", sp_out;
  int sp_n = 0, sp_cap = default_limits().dense_cap;
  spectrum->add_option("source", sp_source, "generator name (e.g. hypercube-2) or edge-list path")->required();
  spectrum->add_option("--n", sp_n, "cylinder iterations")->check(CLI::NonNegativeNumber);
  spectrum->add_option("--kind", sp_kind, "adjacency|walk|laplacian");
  spectrum->add_option("--out", sp_out, "spectrum document output path");
  spectrum->add_option("--dense-cap", sp_cap, "dense eigensolver size cap");

  // gap
  auto* gap = app.add_subcommand("gap", "Emit the normalized gap decay curve as CSV");
  std::string gap_source, gap_out;
  int gap_n_max = 10, gap_cap = default_limits().dense_cap;
  gap->add_option("source", gap_source, "generator name or edge-list path")->required();
  gap->add_option("--n-max", gap_n_max, "largest iteration count")->check(CLI::NonNegativeNumber);
  gap->add_option("--out", gap_out, "CSV output path")->required();
  gap->add_option("--dense-cap", gap_cap, "dense eigensolver size cap");

  // dist
  auto* dist = app.add_subcommand("dist", "Histogram and CDF emission");
  std::string dist_source, dist_kind = "adjacency", dist_out, dist_out_svg;
  int dist_n = 0, dist_bins = 0, dist_cap = default_limits().dense_cap;
  std::vector<int> dist_family;
  dist->add_option("source", dist_source, "generator name or edge-list path")->required();
  dist->add_option("--n", dist_n, "cylinder iterations")->check(CLI::NonNegativeNumber);
  dist->add_option("--family", dist_family, "iteration counts for an overlaid CDF family")
      ->delimiter(',');
  dist->add_option("--kind", dist_kind, "adjacency|walk|laplacian");
  dist->add_option("--bins", dist_bins, "histogram bin count (0 = automatic)");
  dist->add_option("--out", dist_out, "histogram CSV path (CDF written alongside)");
  dist->add_option("--out-svg", dist_out_svg, "SVG plot path");
  dist->add_option("--dense-cap", dist_cap, "dense eigensolver size cap");

  // verify
  auto* verify = app.add_subcommand("verify", "Symbolic-vs-dense verification grid");
  std::vector<std::string> verify_sources;
  bool verify_all = false;
  std::string verify_n = "0..4";
  double verify_tol = 1e-8;
  int verify_cap = default_limits().dense_cap;
  verify->add_option("source", verify_sources, "generator names or edge-list paths");
  verify->add_flag("--all", verify_all, "run the standard fixture set");
  verify->add_option("--n", verify_n, "iteration count or range A..B");
  verify->add_option("--tol", verify_tol, "eigenvalue comparison tolerance")
      ->check(CLI::PositiveNumber);
  verify->add_option("--dense-cap", verify_cap, "dense eigensolver size cap");

  // report
  auto* report = app.add_subcommand("report", "One-shot reproduction of figures and tables");
  std::string report_out;
  report->add_option("--out", report_out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(gen)) {
      return run_gen(gen_family,
                     gen->count("param") ? std::optional<int>(gen_param) : std::nullopt, gen_out);
    }
    if (app.got_subcommand(spectrum)) {
      return run_spectrum(sp_source, sp_n, sp_kind, sp_out, sp_cap);
    }
    if (app.got_subcommand(gap)) return run_gap(gap_source, gap_n_max, gap_out, gap_cap);
    if (app.got_subcommand(dist)) {
      if (!dist_family.empty() && dist->count("--n")) {
        fail(ErrorKind::InvalidParameter, "--n and --family are mutually exclusive");
      }
      return run_dist(dist_source, dist_n, dist_family, dist_kind, dist_bins, dist_out,
                      dist_out_svg, dist_cap);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_sources, verify_all, verify_n, verify_tol, verify_cap);
    }
    if (app.got_subcommand(report)) return run_report(report_out);
  } catch (const CylError& e) {
    std::cerr << "error (" << e.kind_name() << "): " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
