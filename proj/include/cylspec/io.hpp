#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "cylspec/distribution.hpp"
#include "cylspec/graph.hpp"
#include "cylspec/spectrum.hpp"

namespace cylspec {

/// Edge-list format: header "vertices <n>", one "u v" line per edge with
/// 0-based u < v, '#' comments anywhere. Labels are not persisted.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);
void save_edge_list(const Graph& g, const std::filesystem::path& path);

/// Spectrum document: JSON with kind/base_regularity/iterations/
/// base_vertex_count, a "values" field ("exact" or "float"), and entries as
/// {value, multiplicity} strings. Exact rationals serialize as "p/q" and
/// floats as shortest-round-trip decimals, so parse(write(s)) == s
/// including big-integer multiplicities.
std::string write_spectrum(const Spectrum& s);
Spectrum parse_spectrum(const std::string& text);
Spectrum load_spectrum(const std::filesystem::path& path);
void save_spectrum(const Spectrum& s, const std::filesystem::path& path);

/// CSV schemas: "value,cumulative" and "bin_lo,bin_hi,mass", 15 significant
/// digits, one row per jump/bin. Writers are byte-deterministic.
void emit_cdf_csv(const EmpiricalCDF& cdf, const std::filesystem::path& path);
void emit_histogram_csv(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path);

/// Gap table CSV: "N,gap,gap_exact" (gap_exact empty on float paths).
void emit_gap_csv(const GapCurve& curve, const std::filesystem::path& path);

std::string format_double_15(double v);
void write_text_file(const std::string& content, const std::filesystem::path& path);

}  // namespace cylspec
