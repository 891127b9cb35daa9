#include "cylspec/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cylspec/errors.hpp"

namespace cylspec {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

void write_text_file(const std::string& content, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) fail(ErrorKind::Io, "write to " + path.string() + " failed");
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  long vertex_count = -1;
  std::vector<Graph::Edge> edges;
  while (std::getline(in, line)) {
    ++line_number;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;  // blank or comment-only line
    if (vertex_count < 0) {
      long n = 0;
      if (first != "vertices" || !(fields >> n) || n < 0) {
        fail(ErrorKind::Parse, "line " + std::to_string(line_number) +
                                   ": expected header 'vertices <n>'");
      }
      std::string extra;
      if (fields >> extra) {
        fail(ErrorKind::Parse, "line " + std::to_string(line_number) +
                                   ": trailing content after header");
      }
      vertex_count = n;
      continue;
    }
    long u = 0;
    long v = 0;
    std::string extra;
    try {
      std::size_t used = 0;
      u = std::stol(first, &used);
      if (used != first.size()) throw std::invalid_argument(first);
    } catch (const std::exception&) {
      fail(ErrorKind::Parse, "line " + std::to_string(line_number) + ": malformed edge");
    }
    if (!(fields >> v) || (fields >> extra)) {
      fail(ErrorKind::Parse, "line " + std::to_string(line_number) +
                                 ": expected exactly 'u v'");
    }
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      fail(ErrorKind::Validation, "line " + std::to_string(line_number) + ": edge (" +
                                      std::to_string(u) + "," + std::to_string(v) +
                                      ") out of range");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (vertex_count < 0) fail(ErrorKind::Parse, "missing 'vertices <n>' header");
  return Graph(static_cast<int>(vertex_count), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

Graph load_edge_list(const std::filesystem::path& path) {
  return parse_edge_list(read_file(path));
}

void save_edge_list(const Graph& g, const std::filesystem::path& path) {
  write_text_file(write_edge_list(g), path);
}

namespace {

std::string float_to_string(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

double float_from_string(const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    fail(ErrorKind::Parse, "malformed value '" + text + "'");
  }
  if (used != text.size()) fail(ErrorKind::Parse, "malformed value '" + text + "'");
  return v;
}

}  // namespace

std::string write_spectrum(const Spectrum& s) {
  nlohmann::json doc;
  doc["kind"] = kind_name(s.kind());
  doc["base_regularity"] = s.base_regularity();
  doc["iterations"] = s.iterations();
  doc["base_vertex_count"] = s.base_vertex_count();
  doc["values"] = s.exact() ? "exact" : "float";
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : s.entries()) {
    entries.push_back({{"value", s.exact() ? rational_to_string(e.value)
                                           : float_to_string(e.value_d)},
                       {"multiplicity", bigint_to_string(e.multiplicity)}});
  }
  doc["entries"] = std::move(entries);
  return doc.dump(2) + "\n";
}

Spectrum parse_spectrum(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed spectrum document: ") + e.what());
  }
  try {
    SpectrumKind kind = kind_from_name(doc.at("kind").get<std::string>());
    int k = doc.at("base_regularity").get<int>();
    int n = doc.at("iterations").get<int>();
    long vertex_count = doc.at("base_vertex_count").get<long>();
    std::string values_mode = doc.at("values").get<std::string>();
    if (values_mode != "exact" && values_mode != "float") {
      fail(ErrorKind::Parse, "unknown values mode '" + values_mode + "'");
    }
    bool exact = values_mode == "exact";
    if (!doc.at("entries").is_array() || doc.at("entries").empty()) {
      fail(ErrorKind::Validation, "spectrum document has an empty entries list");
    }
    std::vector<SpectrumEntry> entries;
    entries.reserve(doc.at("entries").size());
    for (const auto& item : doc.at("entries")) {
      SpectrumEntry entry;
      std::string value_text = item.at("value").get<std::string>();
      if (exact) {
        entry.value = rational_from_string(value_text);
        entry.value_d = entry.value.get_d();
      } else {
        entry.value_d = float_from_string(value_text);
      }
      entry.multiplicity = bigint_from_string(item.at("multiplicity").get<std::string>());
      if (entry.multiplicity <= 0) {
        fail(ErrorKind::Parse, "multiplicity must be a positive integer, got '" +
                                   item.at("multiplicity").get<std::string>() + "'");
      }
      entries.push_back(std::move(entry));
    }
    return Spectrum(kind, k, n, vertex_count, exact, std::move(entries));
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("invalid spectrum document: ") + e.what());
  }
}

Spectrum load_spectrum(const std::filesystem::path& path) {
  return parse_spectrum(read_file(path));
}

void save_spectrum(const Spectrum& s, const std::filesystem::path& path) {
  write_text_file(write_spectrum(s), path);
}

std::string format_double_15(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.15g", v);
  return buffer;
}

void emit_cdf_csv(const EmpiricalCDF& cdf, const std::filesystem::path& path) {
  if (cdf.jumps().empty()) fail(ErrorKind::InvalidParameter, "empty CDF");
  std::ostringstream out;
  out << "value,cumulative\n";
  for (const auto& j : cdf.jumps()) {
    out << format_double_15(j.value) << "," << format_double_15(j.cumulative_d) << "\n";
  }
  write_text_file(out.str(), path);
}

void emit_histogram_csv(const std::vector<HistogramBin>& bins,
                        const std::filesystem::path& path) {
  if (bins.empty()) fail(ErrorKind::InvalidParameter, "empty histogram");
  std::ostringstream out;
  out << "bin_lo,bin_hi,mass\n";
  for (const auto& b : bins) {
    out << format_double_15(b.lo) << "," << format_double_15(b.hi) << ","
        << format_double_15(b.mass_d) << "\n";
  }
  write_text_file(out.str(), path);
}

void emit_gap_csv(const GapCurve& curve, const std::filesystem::path& path) {
  std::ostringstream out;
  out << "N,gap,gap_exact\n";
  for (const auto& p : curve.points) {
    out << p.iterations << "," << format_double_15(p.gap) << "," << p.gap_exact << "\n";
  }
  write_text_file(out.str(), path);
}

}  // namespace cylspec
