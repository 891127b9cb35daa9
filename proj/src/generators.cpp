#include "cylspec/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "cylspec/errors.hpp"

namespace cylspec {

Graph generate_cycle(int n) {
  if (n < 3) fail(ErrorKind::InvalidParameter, "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<Graph::Edge> edges;
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph(n, std::move(edges));
}

Graph generate_complete(int n) {
  if (n < 2) fail(ErrorKind::InvalidParameter, "complete graph needs n >= 2, got " + std::to_string(n));
  std::vector<Graph::Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));
}

namespace {

// j-th binary-reflected Gray code word.
unsigned gray(unsigned j) { return j ^ (j >> 1); }

std::string bit_label(unsigned word, int d) {
  std::string label(d, '0');
  for (int b = 0; b < d; ++b) {
    if (word & (1u << (d - 1 - b))) label[b] = '1';
  }
  return label;
}

}  // namespace

Graph generate_hypercube(int d, int dim_cap) {
  if (d < 1) fail(ErrorKind::InvalidParameter, "hypercube needs d >= 1, got " + std::to_string(d));
  if (d > dim_cap || d > 25) {
    fail(ErrorKind::SizeGuard, "hypercube dimension " + std::to_string(d) +
                                   " above the cap of " +
                                   std::to_string(std::min(dim_cap, 25)));
  }
  unsigned count = 1u << d;
  std::vector<int> position(count);
  std::vector<std::string> labels(count);
  for (unsigned j = 0; j < count; ++j) {
    position[gray(j)] = static_cast<int>(j);
    labels[j] = bit_label(gray(j), d);
  }
  std::vector<Graph::Edge> edges;
  edges.reserve(static_cast<std::size_t>(d) * count / 2);
  for (unsigned word = 0; word < count; ++word) {
    for (int b = 0; b < d; ++b) {
      unsigned other = word ^ (1u << b);
      if (word < other) edges.emplace_back(position[word], position[other]);
    }
  }
  return Graph(static_cast<int>(count), std::move(edges), std::move(labels));
}

Graph generate_petersen() {
  std::vector<Graph::Edge> edges;
  edges.reserve(15);
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);        // outer 5-cycle
    edges.emplace_back(i, i + 5);              // spokes
    edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, std::move(edges));
}

bool is_generator_name(const std::string& name) {
  if (name == "petersen") return true;
  for (const char* prefix : {"cycle-", "complete-", "hypercube-"}) {
    if (name.rfind(prefix, 0) == 0) return true;
  }
  return false;
}

Graph named_graph(const std::string& name) {
  if (name == "petersen") return generate_petersen();
  auto dash = name.find('-');
  if (dash != std::string::npos) {
    std::string family = name.substr(0, dash);
    std::string param_text = name.substr(dash + 1);
    int param = 0;
    try {
      std::size_t used = 0;
      param = std::stoi(param_text, &used);
      if (used != param_text.size()) throw std::invalid_argument(param_text);
    } catch (const std::exception&) {
      fail(ErrorKind::InvalidParameter, "bad generator parameter '" + param_text + "' in '" + name + "'");
    }
    if (family == "cycle") return generate_cycle(param);
    if (family == "complete") return generate_complete(param);
    if (family == "hypercube") return generate_hypercube(param);
  }
  fail(ErrorKind::InvalidParameter,
       "unknown generator '" + name + "' (expected cycle-N, complete-N, hypercube-D, or petersen)");
}

}  // namespace cylspec
