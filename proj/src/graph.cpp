#include "cylspec/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "cylspec/errors.hpp"

namespace cylspec {

Graph::Graph(int vertex_count, std::vector<Edge> edges,
             std::vector<std::string> labels)
    : vertex_count_(vertex_count), labels_(std::move(labels)) {
  if (vertex_count < 0) fail(ErrorKind::InvalidParameter, "negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != vertex_count) {
    fail(ErrorKind::Validation, "label count does not match vertex count");
  }
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u == v) {
      fail(ErrorKind::Validation, "self-loop at vertex " + std::to_string(u));
    }
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      fail(ErrorKind::Validation, "edge (" + std::to_string(u) + "," +
                                      std::to_string(v) + ") out of range for " +
                                      std::to_string(vertex_count) + " vertices");
    }
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    fail(ErrorKind::Validation, "duplicate edge (" + std::to_string(dup->first) +
                                    "," + std::to_string(dup->second) + ")");
  }
  adjacency_.assign(vertex_count_, {});
  for (auto [u, v] : edges_) {
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::degree(int v) const {
  if (v < 0 || v >= vertex_count_) fail(ErrorKind::InvalidParameter, "vertex out of range");
  return static_cast<int>(adjacency_[v].size());
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

CylinderLabel cylinder_label(int vertex, int base_vertex_count) {
  if (vertex < 0 || vertex >= 2 * base_vertex_count) {
    fail(ErrorKind::InvalidParameter, "cylinder vertex out of range");
  }
  return vertex < base_vertex_count
             ? CylinderLabel{vertex, 0}
             : CylinderLabel{vertex - base_vertex_count, 1};
}

int cylinder_vertex(const CylinderLabel& label, int base_vertex_count) {
  if (label.base_vertex < 0 || label.base_vertex >= base_vertex_count ||
      (label.layer != 0 && label.layer != 1)) {
    fail(ErrorKind::InvalidParameter, "invalid cylinder label");
  }
  return label.base_vertex + label.layer * base_vertex_count;
}

int check_regular(const Graph& g) {
  if (g.vertex_count() == 0) {
    fail(ErrorKind::InvalidParameter, "regularity undefined for the empty graph");
  }
  int k = g.degree(0);
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != k) {
      fail(ErrorKind::NotRegular,
           "not regular: vertex 0 has degree " + std::to_string(k) +
               ", vertex " + std::to_string(v) + " has degree " +
               std::to_string(g.degree(v)));
    }
  }
  return k;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::deque<int> queue;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : g.neighbors()[u]) {
        if (color[v] == -1) {
          color[v] = 1 - color[u];
          queue.push_back(v);
        } else if (color[v] == color[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

namespace {

// Shortest cycle through `root`, via BFS non-tree-edge detection. Values are
// upper bounds per root; the minimum over all roots is exact.
int shortest_cycle_through(const Graph& g, int root) {
  constexpr int kNone = std::numeric_limits<int>::max();
  std::vector<int> dist(g.vertex_count(), -1);
  std::vector<int> parent(g.vertex_count(), -1);
  std::deque<int> queue;
  dist[root] = 0;
  queue.push_back(root);
  int best = kNone;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors()[u]) {
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        parent[v] = u;
        queue.push_back(v);
      } else if (v != parent[u] && u != parent[v]) {
        best = std::min(best, dist[u] + dist[v] + 1);
      }
    }
  }
  return best;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  constexpr int kNone = std::numeric_limits<int>::max();
  int best = kNone;
  for (int root = 0; root < g.vertex_count(); ++root) {
    best = std::min(best, shortest_cycle_through(g, root));
    if (best == 3) break;  // no shorter cycle exists in a simple graph
  }
  if (best == kNone) return std::nullopt;
  return best;
}

Graph cylinder(const Graph& g) {
  int n = g.vertex_count();
  std::vector<Graph::Edge> edges;
  edges.reserve(2 * g.edge_count() + n);
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(u + n, v + n);
  }
  for (int v = 0; v < n; ++v) edges.emplace_back(v, v + n);

  std::vector<std::string> labels;
  if (!g.labels().empty()) {
    labels.reserve(2 * n);
    for (int layer = 0; layer <= 1; ++layer) {
      for (int v = 0; v < n; ++v) {
        labels.push_back(g.labels()[v] + ":" + std::to_string(layer));
      }
    }
  }
  return Graph(2 * n, std::move(edges), std::move(labels));
}

Graph iterate_cylinder(const Graph& g, int n, long explicit_cap) {
  if (n < 0) fail(ErrorKind::InvalidParameter, "iteration count must be nonnegative");
  long final_count = g.vertex_count();
  for (int i = 0; i < n; ++i) {
    final_count *= 2;
    if (final_count > explicit_cap) {
      fail(ErrorKind::SizeGuard,
           "explicit cylinder iterate would have " + std::to_string(g.vertex_count()) +
               "*2^" + std::to_string(n) + " vertices, above the cap of " +
               std::to_string(explicit_cap) + "; use the symbolic spectrum path");
    }
  }
  Graph result = g;
  for (int i = 0; i < n; ++i) result = cylinder(result);
  return result;
}

}  // namespace cylspec
