#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cylspec/config.hpp"

namespace cylspec {

/// Undirected simple graph. Immutable after construction; edges are stored
/// once as (u, v) with u < v, sorted lexicographically.
class Graph {
 public:
  using Edge = std::pair<int, int>;

  Graph(int vertex_count, std::vector<Edge> edges,
        std::vector<std::string> labels = {});

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& neighbors() const { return adjacency_; }
  int degree(int v) const;
  bool has_edge(int u, int v) const;

  /// Empty when the graph is unlabeled, else one label per vertex.
  const std::vector<std::string>& labels() const { return labels_; }

  /// Structural equality; labels are decoration and do not participate.
  bool operator==(const Graph& other) const {
    return vertex_count_ == other.vertex_count_ && edges_ == other.edges_;
  }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::string> labels_;
};

/// Position of a cylinder vertex: which base vertex it copies and which of
/// the two layers it sits in. The canonical vertex order is all of layer 0
/// (base order preserved), then all of layer 1, so the adjacency matrix is
/// the block form [[A, I], [I, A]].
struct CylinderLabel {
  int base_vertex;
  int layer;  // 0 or 1
  bool operator==(const CylinderLabel&) const = default;
};

CylinderLabel cylinder_label(int vertex, int base_vertex_count);
int cylinder_vertex(const CylinderLabel& label, int base_vertex_count);

/// Common degree k, or a not-regular error naming two offending vertices.
int check_regular(const Graph& g);

bool is_bipartite(const Graph& g);

/// A 2-coloring (values 0/1) when one exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// Length of the shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Two copies of g plus the perfect matching between them.
Graph cylinder(const Graph& g);

/// n-fold cylinder; guarded so the explicit construction stays desk-sized.
Graph iterate_cylinder(const Graph& g, int n,
                       long explicit_cap = default_limits().explicit_cap);

}  // namespace cylspec
