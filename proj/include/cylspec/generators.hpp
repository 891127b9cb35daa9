#pragma once

#include <string>

#include "cylspec/config.hpp"
#include "cylspec/graph.hpp"

namespace cylspec {

/// Cycle C_n, n >= 3. 2-regular; bipartite iff n is even.
Graph generate_cycle(int n);

/// Complete graph K_n, n >= 2.
Graph generate_complete(int n);

/// Hypercube Q_d: 2^d vertices labeled by bit strings, edges between labels
/// at Hamming distance 1. Vertices are ordered by the binary-reflected Gray
/// code, so consecutive rows of the adjacency matrix are adjacent vertices.
Graph generate_hypercube(int d, int dim_cap = default_limits().hypercube_dim_cap);

/// Petersen graph: 10 vertices, 15 edges, 3-regular, girth 5, non-bipartite.
Graph generate_petersen();

/// Resolves "cycle-6", "complete-5", "hypercube-3", "petersen" to a graph.
Graph named_graph(const std::string& name);

/// True when `name` looks like a generator spec rather than a file path.
bool is_generator_name(const std::string& name);

}  // namespace cylspec
