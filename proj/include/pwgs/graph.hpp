#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pwgs/errors.hpp"

namespace pwgs {

// Finite simple graph: undirected, unweighted, no loops, no multi-edges,
// connected, every vertex of degree >= 1.  These are hard invariants; the
// only way to obtain a Graph is through build_graph, which enforces them.
class Graph {
 public:
  int vertex_count() const { return static_cast<int>(adjacency_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& neighbors(int v) const {
    check_vertex(v);
    return adjacency_[v];
  }
  int degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adjacency_[v].size());
  }
  int max_degree() const { return max_degree_; }
  bool adjacent(int u, int v) const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<std::pair<int, int>> edge_list() const;

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      fail(ErrorCode::VertexOutOfRange,
           "vertex " + std::to_string(v) + " outside [0, " +
               std::to_string(vertex_count()) + ")");
  }

 private:
  friend Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
  int edge_count_ = 0;
  int max_degree_ = 0;
};

// Validates and builds: n >= 1, endpoints in range, no loops, no duplicate
// edges (in either orientation), connected, minimum degree >= 1.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Generators.  Parameters that would produce a graph violating the Graph
// invariants (or a single vertex) raise InvalidParameter.
Graph make_path(int n);                          // n >= 2
Graph make_cycle(int n);                         // n >= 3
Graph make_complete(int n);                      // n >= 2
// Box lattice with the given side lengths; wraparound closes each axis into
// a cycle and requires every side >= 3 (shorter sides would create loops or
// parallel edges).  Without wraparound at least two vertices are required.
Graph make_lattice_box(const std::vector<int>& dims, bool wraparound);
// Rooted tree, branching[l] children for every vertex at depth l.
Graph make_radial_tree(const std::vector<int>& branching);
// Uniform random spanning tree plus independent edges with the given
// probability.  Deterministic for a fixed seed.
Graph make_random_connected(int n, double edge_probability, std::uint64_t seed);

// Sorted, duplicate-free set of vertex ids.  Range checks against a graph
// happen at the point of use (check_range).
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<int> members);

  static VertexSet full(int n);

  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool empty() const { return members_.empty(); }
  bool contains(int v) const;
  VertexSet complement(int n) const;
  void check_range(int n) const;

  bool operator==(const VertexSet& other) const = default;

 private:
  std::vector<int> members_;
};

struct BoundaryClosure {
  VertexSet boundary;  // vertices outside s adjacent to s
  VertexSet closure;   // s plus its boundary
};
BoundaryClosure boundary_and_closure(const Graph& g, const VertexSet& s);

bool is_independent_set(const Graph& g, const VertexSet& s);

// Greedy maximal independent set.  Without a seed, vertices are scanned in
// ascending id order (deterministic canonical set); with a seed, in a
// seeded random order.
VertexSet maximal_independent_set(const Graph& g,
                                  std::optional<std::uint64_t> shuffle_seed =
                                      std::nullopt);

}  // namespace pwgs
