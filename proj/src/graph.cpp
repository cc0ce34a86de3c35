#include "pwgs/graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <string>

namespace pwgs {

bool Graph::adjacent(int u, int v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adjacency_[u])
      if (u < v) edges.emplace_back(u, v);
  return edges;  // already sorted: u ascending, neighbor lists sorted
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 0)
    fail(ErrorCode::EmptyGraph, "graph needs at least one vertex, got n=" +
                                    std::to_string(n));

  Graph g;
  g.adjacency_.resize(n);
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n)
      fail(ErrorCode::VertexOutOfRange,
           "edge endpoint " + std::to_string(u) + " outside [0, " +
               std::to_string(n) + ")");
    if (v < 0 || v >= n)
      fail(ErrorCode::VertexOutOfRange,
           "edge endpoint " + std::to_string(v) + " outside [0, " +
               std::to_string(n) + ")");
    if (u == v)
      fail(ErrorCode::LoopEdge,
           "loop edge (" + std::to_string(u) + "," + std::to_string(v) +
               "): loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      fail(ErrorCode::DuplicateEdge,
           "duplicate edge (" + std::to_string(key.first) + "," +
               std::to_string(key.second) + ")");
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  g.edge_count_ = static_cast<int>(seen.size());

  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  g.max_degree_ = 0;
  for (const auto& nb : g.adjacency_)
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));

  // connectivity: BFS from 0
  std::vector<char> visited(n, 0);
  std::queue<int> queue;
  queue.push(0);
  visited[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop();
    for (int v : g.adjacency_[u])
      if (!visited[v]) {
        visited[v] = 1;
        ++reached;
        queue.push(v);
      }
  }
  if (reached != n)
    fail(ErrorCode::Disconnected, "graph is disconnected (" +
                                      std::to_string(reached) + " of " +
                                      std::to_string(n) +
                                      " vertices reachable from 0)");

  // a connected graph with n >= 2 has min degree >= 1; only n == 1 can fail
  for (int v = 0; v < n; ++v)
    if (g.adjacency_[v].empty())
      fail(ErrorCode::DegreeZero,
           "vertex " + std::to_string(v) +
               " has degree 0; every vertex must have a neighbor");

  return g;
}

Graph make_path(int n) {
  if (n < 2)
    fail(ErrorCode::InvalidParameter,
         "path needs n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3)
    fail(ErrorCode::InvalidParameter,
         "cycle needs n >= 3, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return build_graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 2)
    fail(ErrorCode::InvalidParameter,
         "complete graph needs n >= 2, got " + std::to_string(n));
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return build_graph(n, edges);
}

Graph make_lattice_box(const std::vector<int>& dims, bool wraparound) {
  if (dims.empty())
    fail(ErrorCode::InvalidParameter, "lattice needs at least one dimension");
  long long total = 1;
  for (int d : dims) {
    if (d < 1)
      fail(ErrorCode::InvalidParameter,
           "lattice side must be >= 1, got " + std::to_string(d));
    if (wraparound && d < 3)
      fail(ErrorCode::InvalidParameter,
           "wraparound lattice side must be >= 3, got " + std::to_string(d));
    total *= d;
    if (total > 1'000'000)
      fail(ErrorCode::InvalidParameter, "lattice too large");
  }
  if (total < 2)
    fail(ErrorCode::InvalidParameter, "lattice must have at least 2 vertices");

  const int ndim = static_cast<int>(dims.size());
  std::vector<long long> stride(ndim, 1);
  for (int a = 1; a < ndim; ++a) stride[a] = stride[a - 1] * dims[a - 1];

  std::vector<std::pair<int, int>> edges;
  std::vector<int> coord(ndim, 0);
  for (long long id = 0; id < total; ++id) {
    for (int a = 0; a < ndim; ++a) {
      if (coord[a] + 1 < dims[a]) {
        edges.emplace_back(static_cast<int>(id),
                           static_cast<int>(id + stride[a]));
      } else if (wraparound) {
        // close the axis; sides >= 3 guarantee this edge is new and not a loop
        edges.emplace_back(static_cast<int>(id),
                           static_cast<int>(id - (dims[a] - 1) * stride[a]));
      }
    }
    for (int a = 0; a < ndim; ++a) {
      if (++coord[a] < dims[a]) break;
      coord[a] = 0;
    }
  }
  return build_graph(static_cast<int>(total), edges);
}

Graph make_radial_tree(const std::vector<int>& branching) {
  if (branching.empty())
    fail(ErrorCode::InvalidParameter,
         "radial tree needs at least one level of branching");
  for (int b : branching)
    if (b < 1)
      fail(ErrorCode::InvalidParameter,
           "branching factor must be >= 1, got " + std::to_string(b));

  std::vector<std::pair<int, int>> edges;
  std::vector<int> frontier = {0};
  int next_id = 1;
  for (int b : branching) {
    std::vector<int> next_frontier;
    for (int parent : frontier)
      for (int c = 0; c < b; ++c) {
        if (next_id > 1'000'000)
          fail(ErrorCode::InvalidParameter, "radial tree too large");
        edges.emplace_back(parent, next_id);
        next_frontier.push_back(next_id++);
      }
    frontier = std::move(next_frontier);
  }
  return build_graph(next_id, edges);
}

namespace {

// Decode a Prufer sequence into tree edges; sequences of length n-2 over
// [0, n) are in bijection with labeled trees, so a uniform sequence gives a
// uniform spanning tree.
std::vector<std::pair<int, int>> prufer_tree(int n,
                                             const std::vector<int>& seq) {
  std::vector<int> remaining(n, 1);
  for (int a : seq) ++remaining[a];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.insert(v);

  std::vector<std::pair<int, int>> edges;
  for (int a : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
    if (--remaining[a] == 1) leaves.insert(a);
  }
  int u = *leaves.begin();
  int v = *std::next(leaves.begin());
  edges.emplace_back(std::min(u, v), std::max(u, v));
  return edges;
}

}  // namespace

Graph make_random_connected(int n, double edge_probability,
                            std::uint64_t seed) {
  if (n < 2)
    fail(ErrorCode::InvalidParameter,
         "random connected graph needs n >= 2, got " + std::to_string(n));
  if (!(edge_probability >= 0.0 && edge_probability <= 1.0))
    fail(ErrorCode::InvalidParameter, "edge probability must be in [0, 1]");

  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
  } else {
    std::vector<int> seq(n - 2);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int& a : seq) a = pick(rng);
    edges = prufer_tree(n, seq);
  }

  std::set<std::pair<int, int>> have(edges.begin(), edges.end());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (have.count({u, v})) continue;
      if (coin(rng) < edge_probability) edges.emplace_back(u, v);
    }
  return build_graph(n, edges);
}

VertexSet::VertexSet(std::vector<int> members) : members_(std::move(members)) {
  for (int v : members_)
    if (v < 0)
      fail(ErrorCode::VertexOutOfRange,
           "negative vertex id " + std::to_string(v));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()),
                 members_.end());
}

VertexSet VertexSet::full(int n) {
  std::vector<int> all(static_cast<size_t>(std::max(n, 0)));
  std::iota(all.begin(), all.end(), 0);
  return VertexSet(std::move(all));
}

bool VertexSet::contains(int v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

VertexSet VertexSet::complement(int n) const {
  check_range(n);
  std::vector<int> rest;
  rest.reserve(n - size());
  size_t i = 0;
  for (int v = 0; v < n; ++v) {
    if (i < members_.size() && members_[i] == v)
      ++i;
    else
      rest.push_back(v);
  }
  return VertexSet(std::move(rest));
}

void VertexSet::check_range(int n) const {
  if (!members_.empty() && members_.back() >= n)
    fail(ErrorCode::VertexOutOfRange,
         "vertex " + std::to_string(members_.back()) + " outside [0, " +
             std::to_string(n) + ")");
}

BoundaryClosure boundary_and_closure(const Graph& g, const VertexSet& s) {
  s.check_range(g.vertex_count());
  std::vector<int> boundary;
  for (int v : s.members())
    for (int u : g.neighbors(v))
      if (!s.contains(u)) boundary.push_back(u);
  VertexSet b(std::move(boundary));
  std::vector<int> closure = s.members();
  closure.insert(closure.end(), b.members().begin(), b.members().end());
  return {std::move(b), VertexSet(std::move(closure))};
}

bool is_independent_set(const Graph& g, const VertexSet& s) {
  s.check_range(g.vertex_count());
  for (int v : s.members())
    for (int u : g.neighbors(v))
      if (s.contains(u)) return false;
  return true;
}

VertexSet maximal_independent_set(const Graph& g,
                                  std::optional<std::uint64_t> shuffle_seed) {
  const int n = g.vertex_count();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<char> blocked(n, 0);
  std::vector<int> picked;
  for (int v : order) {
    if (blocked[v]) continue;
    picked.push_back(v);
    blocked[v] = 1;
    for (int u : g.neighbors(v)) blocked[u] = 1;
  }
  return VertexSet(std::move(picked));
}

}  // namespace pwgs
