#pragma once

#include <span>
#include <utility>
#include <vector>

#include "domir/vertex_set.hpp"

namespace domir {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// Construction rejects self-loops, parallel edges and out-of-range ids, so
/// a constructed Graph always has symmetric, loop-free adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  int m() const { return m_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// N̄(v) = {v} ∪ N(v).
  VertexSet closed_neighbors(Vertex v) const;
  int degree(Vertex v) const { return neighbors(v).count(); }
  bool has_edge(Vertex u, Vertex v) const { return neighbors(u).contains(v); }

  /// Every edge once as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing id order.
  Graph induced(const VertexSet& keep) const;

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet all_vertices() const { return VertexSet::full(n_); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<VertexSet> adj_;
};

/// Graph plus a non-negative capacity per vertex.
///
/// Capacities above n-1 are clamped to n-1: a vertex never has more than
/// n-1 neighbours to dominate.
struct CapacitatedInstance {
  CapacitatedInstance() = default;
  CapacitatedInstance(Graph g, std::vector<int> caps);

  int n() const { return graph.n(); }
  int max_capacity() const;

  Graph graph;
  std::vector<int> capacity;

  friend bool operator==(const CapacitatedInstance&, const CapacitatedInstance&) = default;
};

/// The dominating function f_S: assignment[v] is the member of S dominating
/// v, or kUnassigned for members of S themselves.
struct DominationWitness {
  static constexpr Vertex kUnassigned = -1;

  std::vector<Vertex> assignment;

  /// Vertices assigned to `w`.
  std::vector<Vertex> preimage(Vertex w) const;
};

VertexSet closed_neighborhood(const Graph& g, const VertexSet& w);
bool is_dominating(const Graph& g, const VertexSet& w);

/// Re-checks every DominationWitness invariant for `s` from scratch.
bool check_domination_witness(const CapacitatedInstance& inst, const VertexSet& s,
                              const DominationWitness& witness);

}  // namespace domir
