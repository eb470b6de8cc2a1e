#pragma once

#include <optional>
#include <vector>

#include "domir/graph.hpp"

namespace domir {

/// unique_of[v] is a vertex in N̄(v) outside N̄(S∖{v}) for every member v
/// of S, and -1 for non-members.
struct IrredundantWitness {
  std::vector<Vertex> unique_of;
};

/// Witness (lowest-id unique vertex per member) iff `s` is irredundant.
std::optional<IrredundantWitness> is_irredundant(const Graph& g, const VertexSet& s);

/// Re-checks a witness against the definition.
bool check_irredundant_witness(const Graph& g, const VertexSet& s, const IrredundantWitness& w);

/// No proper superset of `s` is irredundant. Throws std::invalid_argument if
/// `s` itself is not irredundant.
bool is_maximal_irredundant(const Graph& g, const VertexSet& s);

/// Bipartite H on V ∪ V': left vertex v has id v, its copy v' has id n+v,
/// and {u, v'} is an edge iff u = v or uv ∈ E.
struct DoubledGraph {
  int base_n = 0;
  Graph graph;

  Vertex left(Vertex v) const { return v; }
  Vertex right(Vertex v) const { return base_n + v; }
  bool is_left(Vertex x) const { return x < base_n; }
  Vertex original(Vertex x) const { return x < base_n ? x : x - base_n; }
};

/// Edges stored as (left id, right id) pairs of H.
struct IndependentEdgeSet {
  std::vector<Edge> edges;
  int size() const { return static_cast<int>(edges.size()); }
};

DoubledGraph build_doubled_graph(const Graph& g);

/// Both conditions: a matching of H, and no H-edge joins endpoints of two
/// different member edges. Edges may be given in either orientation.
bool is_independent_edge_set(const DoubledGraph& h, const std::vector<Edge>& m);

/// W(M) ∩ V. Throws std::invalid_argument if `m` is not independent.
VertexSet edge_set_to_irset(const DoubledGraph& h, const IndependentEdgeSet& m);

/// {{v, u(v)'} : v ∈ s}. Throws std::invalid_argument if `w` does not certify `s`.
IndependentEdgeSet irset_to_edge_set(const DoubledGraph& h, const VertexSet& s, const IrredundantWitness& w);

}  // namespace domir
