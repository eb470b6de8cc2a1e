#pragma once

#include <optional>
#include <vector>

#include "domir/graph.hpp"

namespace domir {

/// A matching stored as a mate array (kUnmatched for free vertices).
class Matching {
 public:
  static constexpr Vertex kUnmatched = -1;

  Matching() = default;
  explicit Matching(int n) : mate_(static_cast<std::size_t>(n), kUnmatched) {}
  /// Builds from an explicit edge list; throws std::invalid_argument if two
  /// edges share an endpoint.
  Matching(int n, const std::vector<Edge>& edges);

  int universe() const { return static_cast<int>(mate_.size()); }
  Vertex mate(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }
  bool is_matched(Vertex v) const { return mate(v) != kUnmatched; }
  int size() const;

  void add(Vertex u, Vertex v);
  void remove(Vertex u);

  /// Edges as (u, v) with u < v, in increasing u.
  std::vector<Edge> edges() const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<Vertex> mate_;
};

/// True iff every edge of `m` is an edge of `g` and mates are consistent.
bool is_matching_of(const Graph& g, const Matching& m);

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(V^3)).
Matching max_matching(const Graph& g);

/// Capacitated domination check: assigns every vertex outside `s` to a
/// neighbour in `s` without exceeding capacities, via augmenting paths in
/// the bipartite (V∖S) × S graph with right-side capacities. Returns
/// nullopt when no such assignment exists.
std::optional<DominationWitness> verify_capacitated(const CapacitatedInstance& inst, const VertexSet& s);

}  // namespace domir
