#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "domir/graph.hpp"
#include "domir/irredundance.hpp"

namespace domir {

/// Reduction/branching rules, in the order the dispatcher tries them.
enum class Rule : int {
  kIsolated = 0,        // R1: drop an isolated vertex
  kPendantPair = 1,     // R2: two degree-1 vertices joined by an edge
  kPendant = 2,         // R3: degree-1 vertex with a neighbour of degree >= 2
  kHighDegree = 3,      // R4: degree >= 8
  kAdjacentDeg2 = 4,    // R5: two adjacent degree-2 vertices
  kDeg2 = 5,            // R6: any degree-2 vertex
  kAdjacentDeg3 = 6,    // R7: two adjacent degree-3 vertices
  kDeg3To7 = 7,         // R8: degree 3..7 with all neighbours of degree >= 4
};
inline constexpr int kRuleCount = 8;

std::string_view rule_name(Rule r);

struct BranchStats {
  std::uint64_t nodes = 0;
  std::array<std::uint64_t, kRuleCount> applications{};
};

struct BranchOptions {
  /// Re-check at every node that the partial edge set is independent and
  /// that every child state has strictly fewer live vertices.
  bool check_invariants = false;
};

struct IesResult {
  int size = 0;
  /// Edges as (lower id, higher id); for a DoubledGraph that is (left, right').
  IndependentEdgeSet edges;
  BranchStats stats;
};

/// Largest independent edge set of a bipartite graph by branch and reduce.
/// At every node the first applicable rule is applied to the lowest-id
/// qualifying vertex; equal-size optima resolve to the first one found.
IesResult max_independent_edge_set(const Graph& bipartite, const BranchOptions& opts = {});
IesResult max_independent_edge_set(const DoubledGraph& h, const BranchOptions& opts = {});

struct IrMaxResult {
  int size = 0;
  VertexSet set;
  IrredundantWitness witness;
  BranchStats stats;
};

/// IR(G): largest irredundant set via the doubled graph.
IrMaxResult solve_IR(const Graph& g, const BranchOptions& opts = {});

}  // namespace domir
