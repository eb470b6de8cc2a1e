#pragma once

#include <cstdint>
#include <functional>

#include "domir/graph.hpp"
#include "domir/irredundance.hpp"

namespace domir {

/// Upper bound on the cardinality of sets produced in one sweep.
struct DepthBudget {
  int k = 0;
};

enum class Visit { kContinue, kStop };

using IrVisitor = std::function<Visit(const VertexSet&, const IrredundantWitness&)>;

/// Depth-first enumeration of all irredundant sets of size <= k. A set is
/// only extended by vertices above its maximum, so every set is visited
/// exactly once (pre-order, ∅ first). Returns the number of visits.
std::uint64_t enumerate_irredundant(const Graph& g, DepthBudget k, const IrVisitor& visit);

struct IrMinResult {
  int size = 0;
  VertexSet set;
  IrredundantWitness witness;
  std::uint64_t sets_visited = 0;
};

/// ir(G) by iterative deepening over k = 0, 1, ..., n on the graph without
/// isolated vertices; the isolated vertices are then added back, since
/// every inclusion-maximal irredundant set contains them.
IrMinResult solve_ir(const Graph& g);

}  // namespace domir
