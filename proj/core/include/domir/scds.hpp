#pragma once

#include <vector>

#include "domir/graph.hpp"
#include "domir/matching.hpp"

namespace domir {

/// Simplified capacitated domination: the solution must contain `forced`,
/// and every member outside `forced` may dominate at most one vertex.
struct ScdsInstance {
  ScdsInstance(const CapacitatedInstance& instance, VertexSet forced_set);

  const CapacitatedInstance* inst;
  VertexSet forced;
};

/// Node of the auxiliary graph: a plain vertex of V∖U, or copy number
/// `copy` of a forced vertex.
struct AuxNode {
  Vertex original;
  int copy;  // -1 for plain nodes

  bool is_copy() const { return copy >= 0; }
  friend bool operator==(const AuxNode&, const AuxNode&) = default;
};

/// Auxiliary graph whose maximum matchings encode optimal SCDS solutions.
struct AuxGraph {
  Graph graph;
  std::vector<AuxNode> nodes;
  /// plain_node[v] is the node id of Plain(v), or -1 when v is forced.
  std::vector<int> plain_node;
  /// Copies of forced u occupy node ids first_copy[u] .. first_copy[u]+c(u)-1.
  std::vector<int> first_copy;
};

struct ScdsSolution {
  VertexSet s;
  DominationWitness witness;
};

AuxGraph build_aux_graph(const ScdsInstance& si);

/// True iff `sol` contains the forced set, its witness is valid, and no
/// unforced member dominates more than one vertex.
bool is_scds_feasible(const ScdsInstance& si, const ScdsSolution& sol);

/// Solution → matching with |V| - |M| = |S|. Copies of a forced vertex are
/// handed out in increasing assignee order. Throws std::invalid_argument if
/// `sol` is infeasible.
Matching solution_to_matching(const ScdsInstance& si, const AuxGraph& aux, const ScdsSolution& sol);

/// Matching → solution with |S| = |V| - |M|. For a plain–plain edge the
/// endpoint with positive capacity joins S (lower id if both qualify).
/// Throws std::invalid_argument if `m` is not a matching of `aux`.
ScdsSolution matching_to_solution(const ScdsInstance& si, const AuxGraph& aux, const Matching& m);

ScdsSolution solve_scds(const ScdsInstance& si);

}  // namespace domir
