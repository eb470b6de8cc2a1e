#include "domir/scds.hpp"

#include <stdexcept>

namespace domir {

ScdsInstance::ScdsInstance(const CapacitatedInstance& instance, VertexSet forced_set)
    : inst(&instance), forced(std::move(forced_set)) {
  if (forced.universe() != instance.n())
    throw std::invalid_argument("ScdsInstance: forced set universe differs from n");
}

AuxGraph build_aux_graph(const ScdsInstance& si) {
  const CapacitatedInstance& inst = *si.inst;
  const Graph& g = inst.graph;
  const int n = g.n();

  AuxGraph aux;
  aux.plain_node.assign(static_cast<std::size_t>(n), -1);
  aux.first_copy.assign(static_cast<std::size_t>(n), -1);
  for (Vertex v = 0; v < n; ++v) {
    if (si.forced.contains(v)) {
      aux.first_copy[v] = static_cast<int>(aux.nodes.size());
      for (int i = 0; i < inst.capacity[v]; ++i) aux.nodes.push_back({v, i});
    } else {
      aux.plain_node[v] = static_cast<int>(aux.nodes.size());
      aux.nodes.push_back({v, -1});
    }
  }

  std::vector<Edge> edges;
  for (auto [v, w] : g.edges()) {
    const bool fv = si.forced.contains(v);
    const bool fw = si.forced.contains(w);
    if (fv && fw) continue;
    if (!fv && !fw) {
      if (inst.capacity[v] + inst.capacity[w] > 0) edges.emplace_back(aux.plain_node[v], aux.plain_node[w]);
      continue;
    }
    const Vertex u = fv ? v : w;
    const Vertex x = fv ? w : v;
    for (int i = 0; i < inst.capacity[u]; ++i) edges.emplace_back(aux.first_copy[u] + i, aux.plain_node[x]);
  }
  aux.graph = Graph(static_cast<int>(aux.nodes.size()), edges);
  return aux;
}

bool is_scds_feasible(const ScdsInstance& si, const ScdsSolution& sol) {
  const CapacitatedInstance& inst = *si.inst;
  if (!si.forced.is_subset_of(sol.s)) return false;
  if (!check_domination_witness(inst, sol.s, sol.witness)) return false;
  std::vector<int> load(static_cast<std::size_t>(inst.n()), 0);
  for (Vertex target : sol.witness.assignment)
    if (target != DominationWitness::kUnassigned) ++load[target];
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!si.forced.contains(v) && load[v] > 1) return false;
  return true;
}

Matching solution_to_matching(const ScdsInstance& si, const AuxGraph& aux, const ScdsSolution& sol) {
  if (!is_scds_feasible(si, sol)) throw std::invalid_argument("solution_to_matching: infeasible SCDS solution");
  const int n = si.inst->n();
  std::vector<int> next_copy(static_cast<std::size_t>(n), 0);
  Matching m(aux.graph.n());
  for (Vertex v = 0; v < n; ++v) {
    if (sol.s.contains(v)) continue;
    const Vertex dom = sol.witness.assignment[v];
    if (si.forced.contains(dom)) {
      m.add(aux.plain_node[v], aux.first_copy[dom] + next_copy[dom]++);
    } else {
      m.add(aux.plain_node[v], aux.plain_node[dom]);
    }
  }
  return m;
}

ScdsSolution matching_to_solution(const ScdsInstance& si, const AuxGraph& aux, const Matching& m) {
  if (!is_matching_of(aux.graph, m))
    throw std::invalid_argument("matching_to_solution: not a matching of the auxiliary graph");
  const CapacitatedInstance& inst = *si.inst;
  const int n = inst.n();

  ScdsSolution sol{si.forced, {}};
  sol.witness.assignment.assign(static_cast<std::size_t>(n), DominationWitness::kUnassigned);

  for (Vertex v = 0; v < n; ++v) {
    const int node = aux.plain_node[v];
    if (node < 0) continue;
    const Vertex mate = m.mate(node);
    if (mate == Matching::kUnmatched) {
      sol.s.insert(v);
      continue;
    }
    const AuxNode& other = aux.nodes[mate];
    if (other.is_copy()) {
      sol.witness.assignment[v] = other.original;
      continue;
    }
    const Vertex w = other.original;
    if (w < v) continue;  // plain–plain edge handled from its lower endpoint
    const Vertex dominator = inst.capacity[v] > 0 ? v : w;
    const Vertex dominated = dominator == v ? w : v;
    sol.s.insert(dominator);
    sol.witness.assignment[dominated] = dominator;
  }
  return sol;
}

ScdsSolution solve_scds(const ScdsInstance& si) {
  const AuxGraph aux = build_aux_graph(si);
  return matching_to_solution(si, aux, max_matching(aux.graph));
}

}  // namespace domir
