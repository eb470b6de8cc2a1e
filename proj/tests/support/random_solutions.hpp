#pragma once

#include <optional>

#include "domir/generators.hpp"
#include "domir/matching.hpp"
#include "domir/scds.hpp"

namespace domir::testing {

/// A random feasible SCDS solution: a random superset of the forced set,
/// with an assignment found under the per-member limit min(c, 1) outside U.
/// Returns nullopt when the drawn superset is infeasible.
inline std::optional<ScdsSolution> random_scds_solution(const ScdsInstance& si, InstanceGenerator& gen) {
  const CapacitatedInstance& inst = *si.inst;
  VertexSet s = si.forced;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (gen.uniform01() < 0.5) s.insert(v);
  std::vector<int> caps = inst.capacity;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!si.forced.contains(v)) caps[v] = std::min(caps[v], 1);
  const CapacitatedInstance limited(inst.graph, caps);
  auto w = verify_capacitated(limited, s);
  if (!w) return std::nullopt;
  return ScdsSolution{std::move(s), std::move(*w)};
}

/// Random maximal matching built greedily from a shuffled edge list.
inline Matching random_matching(const Graph& g, InstanceGenerator& gen) {
  auto edges = g.edges();
  for (std::size_t i = edges.size(); i > 1; --i) std::swap(edges[i - 1], edges[gen.below(i)]);
  Matching m(g.n());
  for (auto [u, v] : edges) {
    if (m.is_matched(u) || m.is_matched(v)) continue;
    if (gen.uniform01() < 0.8) m.add(u, v);
  }
  return m;
}

}  // namespace domir::testing
