#pragma once

// Test-only reference routines. They are deliberately written against the
// definitions with plain containers and share no code path with the library
// algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "domir/graph.hpp"
#include "domir/irredundance.hpp"

namespace domir::testing {

// fig1 instance ids.
enum Fig1 : Vertex { A = 0, B, C, D, E, F, H, K, L, M };

inline CapacitatedInstance fig1_instance() {
  const std::vector<Edge> edges = {{A, D}, {A, E}, {A, F}, {A, H}, {A, B}, {B, C}, {D, E},
                                   {D, F}, {E, F}, {C, K}, {F, K}, {F, M}, {C, L}, {L, M}};
  std::vector<int> caps(10, 0);
  caps[A] = 2;
  caps[B] = 3;
  caps[C] = 2;
  caps[D] = 2;
  caps[L] = 1;
  return CapacitatedInstance(Graph(10, edges), caps);
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// K_{1,k}: vertex 0 is the centre.
inline Graph star_graph(int k) {
  std::vector<Edge> e;
  for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
  return Graph(k + 1, e);
}

inline VertexSet make_set(int n, std::initializer_list<Vertex> vs) { return VertexSet(n, vs); }

inline std::set<Vertex> naive_closed(const Graph& g, Vertex v) {
  std::set<Vertex> out{v};
  for (Vertex u = 0; u < g.n(); ++u)
    if (g.has_edge(u, v)) out.insert(u);
  return out;
}

/// Maximum matching size by exhaustive recursion over the edge list.
inline int exhaustive_max_matching(const Graph& g) {
  const auto edges = g.edges();
  std::vector<bool> used(static_cast<std::size_t>(g.n()), false);
  std::function<int(std::size_t)> rec = [&](std::size_t i) -> int {
    if (i == edges.size()) return 0;
    int best = rec(i + 1);
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      best = std::max(best, 1 + rec(i + 1));
      used[u] = used[v] = false;
    }
    return best;
  };
  return rec(0);
}

/// Backtracking search for a capacity-respecting assignment of V∖S into S.
/// `cap` overrides the instance capacities when non-empty.
inline bool brute_assignment_exists(const CapacitatedInstance& inst, const VertexSet& s,
                                    std::vector<int> cap = {}) {
  if (cap.empty()) cap = inst.capacity;
  std::vector<Vertex> outside;
  for (Vertex v = 0; v < inst.n(); ++v)
    if (!s.contains(v)) outside.push_back(v);
  std::function<bool(std::size_t)> rec = [&](std::size_t i) -> bool {
    if (i == outside.size()) return true;
    const Vertex v = outside[i];
    for (Vertex w = 0; w < inst.n(); ++w) {
      if (!s.contains(w) || !inst.graph.has_edge(v, w) || cap[w] == 0) continue;
      --cap[w];
      const bool ok = rec(i + 1);
      ++cap[w];
      if (ok) return true;
    }
    return false;
  };
  return rec(0);
}

/// Smallest capacitated dominating set size over all subsets.
inline int naive_min_cds(const CapacitatedInstance& inst) {
  const int n = inst.n();
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const VertexSet s = VertexSet::from_mask(n, mask);
    if (s.count() < best && brute_assignment_exists(inst, s)) best = s.count();
  }
  return best;
}

/// Smallest S ⊇ U admitting an assignment where members outside U take at
/// most one assignee.
inline int naive_min_scds(const CapacitatedInstance& inst, const VertexSet& forced) {
  const int n = inst.n();
  std::vector<int> cap = inst.capacity;
  for (Vertex v = 0; v < n; ++v)
    if (!forced.contains(v)) cap[v] = std::min(cap[v], 1);
  int best = n;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    const VertexSet s = VertexSet::from_mask(n, mask);
    if (!forced.is_subset_of(s) || s.count() >= best) continue;
    if (brute_assignment_exists(inst, s, cap)) best = s.count();
  }
  return best;
}

/// Irredundance straight from the definition.
inline bool naive_is_irredundant(const Graph& g, const std::vector<Vertex>& s) {
  for (Vertex v : s) {
    bool has_unique = false;
    for (Vertex u : naive_closed(g, v)) {
      bool private_u = true;
      for (Vertex w : s)
        if (w != v && naive_closed(g, w).count(u)) private_u = false;
      if (private_u) has_unique = true;
    }
    if (!has_unique) return false;
  }
  return true;
}

inline std::vector<Vertex> members(std::uint32_t mask, int n) {
  std::vector<Vertex> out;
  for (int v = 0; v < n; ++v)
    if ((mask >> v) & 1U) out.push_back(v);
  return out;
}

struct NaiveIr {
  int IR = 0;
  int ir = 0;
  std::uint64_t irredundant_sets = 0;
};

/// IR, ir and the number of irredundant subsets, from the definitions.
inline NaiveIr naive_irredundance(const Graph& g) {
  const int n = g.n();
  std::vector<bool> irr(std::size_t{1} << n);
  NaiveIr r;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    irr[mask] = naive_is_irredundant(g, members(mask, n));
    if (irr[mask]) {
      ++r.irredundant_sets;
      r.IR = std::max(r.IR, static_cast<int>(members(mask, n).size()));
    }
  }
  r.ir = n + 1;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (!irr[mask]) continue;
    bool maximal = true;
    for (int v = 0; v < n && maximal; ++v)
      if (!((mask >> v) & 1U) && irr[mask | (1U << v)]) maximal = false;
    if (maximal) r.ir = std::min(r.ir, static_cast<int>(members(mask, n).size()));
  }
  return r;
}

/// Largest independent edge set of any small graph by recursion over edges.
inline int exhaustive_max_ies(const Graph& h) {
  const auto edges = h.edges();
  std::vector<Edge> chosen;
  std::function<bool()> independent = [&] {
    std::set<Vertex> ends;
    for (auto [a, b] : chosen) {
      if (!ends.insert(a).second || !ends.insert(b).second) return false;
    }
    for (auto [a, b] : chosen)
      for (auto [c, d] : chosen) {
        if (a == c && b == d) continue;
        if (h.has_edge(a, c) || h.has_edge(a, d) || h.has_edge(b, c) || h.has_edge(b, d)) return false;
      }
    return true;
  };
  int best = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    best = std::max(best, static_cast<int>(chosen.size()));
    for (std::size_t j = i; j < edges.size(); ++j) {
      chosen.push_back(edges[j]);
      if (independent()) rec(j + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace domir::testing
