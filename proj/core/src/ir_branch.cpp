#include "domir/ir_branch.hpp"

#include <stdexcept>
#include <string>

namespace domir {

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kIsolated: return "R1";
    case Rule::kPendantPair: return "R2";
    case Rule::kPendant: return "R3";
    case Rule::kHighDegree: return "R4";
    case Rule::kAdjacentDeg2: return "R5";
    case Rule::kDeg2: return "R6";
    case Rule::kAdjacentDeg3: return "R7";
    case Rule::kDeg3To7: return "R8";
  }
  return "?";
}

namespace {

class BranchSearch {
 public:
  BranchSearch(const Graph& h, const BranchOptions& opts) : h_(h), opts_(opts) {
    closed_.reserve(static_cast<std::size_t>(h.n()));
    for (Vertex v = 0; v < h.n(); ++v) closed_.push_back(h.closed_neighbors(v));
  }

  IesResult run() {
    search(VertexSet::full(h_.n()));
    IesResult r;
    r.size = static_cast<int>(best_.size());
    r.edges.edges = best_;
    r.stats = stats_;
    return r;
  }

 private:
  void search(const VertexSet& live) {
    ++stats_.nodes;
    if (opts_.check_invariants) check_state(live);

    if (live.empty()) {
      if (static_cast<int>(chosen_.size()) > best_size_) {
        best_size_ = static_cast<int>(chosen_.size());
        best_ = chosen_;
      }
      return;
    }

    std::vector<int> deg(static_cast<std::size_t>(h_.n()), -1);
    for (Vertex v : live) deg[v] = h_.neighbors(v).intersection_count(live);
    auto live_nbrs = [&](Vertex v) { return h_.neighbors(v) & live; };

    // R1
    for (Vertex v : live) {
      if (deg[v] == 0) {
        apply(Rule::kIsolated);
        drop(live, {v});
        return;
      }
    }
    // R2
    for (Vertex v : live) {
      if (deg[v] != 1) continue;
      const Vertex u = live_nbrs(v).first();
      if (deg[u] == 1) {
        apply(Rule::kPendantPair);
        choose(live, v, u);
        return;
      }
    }
    // R3: either u carries no edge, or uv is in the solution.
    for (Vertex v : live) {
      if (deg[v] != 1) continue;
      const Vertex u = live_nbrs(v).first();
      apply(Rule::kPendant);
      drop(live, {u, v});
      choose(live, u, v);
      return;
    }
    // R4
    for (Vertex v : live) {
      if (deg[v] < 8) continue;
      apply(Rule::kHighDegree);
      drop(live, {v});
      for (Vertex x : live_nbrs(v)) choose(live, v, x);
      return;
    }
    // R5
    for (Vertex u : live) {
      if (deg[u] != 2) continue;
      for (Vertex v : live_nbrs(u)) {
        if (deg[v] != 2) continue;
        VertexSet ru = live_nbrs(u);
        ru.erase(v);
        VertexSet rv = live_nbrs(v);
        rv.erase(u);
        const Vertex u1 = ru.first();
        const Vertex v1 = rv.first();
        apply(Rule::kAdjacentDeg2);
        choose(live, u, u1);
        choose(live, u, v);
        choose(live, v, v1);
        return;
      }
    }
    // R6: v has degree 2 with neighbours u, w (both of degree 3..7 here).
    for (Vertex v : live) {
      if (deg[v] != 2) continue;
      const VertexSet nv = live_nbrs(v);
      const Vertex u = nv.first();
      const Vertex w = nv.next(u + 1);
      apply(Rule::kDeg2);
      choose(live, u, v);
      choose(live, v, w);
      drop(live, {u, v, w});
      VertexSet cu = live_nbrs(u);
      cu.erase(v);
      VertexSet cw = live_nbrs(w);
      cw.erase(v);
      VertexSet without_v = live;
      without_v.erase(v);
      for (Vertex u2 : cu)
        for (Vertex w2 : cw) choose_pair(without_v, u, u2, w, w2);
      return;
    }
    // R7: adjacent degree-3 vertices u, v.
    for (Vertex u : live) {
      if (deg[u] != 3) continue;
      for (Vertex v : live_nbrs(u)) {
        if (deg[v] != 3) continue;
        VertexSet nu = live_nbrs(u);
        nu.erase(v);
        VertexSet nv = live_nbrs(v);
        nv.erase(u);
        const Vertex u1 = nu.first(), u2 = nu.next(u1 + 1);
        const Vertex v1 = nv.first(), v2 = nv.next(v1 + 1);
        apply(Rule::kAdjacentDeg3);
        choose(live, u, v);
        choose(live, u, u1);
        choose(live, u, u2);
        choose(live, v, v1);
        choose(live, v, v2);
        // u1 and u2 both covered by edges avoiding u.
        VertexSet without_u = live;
        without_u.erase(u);
        for (Vertex x1 : h_.neighbors(u1) & without_u)
          for (Vertex x2 : h_.neighbors(u2) & without_u) choose_pair(without_u, u1, x1, u2, x2);
        // u1, u2 uncovered; v1 and v2 both covered by edges avoiding v.
        VertexSet rest = live;
        for (Vertex x : {u, v, u1, u2}) rest.erase(x);
        for (Vertex y1 : h_.neighbors(v1) & rest)
          for (Vertex y2 : h_.neighbors(v2) & rest) choose_pair(rest, v1, y1, v2, y2);
        return;
      }
    }
    // R8
    for (Vertex v : live) {
      if (deg[v] < 3 || deg[v] >= 8) continue;
      bool all_big = true;
      for (Vertex x : live_nbrs(v)) all_big = all_big && deg[x] >= 4;
      if (!all_big) continue;
      apply(Rule::kDeg3To7);
      drop(live, {v});
      for (Vertex x : live_nbrs(v)) choose(live, v, x);
      return;
    }
    throw std::logic_error("branch search: no rule applies to a non-empty state");
  }

  void apply(Rule r) { ++stats_.applications[static_cast<int>(r)]; }

  void recurse(const VertexSet& parent, const VertexSet& child) {
    if (opts_.check_invariants && (!child.is_subset_of(parent) || child.count() >= parent.count()))
      throw std::logic_error("branch search: child state does not shrink");
    search(child);
  }

  void drop(const VertexSet& live, std::initializer_list<Vertex> vs) {
    VertexSet next = live;
    for (Vertex v : vs) next.erase(v);
    recurse(live, next);
  }

  VertexSet after_choice(const VertexSet& live, Vertex a, Vertex b) const {
    VertexSet next = live;
    next -= closed_[a];
    next -= closed_[b];
    return next;
  }

  void choose(const VertexSet& live, Vertex a, Vertex b) {
    chosen_.emplace_back(std::min(a, b), std::max(a, b));
    recurse(live, after_choice(live, a, b));
    chosen_.pop_back();
  }

  // Chooses ab, then cd if it is still available.
  void choose_pair(const VertexSet& live, Vertex a, Vertex b, Vertex c, Vertex d) {
    const VertexSet mid = after_choice(live, a, b);
    if (!mid.contains(c) || !mid.contains(d)) return;
    chosen_.emplace_back(std::min(a, b), std::max(a, b));
    chosen_.emplace_back(std::min(c, d), std::max(c, d));
    recurse(live, after_choice(mid, c, d));
    chosen_.pop_back();
    chosen_.pop_back();
  }

  void check_state(const VertexSet& live) const {
    VertexSet endpoints(h_.n());
    for (auto [a, b] : chosen_) {
      if (!h_.has_edge(a, b) || endpoints.contains(a) || endpoints.contains(b))
        throw std::logic_error("branch search: chosen edges are not a matching");
      endpoints.insert(a);
      endpoints.insert(b);
    }
    for (auto [a, b] : chosen_) {
      VertexSet seen = (h_.neighbors(a) | h_.neighbors(b)) & endpoints;
      seen.erase(a);
      seen.erase(b);
      if (!seen.empty()) throw std::logic_error("branch search: chosen edges are not independent");
      if (closed_[a].intersects(live) || closed_[b].intersects(live))
        throw std::logic_error("branch search: live vertex conflicts with a chosen edge");
    }
  }

  const Graph& h_;
  BranchOptions opts_;
  std::vector<VertexSet> closed_;
  std::vector<Edge> chosen_;
  std::vector<Edge> best_;
  int best_size_ = -1;
  BranchStats stats_;
};

}  // namespace

IesResult max_independent_edge_set(const Graph& bipartite, const BranchOptions& opts) {
  return BranchSearch(bipartite, opts).run();
}

IesResult max_independent_edge_set(const DoubledGraph& h, const BranchOptions& opts) {
  return max_independent_edge_set(h.graph, opts);
}

IrMaxResult solve_IR(const Graph& g, const BranchOptions& opts) {
  const DoubledGraph h = build_doubled_graph(g);
  IesResult ies = max_independent_edge_set(h, opts);
  IrMaxResult r;
  r.size = ies.size;
  r.set = edge_set_to_irset(h, ies.edges);
  r.witness.unique_of.assign(static_cast<std::size_t>(g.n()), -1);
  for (auto [left, right] : ies.edges.edges) r.witness.unique_of[h.original(left)] = h.original(right);
  r.stats = ies.stats;
  return r;
}

}  // namespace domir
