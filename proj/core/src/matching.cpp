#include "domir/matching.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

namespace domir {

Matching::Matching(int n, const std::vector<Edge>& edges) : Matching(n) {
  for (auto [u, v] : edges) {
    if (u == v || is_matched(u) || is_matched(v))
      throw std::invalid_argument("Matching: edges share an endpoint");
    add(u, v);
  }
}

int Matching::size() const {
  int c = 0;
  for (std::size_t v = 0; v < mate_.size(); ++v)
    if (mate_[v] > static_cast<Vertex>(v)) ++c;
  return c;
}

void Matching::add(Vertex u, Vertex v) {
  mate_[u] = v;
  mate_[v] = u;
}

void Matching::remove(Vertex u) {
  const Vertex v = mate_[u];
  if (v == kUnmatched) return;
  mate_[u] = kUnmatched;
  mate_[v] = kUnmatched;
}

std::vector<Edge> Matching::edges() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate_.size(); ++v)
    if (mate_[v] > static_cast<Vertex>(v)) out.emplace_back(static_cast<Vertex>(v), mate_[v]);
  return out;
}

bool is_matching_of(const Graph& g, const Matching& m) {
  if (m.universe() != g.n()) return false;
  for (Vertex v = 0; v < g.n(); ++v) {
    const Vertex w = m.mate(v);
    if (w == Matching::kUnmatched) continue;
    if (w < 0 || w >= g.n() || m.mate(w) != v || !g.has_edge(v, w)) return false;
  }
  return true;
}

namespace {

// Edmonds' blossom algorithm with explicit base contraction; one BFS per
// free root, roots in increasing id order.
class Blossom {
 public:
  explicit Blossom(const Graph& g) : n_(g.n()), adj_(static_cast<std::size_t>(g.n())) {
    for (Vertex v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).to_vector();
    mate_.assign(n_, -1);
    parent_.assign(n_, -1);
    base_.assign(n_, 0);
    used_.assign(n_, false);
    blossom_.assign(n_, false);
  }

  Matching run() {
    // Greedy warm start keeps the BFS count down.
    for (Vertex v = 0; v < n_; ++v) {
      if (mate_[v] != -1) continue;
      for (Vertex w : adj_[v]) {
        if (mate_[w] == -1) {
          mate_[v] = w;
          mate_[w] = v;
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate_[root] != -1) continue;
      Vertex end = find_path(root);
      while (end != -1) {
        const Vertex pv = parent_[end];
        const Vertex ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    Matching m(n_);
    for (Vertex v = 0; v < n_; ++v)
      if (mate_[v] > v) m.add(v, mate_[v]);
    return m;
  }

 private:
  Vertex lca(Vertex a, Vertex b) {
    std::vector<bool> seen(n_, false);
    while (true) {
      a = base_[a];
      seen[a] = true;
      if (mate_[a] == -1) break;
      a = parent_[mate_[a]];
    }
    while (true) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = true;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  Vertex find_path(Vertex root) {
    std::fill(used_.begin(), used_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[v] = v;
    used_[root] = true;
    std::queue<Vertex> q;
    q.push(root);
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop();
      for (Vertex to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != -1 && parent_[mate_[to]] != -1)) {
          const Vertex cur = lca(v, to);
          std::fill(blossom_.begin(), blossom_.end(), false);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (blossom_[base_[i]]) {
              base_[i] = cur;
              if (!used_[i]) {
                used_[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (mate_[to] == -1) return to;
          used_[mate_[to]] = true;
          q.push(mate_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Vertex> mate_, parent_, base_;
  std::vector<bool> used_, blossom_;
};

}  // namespace

Matching max_matching(const Graph& g) { return Blossom(g).run(); }

std::optional<DominationWitness> verify_capacitated(const CapacitatedInstance& inst, const VertexSet& s) {
  const Graph& g = inst.graph;
  const int n = g.n();
  if (s.universe() != n) throw std::invalid_argument("verify_capacitated: set universe differs from n");

  DominationWitness witness;
  witness.assignment.assign(static_cast<std::size_t>(n), DominationWitness::kUnassigned);
  std::vector<std::vector<Vertex>> assigned(static_cast<std::size_t>(n));
  std::vector<bool> visited(static_cast<std::size_t>(n));

  // Kuhn-style augmenting search; right vertices are members of s, each
  // with room for capacity[w] assignees. Neighbours scanned in id order.
  std::function<bool(Vertex)> augment = [&](Vertex v) -> bool {
    const VertexSet candidates = g.neighbors(v) & s;
    for (Vertex w : candidates) {
      if (visited[w]) continue;
      visited[w] = true;
      if (static_cast<int>(assigned[w].size()) < inst.capacity[w]) {
        assigned[w].push_back(v);
        witness.assignment[v] = w;
        return true;
      }
      for (auto& x : assigned[w]) {
        const Vertex displaced = x;
        if (augment(displaced)) {
          x = v;
          witness.assignment[v] = w;
          return true;
        }
      }
    }
    return false;
  };

  for (Vertex v = 0; v < n; ++v) {
    if (s.contains(v)) continue;
    std::fill(visited.begin(), visited.end(), false);
    if (!augment(v)) return std::nullopt;
  }
  return witness;
}

}  // namespace domir
