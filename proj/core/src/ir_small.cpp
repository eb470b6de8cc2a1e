#include "domir/ir_small.hpp"

#include <stdexcept>

namespace domir {

namespace {

// Irredundant set under construction with per-vertex domination counts, so
// adding or removing a member costs O(deg) plus the uniqueness re-check.
class IncrementalIrset {
 public:
  explicit IncrementalIrset(const Graph& g)
      : g_(g), members_(g.n()), once_(g.n()), cover_(static_cast<std::size_t>(g.n()), 0) {
    for (Vertex v = 0; v < g.n(); ++v) closed_.push_back(g.closed_neighbors(v));
  }

  const VertexSet& members() const { return members_; }
  int size() const { return size_; }

  void add(Vertex v) {
    members_.insert(v);
    ++size_;
    for (Vertex x : closed_[v]) {
      if (++cover_[x] == 1) {
        once_.insert(x);
      } else if (cover_[x] == 2) {
        once_.erase(x);
      }
    }
  }

  void remove(Vertex v) {
    members_.erase(v);
    --size_;
    for (Vertex x : closed_[v]) {
      if (--cover_[x] == 1) {
        once_.insert(x);
      } else if (cover_[x] == 0) {
        once_.erase(x);
      }
    }
  }

  /// Valid after add(v) on a set that was irredundant before: only members
  /// sharing a dominated vertex with v can have lost their unique vertex.
  bool irredundant_after_adding(Vertex v) const {
    if (!closed_[v].intersects(once_)) return false;
    for (Vertex w : members_)
      if (w != v && closed_[w].intersects(closed_[v]) && !closed_[w].intersects(once_)) return false;
    return true;
  }

  bool dominating() const {
    for (int c : cover_)
      if (c == 0) return false;
    return true;
  }

  bool maximal() {
    if (dominating()) return true;
    for (Vertex v = 0; v < g_.n(); ++v) {
      if (members_.contains(v)) continue;
      add(v);
      const bool ok = irredundant_after_adding(v);
      remove(v);
      if (ok) return false;
    }
    return true;
  }

  IrredundantWitness witness() const {
    IrredundantWitness w;
    w.unique_of.assign(static_cast<std::size_t>(g_.n()), -1);
    for (Vertex v : members_) w.unique_of[v] = (closed_[v] & once_).first();
    return w;
  }

 private:
  const Graph& g_;
  std::vector<VertexSet> closed_;
  VertexSet members_;
  VertexSet once_;
  std::vector<int> cover_;
  int size_ = 0;
};

// Shared DFS; `on_visit` returns kStop to abort the whole enumeration.
template <typename OnVisit>
std::uint64_t dfs_enumerate(const Graph& g, int k, OnVisit&& on_visit) {
  IncrementalIrset state(g);
  std::uint64_t visited = 0;
  bool stopped = false;
  auto rec = [&](auto&& self, Vertex from) -> void {
    ++visited;
    if (on_visit(state) == Visit::kStop) {
      stopped = true;
      return;
    }
    if (state.size() >= k) return;
    for (Vertex v = from; v < g.n() && !stopped; ++v) {
      state.add(v);
      if (state.irredundant_after_adding(v)) self(self, v + 1);
      state.remove(v);
    }
  };
  rec(rec, 0);
  return visited;
}

}  // namespace

std::uint64_t enumerate_irredundant(const Graph& g, DepthBudget k, const IrVisitor& visit) {
  if (k.k < 0 || k.k > g.n()) throw std::invalid_argument("enumerate_irredundant: budget outside 0..n");
  return dfs_enumerate(g, k.k, [&](IncrementalIrset& s) { return visit(s.members(), s.witness()); });
}

IrMinResult solve_ir(const Graph& g) {
  VertexSet isolated(g.n());
  for (Vertex v = 0; v < g.n(); ++v)
    if (g.degree(v) == 0) isolated.insert(v);
  const VertexSet rest = isolated.complement();
  const Graph core = g.induced(rest);
  const std::vector<Vertex> back = rest.to_vector();

  IrMinResult result;
  bool found = false;
  VertexSet best(core.n());
  for (int k = 0; k <= core.n() && !found; ++k) {
    result.sets_visited += dfs_enumerate(core, k, [&](IncrementalIrset& s) {
      if (s.size() == k && s.maximal()) {
        best = s.members();
        found = true;
        return Visit::kStop;
      }
      return Visit::kContinue;
    });
  }
  if (!found) throw std::logic_error("solve_ir: no inclusion-maximal irredundant set found");

  result.set = isolated;
  for (Vertex v : best) result.set.insert(back[v]);
  result.size = result.set.count();
  auto w = is_irredundant(g, result.set);
  if (!w) throw std::logic_error("solve_ir: result is not irredundant");
  result.witness = std::move(*w);
  return result;
}

}  // namespace domir
