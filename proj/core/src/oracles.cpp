#include "domir/oracles.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "domir/matching.hpp"

namespace domir {

namespace {

void guard(int n, const OracleOptions& opts) {
  if (n > opts.max_n || n > 30)
    throw OracleLimitError("oracle refuses n=" + std::to_string(n) + " (limit " + std::to_string(opts.max_n) + ")");
}

// All masks over n bits grouped by popcount, lexicographic within a group.
std::vector<std::vector<std::uint32_t>> masks_by_size(int n) {
  std::vector<std::vector<std::uint32_t>> out(static_cast<std::size_t>(n) + 1);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) out[std::popcount(mask)].push_back(mask);
  return out;
}

std::vector<std::uint32_t> closed_masks(const Graph& g) {
  std::vector<std::uint32_t> closed(static_cast<std::size_t>(g.n()));
  for (Vertex v = 0; v < g.n(); ++v) {
    closed[v] = 1U << v;
    for (Vertex u : g.neighbors(v)) closed[v] |= 1U << u;
  }
  return closed;
}

// irr[mask]: every member has a vertex in its closed neighbourhood that no
// other member's closed neighbourhood contains.
std::vector<bool> irredundant_table(const Graph& g) {
  const int n = g.n();
  const auto closed = closed_masks(g);
  std::vector<bool> irr(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    std::uint32_t once = 0;
    std::uint32_t twice = 0;
    for (std::uint32_t m = mask; m != 0; m &= m - 1) {
      const std::uint32_t c = closed[std::countr_zero(m)];
      twice |= once & c;
      once |= c;
    }
    const std::uint32_t unique = once & ~twice;
    bool ok = true;
    for (std::uint32_t m = mask; m != 0 && ok; m &= m - 1) ok = (closed[std::countr_zero(m)] & unique) != 0;
    irr[mask] = ok;
  }
  return irr;
}

void keep(OracleResult& r, const VertexSet& s, const OracleOptions& opts) {
  if (r.all_optima.size() < opts.max_optima) r.all_optima.push_back(s);
}

}  // namespace

OracleResult brute_cds(const CapacitatedInstance& inst, const OracleOptions& opts) {
  const int n = inst.n();
  guard(n, opts);
  OracleResult r;
  for (const auto& level : masks_by_size(n)) {
    for (std::uint32_t mask : level) {
      const VertexSet s = VertexSet::from_mask(n, mask);
      ++r.enumerated;
      if (verify_capacitated(inst, s)) {
        r.size = s.count();
        keep(r, s, opts);
      }
    }
    if (!r.all_optima.empty()) return r;
  }
  return r;
}

OracleResult brute_IR(const Graph& g, const OracleOptions& opts) {
  const int n = g.n();
  guard(n, opts);
  const auto irr = irredundant_table(g);
  OracleResult r;
  for (int k = n; k >= 0; --k) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      ++r.enumerated;
      if (irr[mask]) {
        r.size = k;
        keep(r, VertexSet::from_mask(n, mask), opts);
      }
    }
    if (!r.all_optima.empty()) return r;
  }
  return r;
}

OracleResult brute_ir(const Graph& g, const OracleOptions& opts) {
  const int n = g.n();
  guard(n, opts);
  const auto irr = irredundant_table(g);
  OracleResult r;
  for (int k = 0; k <= n; ++k) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (std::popcount(mask) != k) continue;
      ++r.enumerated;
      if (!irr[mask]) continue;
      bool maximal = true;
      for (int v = 0; v < n && maximal; ++v)
        if (!((mask >> v) & 1U) && irr[mask | (1U << v)]) maximal = false;
      if (maximal) {
        r.size = k;
        keep(r, VertexSet::from_mask(n, mask), opts);
      }
    }
    if (!r.all_optima.empty()) return r;
  }
  return r;
}

}  // namespace domir
