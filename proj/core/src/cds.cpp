#include "domir/cds.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "domir/scds.hpp"

namespace domir {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    const auto factor = static_cast<std::uint64_t>(n - k + i);
    // r * factor is divisible by i; saturate a little early rather than overflow.
    if (r > kSaturated / factor) return kSaturated;
    r = r * factor / static_cast<std::uint64_t>(i);
  }
  return r;
}

// Lexicographic successor of a k-combination of {0..n-1}; false at the end.
bool next_combination(std::vector<Vertex>& comb, int n) {
  const int k = static_cast<int>(comb.size());
  int i = k - 1;
  while (i >= 0 && comb[i] == n - k + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

// The rank-th k-combination of {0..n-1} in lexicographic order.
std::vector<Vertex> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<Vertex> comb;
  comb.reserve(static_cast<std::size_t>(k));
  Vertex x = 0;
  for (int slot = 0; slot < k; ++slot) {
    while (true) {
      const std::uint64_t block = binomial(n - x - 1, k - slot - 1);
      if (rank < block) break;
      rank -= block;
      ++x;
    }
    comb.push_back(x++);
  }
  return comb;
}

struct Candidate {
  ScdsSolution sol;
  std::uint64_t rank = kSaturated;
  int size = std::numeric_limits<int>::max();
};

ScdsSolution solve_for(const CapacitatedInstance& inst, const std::vector<Vertex>& comb) {
  VertexSet u(inst.n());
  for (Vertex v : comb) u.insert(v);
  return solve_scds(ScdsInstance(inst, std::move(u)));
}

// Scans ranks [begin, end) of level k; returns the first smallest solution,
// stopping early once `target` is reached.
Candidate scan_range(const CapacitatedInstance& inst, int k, std::uint64_t begin, std::uint64_t end, int target,
                     const std::atomic<std::uint64_t>* cutoff) {
  Candidate best;
  std::vector<Vertex> comb = unrank_combination(inst.n(), k, begin);
  for (std::uint64_t r = begin; r < end; ++r) {
    if (cutoff != nullptr && r > cutoff->load(std::memory_order_relaxed)) break;
    ScdsSolution sol = solve_for(inst, comb);
    const int size = sol.s.count();
    if (size < best.size) {
      best = {std::move(sol), r, size};
      if (size <= target) break;
    }
    if (!next_combination(comb, inst.n())) break;
  }
  return best;
}

Candidate scan_level_parallel(const CapacitatedInstance& inst, int k, std::uint64_t total, int target, int workers) {
  const std::uint64_t chunk = std::max<std::uint64_t>(1, total / (static_cast<std::uint64_t>(workers) * 8));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::vector<Candidate> results(chunks);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> cutoff{kSaturated};

  auto work = [&] {
    while (true) {
      const std::uint64_t c = next.fetch_add(1);
      if (c >= chunks) return;
      const std::uint64_t begin = c * chunk;
      if (begin > cutoff.load()) continue;
      results[c] = scan_range(inst, k, begin, std::min(total, begin + chunk), target, &cutoff);
      if (results[c].size <= target) {
        std::uint64_t cur = cutoff.load();
        while (results[c].rank < cur && !cutoff.compare_exchange_weak(cur, results[c].rank)) {
        }
      }
    }
  };
  std::vector<std::thread> pool;
  for (int i = 0; i < workers; ++i) pool.emplace_back(work);
  for (auto& t : pool) t.join();

  Candidate best;
  for (auto& r : results)
    if (r.size < best.size || (r.size == best.size && r.rank < best.rank)) best = std::move(r);
  return best;
}

}  // namespace

int cds_lower_bound(const CapacitatedInstance& inst) {
  const int n = inst.n();
  if (n == 0) return 0;
  const int per_member = 1 + inst.max_capacity();
  return std::max(1, (n + per_member - 1) / per_member);
}

std::uint64_t count_subsets_up_to(int n, int kmax) {
  std::uint64_t total = 0;
  for (int k = 0; k <= std::min(kmax, n); ++k) {
    const std::uint64_t b = binomial(n, k);
    if (b == kSaturated || total > kSaturated - b) return kSaturated;
    total += b;
  }
  return total;
}

CdsResult solve_with_forced_limit(const CapacitatedInstance& inst, int max_forced, const CdsOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  const int n = inst.n();
  const int target = opts.early_exit ? cds_lower_bound(inst) : -1;

  CdsResult result;
  result.s = VertexSet::full(n);
  result.witness.assignment.assign(static_cast<std::size_t>(n), DominationWitness::kUnassigned);
  int best_size = n + 1;  // V itself is feasible; any enumerated solution replaces it

  for (int k = 0; k <= std::min(max_forced, n); ++k) {
    const std::uint64_t total = binomial(n, k);
    Candidate level;
    if (opts.workers > 1 && total != kSaturated && total > 1) {
      level = scan_level_parallel(inst, k, total, target, opts.workers);
    } else {
      level = scan_range(inst, k, 0, total, target, nullptr);
    }
    bool stop = false;
    if (level.size < best_size) {
      best_size = level.size;
      result.s = std::move(level.sol.s);
      result.witness = std::move(level.sol.witness);
      stop = best_size <= target;
    }
    // Counted as the sequential scan would count it.
    result.subsets_examined += stop ? level.rank + 1 : total;
    if (stop) break;
  }
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

CdsResult solve_exact(const CapacitatedInstance& inst, const CdsOptions& opts) {
  return solve_with_forced_limit(inst, inst.n() / 3, opts);
}

CdsResult solve_approx(const CapacitatedInstance& inst, Rational c, const CdsOptions& opts) {
  if (!(c > Rational(0) && c < Rational(1, 3))) throw std::invalid_argument("solve_approx: c must lie in (0, 1/3)");
  return solve_with_forced_limit(inst, static_cast<int>(c.floor_times(inst.n())), opts);
}

ApproxBound approx_ratio_bound(Rational c) {
  if (!(c > Rational(0) && c < Rational(1, 3)))
    throw std::invalid_argument("approx_ratio_bound: c must lie in (0, 1/3)");
  ApproxBound b;
  b.c = c;
  b.scheme_ratio = c <= Rational(1, 4) ? Rational(1) / (Rational(4) * c) + c : Rational(2) - Rational(3) * c;
  b.trivial_ratio = Rational(1) / c - Rational(1);

  // Golden-section search of the concave bound 1 + (1 - c x)(x - 2).
  const long double cc = c.to_long_double();
  auto f = [cc](long double x) { return 1.0L + (1.0L - cc * x) * (x - 2.0L); };
  long double lo = 3.0L, hi = 1.0L / cc;
  const long double phi = (std::sqrt(5.0L) - 1.0L) / 2.0L;
  long double x1 = hi - phi * (hi - lo), x2 = lo + phi * (hi - lo);
  long double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-15L; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = f(x1);
    }
  }
  long double arg = (lo + hi) / 2.0L;
  long double best = f(arg);
  // The maximiser may sit on the boundary x = 3.
  if (f(3.0L) > best) {
    arg = 3.0L;
    best = f(3.0L);
  }
  b.numeric_max = static_cast<double>(best);
  b.argmax = static_cast<double>(arg);
  if (std::fabs(best - b.scheme_ratio.to_long_double()) > 1e-9L)
    throw std::logic_error("approx_ratio_bound: numeric maximum disagrees with closed form");
  return b;
}

}  // namespace domir
