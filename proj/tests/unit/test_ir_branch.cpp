#include <doctest.h>

#include <chrono>
#include <cmath>

#include "domir/generators.hpp"
#include "domir/ir_branch.hpp"
#include "domir/recurrences.hpp"
#include "naive.hpp"

using namespace domir;
using namespace domir::testing;

namespace {

Graph random_bipartite(InstanceGenerator& gen, int left, int right, double p) {
  std::vector<Edge> e;
  for (int a = 0; a < left; ++a)
    for (int b = 0; b < right; ++b)
      if (gen.uniform01() < p) e.emplace_back(a, left + b);
  return Graph(left + right, e);
}

const BranchOptions kChecked{true};

}  // namespace

TEST_CASE("max_independent_edge_set examples") {
  CHECK(max_independent_edge_set(build_doubled_graph(path_graph(4)), kChecked).size == 2);
  CHECK(max_independent_edge_set(build_doubled_graph(Graph(5)), kChecked).size == 5);
  CHECK(max_independent_edge_set(build_doubled_graph(path_graph(2)), kChecked).size == 1);
  CHECK(max_independent_edge_set(Graph(4), kChecked).size == 0);

  const Graph c5 = cycle_graph(5);
  const auto r = max_independent_edge_set(build_doubled_graph(c5), kChecked);
  CHECK(r.size == naive_irredundance(c5).IR);
  CHECK(r.size == 2);
}

TEST_CASE("solve_IR examples") {
  const auto r = solve_IR(path_graph(4), kChecked);
  CHECK(r.size == 2);
  CHECK(check_irredundant_witness(path_graph(4), r.set, r.witness));
  CHECK(solve_IR(Graph(0)).size == 0);
  CHECK(solve_IR(Graph(3)).size == 3);
  CHECK(solve_IR(star_graph(5)).size == 5);
  CHECK(solve_IR(complete_graph(6)).size == 1);
}

TEST_CASE("branch search on random bipartite graphs matches exhaustive search") {
  InstanceGenerator gen(51);
  for (int trial = 0; trial < 300; ++trial) {
    const int left = 1 + static_cast<int>(gen.below(6));
    const int right = 1 + static_cast<int>(gen.below(6));
    const Graph b = random_bipartite(gen, left, right, trial % 2 ? 0.3 : 0.6);
    const auto r = max_independent_edge_set(b, kChecked);
    REQUIRE(r.size == exhaustive_max_ies(b));
    REQUIRE(r.size == r.edges.size());
    REQUIRE(r.stats.nodes >= 1);
  }
}

TEST_CASE("branch search reaches the high-degree rule") {
  InstanceGenerator gen(52);
  std::uint64_t high = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Graph b = random_bipartite(gen, 10, 10, 0.85);
    const auto r = max_independent_edge_set(b, kChecked);
    high += r.stats.applications[static_cast<int>(Rule::kHighDegree)];
    REQUIRE(r.size >= 1);
  }
  CHECK(high > 0);
}

TEST_CASE("solve_IR agrees with the definition") {
  InstanceGenerator gen(53);
  std::array<std::uint64_t, kRuleCount> seen{};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(10));
    const Graph g = gen.gnp(n, trial % 3 == 0 ? 0.15 : 0.4);
    const auto r = solve_IR(g, kChecked);
    REQUIRE(r.size == naive_irredundance(g).IR);
    REQUIRE(r.set.count() == r.size);
    REQUIRE(check_irredundant_witness(g, r.set, r.witness));
    for (int i = 0; i < kRuleCount; ++i) seen[i] += r.stats.applications[i];
  }
  // Every rule fires somewhere across the sample.
  for (int i = 0; i < kRuleCount; ++i) CHECK_MESSAGE(seen[i] > 0, rule_name(static_cast<Rule>(i)));
}

TEST_CASE("rule names") {
  CHECK(rule_name(Rule::kIsolated) == "R1");
  CHECK(rule_name(Rule::kDeg3To7) == "R8");
}

TEST_CASE("recurrences hold at 1.40202") {
  const auto t0 = std::chrono::steady_clock::now();
  const auto rep = verify_recurrences(1.40202L);
  const auto dt = std::chrono::steady_clock::now() - t0;
  CHECK(rep.all_pass);
  CHECK(rep.failures.empty());
  CHECK(rep.cases_checked == 14816);
  CHECK(rep.min_margin > 0);
  CHECK(rep.min_margin < 1e-3L);
  // Reference margin evaluated separately in 50-digit arithmetic.
  CHECK(static_cast<double>(rep.min_margin) == doctest::Approx(1.0700459189e-5).epsilon(1e-6));
  CHECK(rep.binding_case == "R6(d_u=3,d_w=3,k=0)");
  CHECK(dt < std::chrono::seconds(1));
}

TEST_CASE("recurrences fail below the claimed base") {
  const auto rep = verify_recurrences(1.39L);
  CHECK_FALSE(rep.all_pass);
  bool r6 = false;
  for (const auto& c : rep.failures)
    if (c.label() == "R6(d_u=3,d_w=3,k=0)") {
      r6 = true;
      CHECK(c.verdict == RecurrenceCase::Verdict::kFail);
      CHECK(c.margin < 0);
    }
  CHECK(r6);
}

TEST_CASE("recurrences at alpha = 2 and invalid alpha") {
  CHECK(verify_recurrences(2.0L).all_pass);
  CHECK_THROWS_AS(verify_recurrences(1.0L), std::invalid_argument);
  CHECK_THROWS_AS(verify_recurrences(0.5L), std::invalid_argument);
}

TEST_CASE("recurrence cases are well formed") {
  const auto cases = enumerate_recurrence_cases();
  CHECK(cases.size() == 14816);
  for (const auto& c : cases) {
    CHECK(c.params.size() == RecurrenceCase::parameter_names(c.rule).size());
    for (auto [mult, removed] : c.branches) {
      CHECK(mult > 0);
      CHECK(removed >= 1);
    }
  }
  // Margins are monotone in alpha.
  const auto lo = verify_recurrences(1.41L);
  const auto hi = verify_recurrences(1.5L);
  for (std::size_t i = 0; i < lo.cases.size(); ++i) CHECK(hi.cases[i].margin >= lo.cases[i].margin);
}
