#include <doctest.h>

#include "domir/cds.hpp"
#include "domir/generators.hpp"
#include "domir/matching.hpp"
#include "naive.hpp"

using namespace domir;
using namespace domir::testing;

namespace {

bool feasible(const CapacitatedInstance& inst, const CdsResult& r) {
  return check_domination_witness(inst, r.s, r.witness) && brute_assignment_exists(inst, r.s);
}

}  // namespace

TEST_CASE("solve_exact examples") {
  const CapacitatedInstance star(star_graph(4), {4, 0, 0, 0, 0});
  const auto rs = solve_exact(star);
  CHECK(rs.s == make_set(5, {0}));
  CHECK(feasible(star, rs));

  const auto inst = fig1_instance();
  const auto rf = solve_exact(inst);
  CHECK(rf.s.count() == 4);
  CHECK(feasible(inst, rf));
  CHECK(rf.s.count() == naive_min_cds(inst));

  const CapacitatedInstance p3(path_graph(3), {1, 1, 1});
  CHECK(solve_exact(p3).s.count() == 2);

  const CapacitatedInstance empty(Graph(0), {});
  CHECK(solve_exact(empty).s.count() == 0);
  const CapacitatedInstance lonely(Graph(3), {0, 0, 0});
  CHECK(solve_exact(lonely).s.count() == 3);
}

TEST_CASE("cds_lower_bound") {
  CHECK(cds_lower_bound(fig1_instance()) == 3);
  CHECK(cds_lower_bound(CapacitatedInstance(Graph(0), {})) == 0);
  CHECK(cds_lower_bound(CapacitatedInstance(Graph(2), {0, 0})) == 2);
  CHECK(cds_lower_bound(CapacitatedInstance(star_graph(4), {4, 0, 0, 0, 0})) == 1);
}

TEST_CASE("solve_approx on fig1") {
  const auto inst = fig1_instance();
  const auto r = solve_approx(inst, Rational(1, 6));
  CHECK(feasible(inst, r));
  CHECK(r.s.count() >= 4);
  CHECK(r.s.count() == 5);
}

TEST_CASE("solve_approx rejects c outside (0, 1/3)") {
  const auto inst = fig1_instance();
  CHECK_THROWS_AS(solve_approx(inst, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(solve_approx(inst, Rational(1, 3)), std::invalid_argument);
  CHECK_THROWS_AS(solve_approx(inst, Rational(-1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(approx_ratio_bound(Rational(1, 2)), std::invalid_argument);
}

TEST_CASE("approx_ratio_bound closed forms") {
  const auto b6 = approx_ratio_bound(Rational(1, 6));
  CHECK(b6.scheme_ratio == Rational(5, 3));
  CHECK(b6.trivial_ratio == Rational(5));
  CHECK(b6.numeric_max == doctest::Approx(5.0 / 3.0).epsilon(1e-9));
  CHECK(b6.argmax == doctest::Approx(4.0).epsilon(1e-6));

  const auto b4 = approx_ratio_bound(Rational(1, 4));
  CHECK(b4.scheme_ratio == Rational(5, 4));
  CHECK(b4.trivial_ratio == Rational(3));

  const auto b3 = approx_ratio_bound(Rational(3, 10));
  CHECK(b3.scheme_ratio == Rational(11, 10));
  CHECK(b3.trivial_ratio == Rational(7, 3));
}

TEST_CASE("approx_ratio_bound against a grid maximisation") {
  for (int q = 4; q <= 40; ++q) {
    const Rational c(1, q);
    const auto b = approx_ratio_bound(c);
    double best = -1e300;
    for (int i = 0; i <= 200000; ++i) {
      const double x = 3.0 + (q - 3.0) * i / 200000.0;
      best = std::max(best, 1.0 + (1.0 - c.to_double() * x) * (x - 2.0));
    }
    CHECK(b.scheme_ratio.to_double() == doctest::Approx(best).epsilon(1e-6));
    CHECK(b.scheme_ratio < b.trivial_ratio);
  }
}

TEST_CASE("approx equals exact when the forced-set limits coincide") {
  InstanceGenerator gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(gen.below(6));
    const auto inst = gen.capacitated_gnp(n, 0.4, 3);
    const Rational c(3, 10);
    if (c.floor_times(n) < n / 3) continue;
    CHECK(solve_approx(inst, c).s == solve_exact(inst).s);
  }
}

TEST_CASE("approx size does not increase with c") {
  InstanceGenerator gen(32);
  const std::vector<Rational> cs = {Rational(1, 20), Rational(1, 10), Rational(1, 6), Rational(1, 5), Rational(3, 10)};
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = gen.capacitated_gnp(12, 0.3, 2);
    int prev = inst.n() + 1;
    for (const Rational& c : cs) {
      const auto r = solve_approx(inst, c);
      REQUIRE(check_domination_witness(inst, r.s, r.witness));
      CHECK(r.s.count() <= prev);
      prev = r.s.count();
    }
    CHECK(prev >= solve_exact(inst).s.count());
  }
}

TEST_CASE("subsets_examined without early exit") {
  InstanceGenerator gen(33);
  for (int n = 0; n <= 14; ++n) {
    const auto inst = gen.capacitated_gnp(n, 0.3, 2);
    CdsOptions opts;
    opts.early_exit = false;
    CHECK(solve_exact(inst, opts).subsets_examined == count_subsets_up_to(n, n / 3));
    CHECK(solve_with_forced_limit(inst, 2, opts).subsets_examined == count_subsets_up_to(n, std::min(2, n)));
  }
  CHECK(count_subsets_up_to(10, 3) == 1 + 10 + 45 + 120);
  CHECK(count_subsets_up_to(5, 0) == 1);
}

TEST_CASE("early exit does not change the size") {
  InstanceGenerator gen(34);
  for (int trial = 0; trial < 60; ++trial) {
    const auto inst = gen.capacitated_gnp(1 + static_cast<int>(gen.below(12)), 0.4, 3);
    CdsOptions off;
    off.early_exit = false;
    const auto a = solve_exact(inst);
    const auto b = solve_exact(inst, off);
    CHECK(a.s.count() == b.s.count());
    CHECK(a.subsets_examined <= b.subsets_examined);
  }
}

TEST_CASE("parallel enumeration matches the sequential result") {
  InstanceGenerator gen(35);
  for (int trial = 0; trial < 30; ++trial) {
    const auto inst = gen.capacitated_gnp(6 + static_cast<int>(gen.below(9)), trial % 2 ? 0.2 : 0.5, 2);
    for (bool early : {true, false}) {
      CdsOptions seq;
      seq.early_exit = early;
      CdsOptions par = seq;
      par.workers = 4;
      const auto a = solve_exact(inst, seq);
      const auto b = solve_exact(inst, par);
      CHECK(a.s == b.s);
      CHECK(a.witness.assignment == b.witness.assignment);
      CHECK(a.subsets_examined == b.subsets_examined);
      CHECK(check_domination_witness(inst, b.s, b.witness));
    }
  }
}

TEST_CASE("solve_exact agrees with brute force") {
  InstanceGenerator gen(36);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(gen.below(9));
    const auto inst = gen.capacitated_gnp(n, trial % 3 == 0 ? 0.2 : 0.45, static_cast<int>(gen.below(4)));
    const auto r = solve_exact(inst);
    REQUIRE(feasible(inst, r));
    REQUIRE(r.s.count() == naive_min_cds(inst));
    REQUIRE(r.s.count() >= cds_lower_bound(inst));
  }
}
