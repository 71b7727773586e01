#include <doctest.h>

#include "oracles.hpp"
#include "pdc/dca.hpp"
#include "pdc/error.hpp"
#include "pdc/optimality.hpp"
#include "support.hpp"

using namespace pdc;
using namespace pdc::testing;

TEST_CASE("subgradient selection") {
  const MaxAffine h = interval_kink().h;
  CHECK(select_subgradient(h, v1("1"), MinIndexActive{}, 0) == v1("0"));
  CHECK(select_subgradient(h, v1("1"), MaxIndexActive{}, 0) == v1("1"));
  CHECK(select_subgradient(h, v1("-1"), MaxIndexActive{}, 0) == v1("0"));
  CHECK(select_subgradient(h, v1("2"), MinIndexActive{}, 0) == v1("1"));

  const ActiveSetTable table{{{IndexSet{1, 2}, 2}, {IndexSet{0, 1}, 7}}};
  CHECK(select_subgradient(h, v1("1"), table, 0) == v1("1"));
  CHECK_THROWS_WITH_AS(select_subgradient(h, v1("2"), table, 0), doctest::Contains("no entry"), PreconditionError);
  CHECK_THROWS_WITH_AS(select_subgradient(h, v1("-1"), table, 0), doctest::Contains("inactive"), PreconditionError);

  const Scripted script{{v1("1/2"), v1("3")}};
  CHECK(select_subgradient(h, v1("1"), script, 0) == v1("1/2"));
  CHECK_THROWS_AS(select_subgradient(h, v1("1"), script, 1), PreconditionError);
  CHECK_THROWS_WITH_AS(select_subgradient(h, v1("1"), script, 2), doctest::Contains("exhausted"), PreconditionError);

  const MaxAffine bounded{{{v1("1"), 0}}, interval("0", "1")};
  CHECK_THROWS_AS(select_subgradient(bounded, v1("2"), MinIndexActive{}, 0), DomainError);

  CHECK(is_deterministic(SelectionRule{table}));
  CHECK_FALSE(is_deterministic(SelectionRule{script}));
  CHECK(rule_name(SelectionRule{MaxIndexActive{}}) == "max-index");
}

TEST_CASE("convex subproblem") {
  const DcProblem p = interval_kink();
  const SubproblemResult up = solve_subproblem(p.g, p.C, v1("1"));
  REQUIRE(up.bounded);
  CHECK(up.x == v1("3"));
  CHECK(up.value == -3);
  CHECK(solve_subproblem(p.g, p.C, v1("-1")).x == v1("-2"));
  CHECK(solve_subproblem(p.g, p.C, v1("0")).x == v1("-2"));
  CHECK_FALSE(solve_subproblem(p.g, PolyhedralSet::whole_space(1), v1("1")).bounded);
}

TEST_CASE("DCA runs on the interval example") {
  const DcProblem p = interval_kink();
  const DcaTrace a = run_dca(p, v1("2"), MinIndexActive{}, 100);
  REQUIRE(a.iterates.size() == 3);
  CHECK(a.iterates[1].x == v1("3"));
  CHECK(a.termination == Termination::FixedPoint);
  CHECK(a.step == 1);
  CHECK(a.iterates[0].f == ExtendedRational(Rational(-1)));
  CHECK(a.iterates[2].f == ExtendedRational(Rational(-2)));
  CHECK(a.iterates[0].xi == v1("1"));
  CHECK_FALSE(a.iterates.back().xi.has_value());

  const DcaTrace b = run_dca(p, v1("-3/2"), MinIndexActive{}, 100);
  REQUIRE(b.iterates.size() == 3);
  CHECK(b.iterates[1].x == v1("-2"));
  CHECK(b.iterates[0].f == ExtendedRational(Rational(-1, 2)));

  const DcaTrace c = run_dca(p, v1("-1"), MinIndexActive{}, 100);
  CHECK(c.termination == Termination::FixedPoint);
  CHECK(c.iterates.back().x == v1("-2"));

  const DcaTrace d = run_dca(p, v1("1"), ActiveSetTable{{{IndexSet{1, 2}, 2}, {IndexSet{2}, 2}}}, 100);
  CHECK(d.iterates.back().x == v1("3"));

  const DcaTrace capped = run_dca(p, v1("2"), MinIndexActive{}, 0);
  CHECK(capped.termination == Termination::MaxIterations);
  CHECK(capped.iterates.size() == 1);

  const DcaTrace scripted = run_dca(p, v1("2"), Scripted{{v1("1")}}, 100);
  CHECK(scripted.termination == Termination::MaxIterations);
  CHECK(scripted.iterates.back().x == v1("3"));

  CHECK_THROWS_AS(run_dca(p, v1("4"), MinIndexActive{}, 10), PreconditionError);
}

TEST_CASE("DCA on an unbounded subproblem") {
  const DcaTrace t = run_dca(abs_value(), v1("1"), MinIndexActive{}, 10);
  CHECK(t.termination == Termination::SubproblemUnbounded);
  CHECK(t.step == 0);
}

TEST_CASE("DCA leaving dom h") {
  // dom h = [0, 2] misses the starting point -1.
  const MaxAffine h{{{v1("1"), 0}}, interval("0", "2")};
  const MaxAffine g{{{v1("-1"), 0}}, PolyhedralSet::whole_space(1)};
  const DcProblem p = make_problem(g, h, interval("-1", "1"));
  const DcaTrace t = run_dca(p, v1("-1"), MinIndexActive{}, 10);
  CHECK(t.termination == Termination::SubdifferentialEmpty);
}

TEST_CASE("trace validation") {
  const DcProblem p = interval_kink();
  const TraceReport ok = validate_trace(p, {v1("2"), v1("3"), v1("3")}, {v1("1"), v1("1")});
  CHECK(ok.valid);
  CHECK(ok.steps.size() == 2);

  const TraceReport osc = validate_trace(p, {v1("-1"), v1("1"), v1("-1"), v1("1")}, {v1("0"), v1("0"), v1("0")});
  CHECK(osc.valid);
  for (const auto& v : osc.values) CHECK(v == ExtendedRational(Rational(0)));

  const TraceReport bad = validate_trace(p, {v1("0"), v1("3")}, {v1("1")});
  CHECK_FALSE(bad.valid);
  CHECK_FALSE(bad.steps[0].subgradient);
  CHECK(bad.steps[0].minimizer);

  const TraceReport not_min = validate_trace(p, {v1("2"), v1("1")}, {v1("1")});
  CHECK_FALSE(not_min.steps[0].minimizer);

  const TraceReport trailing = validate_trace(p, {v1("2"), v1("3")}, {v1("1"), v1("1")});
  REQUIRE(trailing.trailing_subgradient);
  CHECK(*trailing.trailing_subgradient);
  const TraceReport trailing_bad = validate_trace(p, {v1("2"), v1("3")}, {v1("1"), v1("0")});
  CHECK_FALSE(trailing_bad.valid);

  CHECK_THROWS_AS(validate_trace(p, {v1("2"), v1("3")}, {}), DimensionError);
}

TEST_CASE("random DCA runs: descent, subgradients, termination") {
  Random rng(99);
  const std::vector<SelectionRule> rules = {MinIndexActive{}, MaxIndexActive{}};
  for (int trial = 0; trial < 40; ++trial) {
    const DcProblem p = random_box_problem(rng);
    const Vec x0 = random_point_in_box(rng, p.C);
    CAPTURE(trial);
    for (const auto& rule : rules) {
      const DcaTrace t = run_dca(p, x0, rule, 1000);
      CHECK(t.termination == Termination::FixedPoint);
      for (std::size_t k = 0; k + 1 < t.iterates.size(); ++k) {
        const DcaIterate& it = t.iterates[k];
        REQUIRE(it.xi);
        CHECK(t.iterates[k + 1].f <= it.f);
        CHECK(oracle::fermat_subgradient(p, t.iterates[k + 1].x, *it.xi));
      }
      CHECK(is_critical(p, t.iterates.back().x));
      std::vector<Vec> xs, xis;
      for (const auto& it : t.iterates) {
        xs.push_back(it.x);
        if (it.xi) xis.push_back(*it.xi);
      }
      CHECK(validate_trace(p, xs, xis).valid);
    }
  }
}

TEST_CASE("table rule built from random choices") {
  Random rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const DcProblem p = random_box_problem(rng);
    const std::size_t m = p.h.pieces.size();
    ActiveSetTable table;
    for (std::size_t mask = 1; mask < (std::size_t{1} << m); ++mask) {
      IndexSet s;
      for (std::size_t j = 0; j < m; ++j) {
        if (mask >> j & 1) s.push_back(j);
      }
      table.choice[s] = s[rng.index(s.size())];
    }
    const DcaTrace t = run_dca(p, random_point_in_box(rng, p.C), table, 1000);
    CHECK(t.termination == Termination::FixedPoint);
  }
}
