#include <doctest.h>

#include "oracles.hpp"
#include "pdc/error.hpp"
#include "pdc/optimality.hpp"
#include "pdc/structure.hpp"
#include "support.hpp"

using namespace pdc;
using namespace pdc::testing;

TEST_CASE("body containment") {
  const ConvexBody seg01{1, {v1("0"), v1("1")}, {}, {}};
  const ConvexBody seg_pm{1, {v1("-1"), v1("1")}, {}, {}};
  const ConvexBody half{1, {v1("0")}, {v1("1")}, {}};
  CHECK(body_in_body(seg01, seg_pm));
  CHECK(body_in_body(seg01, half));
  CHECK_FALSE(body_in_body(ConvexBody{1, {v1("-1"), v1("0")}, {}, {}}, half));
  CHECK_FALSE(body_in_body(half, seg_pm));
  const ConvexBody line{1, {v1("0")}, {}, {v1("1")}};
  CHECK(body_in_body(half, line));
  CHECK_FALSE(body_in_body(line, half));
}

TEST_CASE("body intersection") {
  const auto w = bodies_intersect(ConvexBody{1, {v1("0"), v1("1")}, {}, {}}, ConvexBody{1, {v1("1"), v1("2")}, {}, {}});
  REQUIRE(w);
  CHECK(*w == v1("1"));
  CHECK_FALSE(bodies_intersect(ConvexBody{1, {v1("0"), v1("1")}, {}, {}}, ConvexBody{1, {v1("2"), v1("3")}, {}, {}}));
  const DcProblem abs = abs_value();
  const auto z = bodies_intersect(subdifferential(abs.h, v1("0")), restricted_subdifferential(abs, v1("0")));
  REQUIRE(z);
  CHECK(*z == v1("0"));
}

TEST_CASE("criticality and stationarity on the interval example") {
  const DcProblem p = interval_kink();
  CHECK(is_critical(p, v1("1")));
  CHECK_FALSE(is_critical(p, v1("2")));
  CHECK(is_stationary(p, v1("0")));
  CHECK_FALSE(is_stationary(p, v1("1")));
  CHECK(is_local_solution(p, v1("-2")) == LocalVerdict::Yes);
  CHECK(is_local_solution(p, v1("-1")) == LocalVerdict::No);
}

TEST_CASE("absolute value: critical but not stationary at the kink") {
  const DcProblem p = abs_value();
  CHECK(is_critical(p, v1("0")));
  CHECK_FALSE(is_stationary(p, v1("0")));
}

TEST_CASE("points outside the feasible set are rejected") {
  const DcProblem p = interval_kink();
  CHECK_THROWS_WITH_AS(is_critical(p, v1("4")), "point is not in C", PreconditionError);
  const MaxAffine h{{{v1("1"), 0}}, interval("0", "10")};
  const DcProblem q = make_problem(zero_function(1), h, interval("-1", "1"));
  CHECK_THROWS_WITH_AS(is_stationary(q, v1("-1")), "point is not in dom h", PreconditionError);
  const Classification c = classify(q, v1("-1"), false);
  CHECK_FALSE(c.feasible);
  CHECK(c.local == LocalVerdict::No);
}

TEST_CASE("boundary of dom h leaves local optimality undecided") {
  // g = x on C = [0, 1], h = x on [0, inf): both subdifferentials at 0 are
  // (-inf, 1], but 0 is on the boundary of dom h.
  const MaxAffine g{{{v1("1"), 0}}, PolyhedralSet::whole_space(1)};
  const MaxAffine h{{{v1("1"), 0}}, PolyhedralSet{1, {}, {{{-1}, 0}}}};
  const DcProblem p = make_problem(g, h, interval("0", "1"));
  CHECK(is_stationary(p, v1("0")));
  CHECK(is_local_solution(p, v1("0")) == LocalVerdict::UnknownHypothesisNotMet);
  const Classification c = classify(p, v1("0"), true);
  CHECK(c.flags.boundary_extension);
  CHECK_FALSE(c.flags.interior_dom_h);
  CHECK(c.global == GlobalVerdict::NotComputed);
}

TEST_CASE("classification goldens") {
  const DcProblem p = interval_kink();
  const Classification at3 = classify(p, v1("3"), true);
  CHECK(at3.critical);
  CHECK(at3.stationary);
  CHECK(at3.local == LocalVerdict::Yes);
  CHECK(at3.global == GlobalVerdict::Yes);
  const Classification atm2 = classify(p, v1("-2"), true);
  CHECK(atm2.local == LocalVerdict::Yes);
  CHECK(atm2.global == GlobalVerdict::No);
  const Classification at2 = classify(p, v1("2"), true);
  CHECK_FALSE(at2.critical);
  CHECK_FALSE(at2.stationary);
  CHECK(at2.local == LocalVerdict::No);
  CHECK(at2.global == GlobalVerdict::No);
}

TEST_CASE("implication chain and two stationarity paths on random instances") {
  Random rng(314);
  for (int trial = 0; trial < 40; ++trial) {
    const DcProblem p = random_box_problem(rng);
    const GlobalSolutions global = global_solutions(p);
    for (int k = 0; k < 6; ++k) {
      const Vec x = random_point_in_box(rng, p.C);
      CAPTURE(trial);
      CAPTURE(to_string(x));
      const Classification c = classify(p, x, global);
      if (c.local == LocalVerdict::Yes) CHECK(c.stationary);
      if (c.stationary) CHECK(c.critical);
      if (c.global == GlobalVerdict::Yes) CHECK(c.local == LocalVerdict::Yes);
      CHECK(c.flags.interior_both);
      CHECK(is_stationary_by_generators(p, x) == c.stationary);
      CHECK(oracle::stationary(p, x) == c.stationary);
    }
  }
}

TEST_CASE("stationarity with equality constraints and domain boundaries") {
  // C is the segment x1 + x2 = 1 inside the unit box; dom g a half-plane.
  Random rng(8);
  for (int trial = 0; trial < 25; ++trial) {
    PolyhedralSet C = box({0, 0}, {1, 1});
    C.equalities.push_back({{1, 1}, 1});
    MaxAffine g = random_max_affine(rng, 2, 1 + rng.index(3));
    g.domain = PolyhedralSet{2, {}, {{{1, 0}, frac(rng.integer(1, 2), 2)}}};
    MaxAffine h = random_max_affine(rng, 2, 1 + rng.index(3));
    const DcProblem p = make_problem(g, h, C);
    for (int k = 0; k < 5; ++k) {
      const Rational t = frac(rng.integer(0, 4), 4);
      const Vec x = {t, 1 - t};
      if (!membership(p.g.domain, x)) continue;
      CAPTURE(trial);
      CHECK(is_stationary_by_generators(p, x) == is_stationary(p, x));
    }
  }
}
