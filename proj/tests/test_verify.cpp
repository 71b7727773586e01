#include <doctest.h>

#include "oracles.hpp"
#include "pdc/error.hpp"
#include "pdc/verify.hpp"
#include "support.hpp"

using namespace pdc;
using namespace pdc::testing;

TEST_CASE("grid points of the interval example") {
  const DcProblem p = interval_kink();
  const auto [lo, hi] = bounding_box(p);
  CHECK(lo == v1("-2"));
  CHECK(hi == v1("3"));
  CHECK(grid_points(p, Rational(1, 2)).size() == 11);
  CHECK(grid_points(p, Rational(2)).front() == v1("-2"));
  CHECK_THROWS_AS(grid_points(p, Rational(0)), PreconditionError);
  CHECK_THROWS_AS(bounding_box(abs_value()), PreconditionError);
}

TEST_CASE("grid verification of the interval example") {
  const GridReport r = verify_on_grid(interval_kink(), Rational(1, 8));
  CHECK(r.passed());
  CHECK(r.points == 41);
  REQUIRE(r.checks.size() == 5);
  for (const auto& c : r.checks) {
    CHECK_FALSE(c.skipped);
    CHECK(c.checked > 0);
  }
}

TEST_CASE("grid verification skips the decomposition checks off-hypothesis") {
  const MaxAffine h{{{v1("1"), 0}}, PolyhedralSet{1, {}, {{{-1}, 0}}}};
  const GridReport r = verify_on_grid(make_problem(zero_function(1), h, interval("0", "1")), Rational(1, 4));
  CHECK(r.checks[3].skipped);
  CHECK(r.checks[4].skipped);
  CHECK(r.passed());
}

TEST_CASE("grid verification on grid-aligned random instances") {
  Random rng(17);
  const Rational step(1, 8);
  for (int trial = 0; trial < 6; ++trial) {
    const DcProblem p = random_grid_aligned_problem(rng, 1 + trial % 2, step);
    CAPTURE(trial);
    const GridReport r = verify_on_grid(p, step);
    CHECK(r.passed());
    CHECK(r.points > 0);
  }
}

TEST_CASE("dimension three is refused") {
  Random rng(1);
  const DcProblem p = make_problem(random_max_affine(rng, 3, 2), random_max_affine(rng, 3, 2), box({0, 0, 0}, {1, 1, 1}));
  CHECK_THROWS_AS(verify_on_grid(p, Rational(1, 2)), PreconditionError);
}
