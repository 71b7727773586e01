#pragma once

// Fixtures and random instance generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pdc/linalg.hpp"
#include "pdc/model.hpp"

namespace pdc::testing {

/// p / d in canonical form; mpq_class(p, d) alone is not reduced.
inline Rational frac(long p, long d) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

inline Rational q(const char* text) { return parse_rational(text); }
inline Vec v1(const char* a) { return {q(a)}; }
inline Vec v2(const char* a, const char* b) { return {q(a), q(b)}; }

inline PolyhedralSet interval(const char* lo, const char* hi) {
  return PolyhedralSet{1, {}, {{{-1}, -q(lo)}, {{1}, q(hi)}}};
}

/// lo <= x_i <= hi for every coordinate.
inline PolyhedralSet box(const Vec& lo, const Vec& hi) {
  PolyhedralSet s{lo.size(), {}, {}};
  for (std::size_t i = 0; i < lo.size(); ++i) {
    s.inequalities.push_back({negate(unit(lo.size(), i)), Rational(-lo[i])});
    s.inequalities.push_back({unit(lo.size(), i), hi[i]});
  }
  return s;
}

inline MaxAffine zero_function(std::size_t n) { return MaxAffine{{{zeros(n), 0}}, PolyhedralSet::whole_space(n)}; }

/// The interval example: C = [-2, 3], g = 0, h = max{-x - 1, 0, x - 1}.
inline DcProblem interval_kink() {
  MaxAffine h{{{{-1}, -1}, {{0}, 0}, {{1}, -1}}, PolyhedralSet::whole_space(1)};
  return make_problem(zero_function(1), h, interval("-2", "3"));
}

/// g = 0, h = |x|, C = the whole line.
inline DcProblem abs_value() {
  MaxAffine h{{{{1}, 0}, {{-1}, 0}}, PolyhedralSet::whole_space(1)};
  return make_problem(zero_function(1), h, PolyhedralSet::whole_space(1));
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : gen_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  /// p / d with |p| <= bound * d and d in {1, 2, 3, 4}.
  Rational rational(long bound) {
    const long d = integer(1, 4);
    return frac(integer(-bound * d, bound * d), d);
  }

  Vec vector(std::size_t n, long bound) {
    Vec v(n);
    for (auto& x : v) x = Rational(integer(-bound, bound));
    return v;
  }

  /// Uniform point of the step grid inside [lo, hi].
  Rational grid_value(const Rational& lo, const Rational& hi, const Rational& step) {
    const Rational span = (hi - lo) / step;
    const long cells = span.get_num().get_si() / span.get_den().get_si();
    return lo + step * integer(0, cells);
  }

  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

/// Max-affine function on the whole space with `pieces` distinct random
/// integer pieces.
inline MaxAffine random_max_affine(Random& rng, std::size_t n, std::size_t pieces) {
  MaxAffine f{{}, PolyhedralSet::whole_space(n)};
  while (f.pieces.size() < pieces) {
    AffinePiece p{rng.vector(n, 3), Rational(rng.integer(-3, 3))};
    bool fresh = true;
    for (const auto& o : f.pieces) fresh = fresh && !(o == p);
    if (fresh) f.pieces.push_back(std::move(p));
  }
  return f;
}

/// Box with rational corners: lo_i in [-3, 0], hi_i = lo_i + width, width
/// a positive rational with denominator <= 2.
inline PolyhedralSet random_box(Random& rng, std::size_t n) {
  Vec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = frac(rng.integer(-6, 0), 2);
    hi[i] = lo[i] + frac(rng.integer(1, 8), 2);
  }
  return box(lo, hi);
}

/// Random bounded DC instance: box C, n <= 3, |I|, |J| <= 4.
inline DcProblem random_box_problem(Random& rng) {
  const std::size_t n = 1 + rng.index(3);
  MaxAffine g = random_max_affine(rng, n, 1 + rng.index(4));
  MaxAffine h = random_max_affine(rng, n, 1 + rng.index(4));
  return make_problem(std::move(g), std::move(h), random_box(rng, n));
}

/// Point of the box C (as built by `box`) with coordinates on a 1/4 grid.
inline Vec random_point_in_box(Random& rng, const PolyhedralSet& C) {
  const std::size_t n = C.dimension;
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Rational lo = -C.inequalities[2 * i].rhs;
    const Rational hi = C.inequalities[2 * i + 1].rhs;
    x[i] = rng.grid_value(lo, hi, Rational(1, 4));
  }
  return x;
}

/// Convex piecewise-linear function of one variable whose breakpoints lie
/// on multiples of `step`: increasing slopes, offsets chained so that
/// consecutive pieces meet exactly at the breakpoints.
struct Univariate {
  std::vector<Rational> slopes;
  std::vector<Rational> offsets;
};

inline Univariate random_univariate(Random& rng, std::size_t pieces, const Rational& step, long span) {
  Univariate f;
  std::vector<long> ticks;
  while (ticks.size() + 1 < pieces) {
    const long t = rng.integer(-span, span);
    if (std::find(ticks.begin(), ticks.end(), t) == ticks.end()) ticks.push_back(t);
  }
  std::sort(ticks.begin(), ticks.end());
  Rational slope = rng.integer(-3, 0);
  f.slopes.push_back(slope);
  f.offsets.push_back(Rational(rng.integer(-2, 2)));
  for (long t : ticks) {
    const Rational next = slope + rng.integer(1, 2);
    const Rational b = step * t;
    f.offsets.push_back(f.offsets.back() + (slope - next) * b);
    f.slopes.push_back(next);
    slope = next;
  }
  return f;
}

/// Sum of univariate functions, one per coordinate, as a max over all
/// combinations of their pieces.
inline MaxAffine separable_sum(const std::vector<Univariate>& parts) {
  const std::size_t n = parts.size();
  MaxAffine f{{{zeros(n), 0}}, PolyhedralSet::whole_space(n)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<AffinePiece> next;
    for (const auto& p : f.pieces) {
      for (std::size_t k = 0; k < parts[i].slopes.size(); ++k) {
        AffinePiece r = p;
        r.u[i] += parts[i].slopes[k];
        r.alpha += parts[i].offsets[k];
        next.push_back(std::move(r));
      }
    }
    f.pieces = std::move(next);
  }
  return f;
}

/// Separable instance whose kinks all lie on the `step` grid, with C a
/// grid-aligned box. f is affine along every edge between neighboring grid
/// points, so grid comparisons are exact local statements.
inline DcProblem random_grid_aligned_problem(Random& rng, std::size_t n, const Rational& step) {
  std::vector<Univariate> gs, hs;
  const std::size_t g_pieces = n == 1 ? 3 : 2;
  const std::size_t h_pieces = n == 1 ? 4 : 2;
  for (std::size_t i = 0; i < n; ++i) {
    gs.push_back(random_univariate(rng, 1 + rng.index(g_pieces), step, 12));
    hs.push_back(random_univariate(rng, 1 + rng.index(h_pieces), step, 12));
  }
  Vec lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = step * rng.integer(-16, -4);
    hi[i] = step * rng.integer(4, 16);
  }
  return make_problem(separable_sum(gs), separable_sum(hs), box(lo, hi));
}

}  // namespace pdc::testing
