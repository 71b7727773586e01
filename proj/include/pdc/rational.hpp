#pragma once

// Exact scalars. Rational is GMP's mpq_class: arbitrary precision, always
// canonical (lowest terms, positive denominator) after arithmetic.
//
// Note: mpq_class arithmetic returns expression templates, so never bind the
// result of an arithmetic expression to `auto`.

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace pdc {

using Rational = mpq_class;
using Vec = std::vector<Rational>;

/// Parses "p" or "p/q" (optional leading sign, decimal digits only).
/// The result is canonicalized. Throws std::invalid_argument on bad input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Comma-separated list of rationals, e.g. "-3/2,1,0".
Vec parse_vector(std::string_view csv);
std::string to_string(const Vec& v);

Rational floor_to_multiple(const Rational& value, const Rational& step);
Rational ceil_to_multiple(const Rational& value, const Rational& step);

/// Q extended with -inf and +inf.
///
/// Addition of opposite infinities yields +inf, which gives the
/// (+inf) - (+inf) = +inf convention used for DC objectives.
class ExtendedRational {
 public:
  enum class Kind { MinusInfinity, Finite, PlusInfinity };

  ExtendedRational() = default;
  ExtendedRational(const Rational& value) : value_(value) {}  // NOLINT: implicit by intent
  ExtendedRational(long value) : value_(value) {}             // NOLINT

  static ExtendedRational plus_infinity() { return ExtendedRational(Kind::PlusInfinity); }
  static ExtendedRational minus_infinity() { return ExtendedRational(Kind::MinusInfinity); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_plus_infinity() const { return kind_ == Kind::PlusInfinity; }
  bool is_minus_infinity() const { return kind_ == Kind::MinusInfinity; }

  /// The finite value. Throws std::logic_error on an infinite value.
  const Rational& value() const;

  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b);
  friend std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b);

  friend ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b);
  friend ExtendedRational operator-(const ExtendedRational& a);

 private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

/// "inf", "-inf", or the rational string.
std::string to_string(const ExtendedRational& value);

/// Inverse of to_string(ExtendedRational).
ExtendedRational parse_extended(std::string_view text);

}  // namespace pdc
