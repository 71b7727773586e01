#include "pdc/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace pdc {

namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class parse_integer(std::string_view s) {
  std::string digits(s);
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  return mpz_class(digits, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view s = trim(text);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  const mpz_class d = parse_integer(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational r(parse_integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

Vec parse_vector(std::string_view csv) {
  Vec out;
  if (trim(csv).empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = csv.find(',', start);
    out.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].get_str();
  }
  return out + ")";
}

Rational floor_to_multiple(const Rational& value, const Rational& step) {
  const Rational q = value / step;
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(f) * step;
}

Rational ceil_to_multiple(const Rational& value, const Rational& step) {
  const Rational q = value / step;
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(c) * step;
}

const Rational& ExtendedRational::value() const {
  if (kind_ != Kind::Finite) throw std::logic_error("value() on an infinite ExtendedRational");
  return value_;
}

bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return false;
  return a.kind_ != ExtendedRational::Kind::Finite || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedRational& a, const ExtendedRational& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (a.kind_ != ExtendedRational::Kind::Finite) return std::strong_ordering::equal;
  const int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

ExtendedRational operator+(const ExtendedRational& a, const ExtendedRational& b) {
  using K = ExtendedRational::Kind;
  if (a.kind_ == K::PlusInfinity || b.kind_ == K::PlusInfinity) return ExtendedRational::plus_infinity();
  if (a.kind_ == K::MinusInfinity || b.kind_ == K::MinusInfinity) return ExtendedRational::minus_infinity();
  return ExtendedRational(Rational(a.value_ + b.value_));
}

ExtendedRational operator-(const ExtendedRational& a) {
  using K = ExtendedRational::Kind;
  switch (a.kind_) {
    case K::PlusInfinity: return ExtendedRational::minus_infinity();
    case K::MinusInfinity: return ExtendedRational::plus_infinity();
    case K::Finite: break;
  }
  return ExtendedRational(Rational(-a.value_));
}

ExtendedRational operator-(const ExtendedRational& a, const ExtendedRational& b) { return a + (-b); }

std::string to_string(const ExtendedRational& value) {
  if (value.is_plus_infinity()) return "inf";
  if (value.is_minus_infinity()) return "-inf";
  return value.value().get_str();
}

ExtendedRational parse_extended(std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "inf" || s == "+inf") return ExtendedRational::plus_infinity();
  if (s == "-inf") return ExtendedRational::minus_infinity();
  return ExtendedRational(parse_rational(s));
}

}  // namespace pdc
