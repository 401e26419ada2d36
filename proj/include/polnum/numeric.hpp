#pragma once

// Exact rational arithmetic on top of boost::multiprecision::cpp_int, the
// +infinity extension used by thresholds, exact comparison of q^g * c with 1,
// and bounded-denominator enumeration of rationals in a window.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polnum/errors.hpp"

namespace polnum {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;

inline Integer abs(const Integer &x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd(const Integer &a, const Integer &b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Integer ipow(const Integer &base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

// Floor of n / d for d > 0.
inline Integer floor_div(const Integer &n, const Integer &d) {
  Integer q = n / d;
  if (n % d != 0 && n < 0)
    --q;
  return q;
}

inline Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool neg = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    neg = text[i] == '-';
    ++i;
  }
  if (i == text.size())
    throw DomainError("malformed integer '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9')
      throw DomainError("malformed integer '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return neg ? Integer(-value) : value;
}

/// A rational number p/q kept in lowest terms with q >= 1.
class ExactRational {
public:
  ExactRational() : num_(0), den_(1) {}
  ExactRational(Integer n) : num_(std::move(n)), den_(1) {}
  template <std::integral T> ExactRational(T n) : num_(n), den_(1) {}

  /// Canonical form of a/b. Throws DomainError when b == 0.
  static ExactRational reduce(Integer a, Integer b) {
    if (b == 0)
      throw DomainError("division by zero");
    if (b < 0) {
      a = -a;
      b = -b;
    }
    const Integer g = gcd(a, b);
    if (g > 1) {
      a /= g;
      b /= g;
    }
    ExactRational r;
    r.num_ = std::move(a);
    r.den_ = std::move(b);
    return r;
  }

  /// Accepts "n", "p/q" with optional sign on the numerator.
  static ExactRational parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
      return ExactRational(parse_integer(text));
    const Integer d = parse_integer(text.substr(slash + 1));
    return reduce(parse_integer(text.substr(0, slash)), d);
  }

  const Integer &numerator() const { return num_; }
  const Integer &denominator() const { return den_; }

  int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  ExactRational reciprocal() const { return reduce(den_, num_); }
  ExactRational abs() const { return sign() < 0 ? -*this : *this; }

  ExactRational pow(unsigned exponent) const {
    ExactRational r;
    r.num_ = ipow(num_, exponent);
    r.den_ = ipow(den_, exponent);
    return r;
  }

  Integer floor() const { return floor_div(num_, den_); }

  std::string to_string() const {
    if (den_ == 1)
      return num_.str();
    return num_.str() + "/" + den_.str();
  }

  ExactRational operator-() const {
    ExactRational r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend ExactRational operator+(const ExactRational &x,
                                 const ExactRational &y) {
    return reduce(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
  }
  friend ExactRational operator-(const ExactRational &x,
                                 const ExactRational &y) {
    return reduce(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
  }
  friend ExactRational operator*(const ExactRational &x,
                                 const ExactRational &y) {
    return reduce(x.num_ * y.num_, x.den_ * y.den_);
  }
  friend ExactRational operator/(const ExactRational &x,
                                 const ExactRational &y) {
    return reduce(x.num_ * y.den_, x.den_ * y.num_);
  }
  ExactRational &operator+=(const ExactRational &y) { return *this = *this + y; }
  ExactRational &operator-=(const ExactRational &y) { return *this = *this - y; }
  ExactRational &operator*=(const ExactRational &y) { return *this = *this * y; }
  ExactRational &operator/=(const ExactRational &y) { return *this = *this / y; }

  friend bool operator==(const ExactRational &x, const ExactRational &y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend std::strong_ordering operator<=>(const ExactRational &x,
                                          const ExactRational &y) {
    const Integer lhs = x.num_ * y.den_;
    const Integer rhs = y.num_ * x.den_;
    if (lhs < rhs)
      return std::strong_ordering::less;
    if (lhs > rhs)
      return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream &operator<<(std::ostream &os, const ExactRational &q) {
    return os << q.to_string();
  }

private:
  Integer num_;
  Integer den_;
};

/// An exact rational or +infinity. Only comparisons are defined on the
/// infinite value; everything else must go through finite().
class ExtendedRational {
public:
  ExtendedRational(ExactRational value) : value_(std::move(value)) {}
  template <std::integral T> ExtendedRational(T n) : value_(ExactRational(n)) {}

  static ExtendedRational infinity() { return ExtendedRational(); }

  static ExtendedRational parse(std::string_view text) {
    if (text == "+inf" || text == "inf")
      return infinity();
    return ExtendedRational(ExactRational::parse(text));
  }

  bool is_infinite() const { return !value_.has_value(); }
  bool is_finite() const { return value_.has_value(); }

  const ExactRational &finite() const {
    if (!value_)
      throw DomainError("operation undefined on +inf");
    return *value_;
  }

  std::string to_string() const {
    return value_ ? value_->to_string() : std::string("+inf");
  }

  friend bool operator==(const ExtendedRational &, const ExtendedRational &) =
      default;
  friend std::strong_ordering operator<=>(const ExtendedRational &x,
                                          const ExtendedRational &y) {
    if (x.is_infinite() || y.is_infinite())
      return x.is_infinite() <=> y.is_infinite();
    return *x.value_ <=> *y.value_;
  }

  friend std::ostream &operator<<(std::ostream &os, const ExtendedRational &q) {
    return os << q.to_string();
  }

private:
  ExtendedRational() = default;
  std::optional<ExactRational> value_;
};

/// Exact ordering of q^g * c against 1, i.e. a^g * c versus b^g for q = a/b.
inline std::strong_ordering compare_power(const ExactRational &q, unsigned g,
                                          const Integer &c) {
  if (q.sign() <= 0)
    throw DomainError("compare_power requires q > 0");
  const Integer lhs = ipow(q.numerator(), g) * c;
  const Integer rhs = ipow(q.denominator(), g);
  if (lhs < rhs)
    return std::strong_ordering::less;
  if (lhs > rhs)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Ascending reduced fractions num/den with a fixed denominator, starting
/// strictly above a lower edge.
class DenominatorStream {
public:
  DenominatorStream(Integer den, const ExactRational &lower_exclusive)
      : den_(std::move(den)) {
    num_ = floor_div(lower_exclusive.numerator() * den_,
                     lower_exclusive.denominator()) +
           1;
    skip_to_coprime();
  }

  // Starts at the given numerator (inclusive), skipping non-coprime ones.
  static DenominatorStream from_numerator(Integer den, Integer num) {
    DenominatorStream s;
    s.den_ = std::move(den);
    s.num_ = std::move(num);
    s.skip_to_coprime();
    return s;
  }

  ExactRational current() const { return ExactRational::reduce(num_, den_); }
  const Integer &numerator() const { return num_; }
  const Integer &denominator() const { return den_; }

  void advance() {
    ++num_;
    skip_to_coprime();
  }

private:
  DenominatorStream() = default;
  void skip_to_coprime() {
    if (den_ == 1)
      return;
    while (gcd(num_, den_) != 1)
      ++num_;
  }

  Integer den_;
  Integer num_;
};

/// Lazy ascending enumeration of every reduced a/b with lo < a/b <= hi and
/// b <= max_denominator, merged from one stream per denominator.
class RationalEnumerator {
public:
  RationalEnumerator(const ExactRational &lo, const ExactRational &hi,
                     std::uint64_t max_denominator)
      : hi_(hi) {
    if (max_denominator == 0)
      throw DomainError("max_denominator must be >= 1");
    if (!(lo < hi))
      return;
    for (std::uint64_t b = 1; b <= max_denominator; ++b) {
      DenominatorStream s(Integer(b), lo);
      if (s.current() <= hi_)
        heap_.push(Entry{s.current(), std::move(s)});
    }
  }

  std::optional<ExactRational> next() {
    if (heap_.empty())
      return std::nullopt;
    Entry top = heap_.top();
    heap_.pop();
    ExactRational out = top.value;
    top.stream.advance();
    top.value = top.stream.current();
    if (top.value <= hi_)
      heap_.push(std::move(top));
    return out;
  }

private:
  struct Entry {
    ExactRational value;
    DenominatorStream stream;
    bool operator>(const Entry &o) const { return value > o.value; }
  };

  ExactRational hi_;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap_;
};

inline std::vector<ExactRational>
enumerate_rationals(const ExactRational &lo, const ExactRational &hi,
                    std::uint64_t max_denominator) {
  std::vector<ExactRational> out;
  RationalEnumerator cursor(lo, hi, max_denominator);
  while (auto q = cursor.next())
    out.push_back(std::move(*q));
  return out;
}

} // namespace polnum
