#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ilocal {

/// An exact rational grading. Maslov gradings, grading-function values and
/// grading shifts are all carried as Grading; no floating point is involved.
class Grading {
 public:
  using value_type = boost::rational<std::int64_t>;

  constexpr Grading() = default;
  Grading(std::int64_t integer) : value_(integer) {}  // NOLINT(implicit)
  Grading(std::int64_t num, std::int64_t den);

  /// Accepts "n/d", "n" and surrounding whitespace.
  static Grading parse(std::string_view text);

  std::int64_t numerator() const { return value_.numerator(); }
  std::int64_t denominator() const { return value_.denominator(); }

  bool is_integer() const { return value_.denominator() == 1; }
  bool is_even_integer() const { return is_integer() && value_.numerator() % 2 == 0; }

  /// Throws if not an integer.
  std::int64_t to_integer() const;

  /// Representative of this value modulo `modulus` in [0, modulus).
  Grading mod(std::int64_t modulus) const;

  /// Canonical "n/d" form used by every JSON schema.
  std::string to_fraction() const;
  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;

  Grading operator-() const { return Grading(-value_); }
  Grading& operator+=(const Grading& o) { value_ += o.value_; return *this; }
  Grading& operator-=(const Grading& o) { value_ -= o.value_; return *this; }
  Grading& operator*=(std::int64_t k) { value_ *= k; return *this; }
  Grading& operator/=(std::int64_t k);

  friend Grading operator+(Grading a, const Grading& b) { return a += b; }
  friend Grading operator-(Grading a, const Grading& b) { return a -= b; }
  friend Grading operator*(Grading a, std::int64_t k) { return a *= k; }
  friend Grading operator*(std::int64_t k, Grading a) { return a *= k; }
  friend Grading operator/(Grading a, std::int64_t k) { return a /= k; }

  friend bool operator==(const Grading& a, const Grading& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Grading& a, const Grading& b) {
    if (a.value_ < b.value_) return std::strong_ordering::less;
    if (b.value_ < a.value_) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Grading& g);

 private:
  explicit Grading(value_type v) : value_(v) {}
  value_type value_{0};
};

}  // namespace ilocal

template <>
struct std::hash<ilocal::Grading> {
  std::size_t operator()(const ilocal::Grading& g) const noexcept {
    return std::hash<std::int64_t>{}(g.numerator()) * 31u ^ std::hash<std::int64_t>{}(g.denominator());
  }
};
