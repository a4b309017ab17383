#include "ilocal/grading.hpp"

#include <cctype>
#include <charconv>
#include <ostream>

#include "ilocal/errors.hpp"

namespace ilocal {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::int64_t parse_int(std::string_view s, std::string_view whole) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  std::int64_t out = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("invalid grading '" + std::string(whole) + "'",
                     static_cast<std::size_t>(ptr - whole.data()));
  }
  return out;
}

}  // namespace

Grading::Grading(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error("grading with zero denominator");
  value_ = value_type(num, den);
}

Grading Grading::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Grading(parse_int(t, t));
  const std::int64_t num = parse_int(trim(t.substr(0, slash)), t);
  const std::int64_t den = parse_int(trim(t.substr(slash + 1)), t);
  if (den == 0) throw ParseError("zero denominator in grading '" + std::string(t) + "'", slash + 1);
  return Grading(num, den);
}

std::int64_t Grading::to_integer() const {
  if (!is_integer()) throw Error("grading " + to_string() + " is not an integer");
  return value_.numerator();
}

Grading Grading::mod(std::int64_t modulus) const {
  // floor(value / modulus) computed on the exact fraction
  const std::int64_t n = value_.numerator();
  const std::int64_t d = value_.denominator() * modulus;
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return *this - Grading(q * modulus);
}

Grading& Grading::operator/=(std::int64_t k) {
  if (k == 0) throw Error("grading division by zero");
  value_ /= k;
  return *this;
}

std::string Grading::to_fraction() const {
  return std::to_string(value_.numerator()) + "/" + std::to_string(value_.denominator());
}

std::string Grading::to_string() const {
  if (is_integer()) return std::to_string(value_.numerator());
  return to_fraction();
}

std::ostream& operator<<(std::ostream& os, const Grading& g) { return os << g.to_string(); }

}  // namespace ilocal
