#include "ilocal/expression.hpp"

#include <cctype>
#include <limits>

#include "ilocal/errors.hpp"

namespace ilocal {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  LinearCombination run() {
    std::vector<SignedIndex> terms;
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    Sign sign = Sign::Plus;
    if (peek() == '-') {
      sign = Sign::Minus;
      ++pos_;
    }
    term(sign, terms);
    for (skip_ws(); !at_end(); skip_ws()) {
      const char op = peek();
      if (op != '+' && op != '-') throw ParseError(std::string("expected '+' or '-', found '") + op + "'", pos_);
      ++pos_;
      term(op == '+' ? Sign::Plus : Sign::Minus, terms);
    }
    return LinearCombination(std::move(terms));
  }

 private:
  void term(Sign sign, std::vector<SignedIndex>& out) {
    skip_ws();
    const std::size_t start = pos_;
    long long mult = 1;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      mult = number();
      skip_ws();
      if (at_end() || peek() != '*') throw ParseError("expected '*' after multiplicity", pos_);
      ++pos_;
      skip_ws();
      if (mult == 0) throw ParseError("multiplicity must be positive", start);
    }
    const std::size_t xpos = pos_;
    if (at_end() || peek() != 'X') throw ParseError("expected 'X'", pos_);
    ++pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected index after 'X'", pos_);
    const long long index = number();
    if (index == 0) throw ParseError("index must be positive in \"X0\"", xpos);
    if (index > std::numeric_limits<int>::max()) throw ParseError("index too large", xpos);
    for (long long k = 0; k < mult; ++k) out.push_back({sign, static_cast<int>(index)});
  }

  long long number() {
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      if (v > 100000000) throw ParseError("number too large", start);
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LinearCombination parse_expression(std::string_view text) { return Parser(text).run(); }

std::string format_expression(const LinearCombination& lc) {
  const auto& t = lc.terms();
  if (t.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < t.size();) {
    std::size_t run = k;
    while (run < t.size() && t[run] == t[k]) ++run;
    const std::size_t count = run - k;
    if (k == 0) {
      if (t[k].sign == Sign::Minus) out += "-";
    } else {
      out += t[k].sign == Sign::Plus ? " + " : " - ";
    }
    if (count > 1) out += std::to_string(count) + "*";
    out += "X" + std::to_string(t[k].index);
    k = run;
  }
  return out;
}

}  // namespace ilocal
