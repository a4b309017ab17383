#pragma once

#include <string>
#include <string_view>

#include "ilocal/connected.hpp"

namespace ilocal {

/// Parses `expr := ['-'] term (('+'|'-') term)*`, `term := [int '*'] 'X' int`.
/// Whitespace is ignored; multiplicities expand to repeated terms. The
/// result is sorted but not simplified. Throws ParseError with the byte
/// offset of the offending token.
LinearCombination parse_expression(std::string_view text);

/// Inverse of parse_expression on sorted combinations: "X5 - X4 + 2*X3".
/// The empty combination formats as "0".
std::string format_expression(const LinearCombination& lc);

}  // namespace ilocal
