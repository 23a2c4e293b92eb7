#pragma once

#include <stdexcept>
#include <string>

#include "starq/symbol.hpp"

namespace starq {

/// Syntax or range error in a symbol expression, with 0-based position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Grammar (whitespace insignificant):
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | primary ['^' uint]
///   primary:= uint ['/' uint] | 'x'<idx> | 'xi'<idx> | 'h' | '(' expr ')'
/// Variable indices are 1-based and must lie in 1..n.
Symbol parse_symbol(const std::string& text, int n);

/// Canonical text form; parse_symbol(format_symbol(F), F.dim()) == F.
/// Terms are ordered by descending (fiber degree, fiber exponents, base
/// exponents, h power); factors print as coefficient, x's, h, xi's.
std::string format_symbol(const Symbol& F);

}  // namespace starq
