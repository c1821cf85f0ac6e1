#pragma once

#include "mfcat/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace mfcat {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t pos)
      : std::runtime_error(what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

private:
  std::size_t pos_;
};

/// expr := ['+'|'-'] term (('+'|'-') term)*
/// term := factor (('*'|'/') factor)*     divisor must be a nonzero constant
/// factor := atom ('^' uint)?
/// atom := 'x' | 'y' | 'z' | 'I' | int | '(' expr ')'
Poly parse_poly(std::string_view text);

}  // namespace mfcat
