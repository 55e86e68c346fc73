#pragma once

// Divisor expression mini-language.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary ('*'? unary)*
//   unary   := ('+' | '-')* primary
//   primary := number | symbol | '(' expr ')'
//   number  := digits ('/' digits)?
//   symbol  := 'B' digits | 'K' | 'psi' | 'DA'
//
// Whitespace is ignored. A product may contain at most one divisor factor,
// and a sum must consist of divisors only, so "2 + K" is rejected. DA is
// defined for n = 6 only.

#include "m06/divisor.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace m06 {

class ExpressionError : public std::runtime_error {
public:
    ExpressionError(const std::string& what, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

SymmetricDivisor parse_divisor_expression(std::string_view text, int n = 6);

} // namespace m06
