#pragma once

#include "qsr/arithmetic.hpp"

#include <string_view>

namespace qsr::cli {

/// Evaluates an infix expression over compact-notation literals.
///
/// Tokens are whitespace-separated: literals ("110+1", "0+01;1-"), the
/// operators + - *, division with explicit accuracy "/:7", and parentheses.
/// * and /:N bind tighter than + and -; everything is left-associative.
/// Throws ParseError with the offending position in the input.
StringState eval_expression(std::string_view expr);

}  // namespace qsr::cli
