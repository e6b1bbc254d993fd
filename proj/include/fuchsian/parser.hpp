#pragma once

#include "fuchsian/ratfunc.hpp"

#include <string_view>

namespace fuchsian {

// expr   := term (('+'|'-') term)*
// term   := unary (('*'|'/') unary)*
// unary  := '-' unary | factor
// factor := base ('^' ['-'|'+'] integer)?
// base   := integer ('/' integer)? | variable | '(' expr ')'
//
// A rational literal a/b is just the division a / b, so the grammar does not
// need to special-case it.
RationalFunction parse_expression(std::string_view text, std::string_view variable = "x");

}  // namespace fuchsian
