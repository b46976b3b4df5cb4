#pragma once

#include <string>

#include "dcrit/polynomial.hpp"

namespace dcrit {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(std::string msg, int line_, int col_)
        : std::runtime_error(std::move(msg)), line(line_), col(col_) {}
};

// Polynomial literal grammar (see docs/problem-format.md):
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' ['-'] integer)?
//   base   := rational | variable | '(' expr ')'
//   rational := integer ('/' integer)?
// line0/col0 locate the literal inside a larger file for error reporting.
Polynomial parse_polynomial(const std::string& text, const VarTable* ctx,
                            int line0 = 1, int col0 = 1);

} // namespace dcrit
