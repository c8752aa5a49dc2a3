#pragma once

// Text forms for the exact types. The grammar:
//   rational:  variables [a-z][a-z0-9_]*, integer/rational literals,
//              + - * / ^ ( ), exponents may be negative integers
//   wedge:     rational slots joined by /\ ; terms of a sum may carry a
//              leading rational coefficient "c*" directly before "("
//   cycle:     [[vars...], wedge]
//   li:        terms "m{expr}" with optional rational coefficients;
//              0 and INF are projective-line markers inside the braces
// parse(print(x)) = x for every exact type.

#include <stdexcept>
#include <string>
#include <variant>

#include "chowpoly/cycle.hpp"
#include "chowpoly/lisymbol.hpp"

namespace chowpoly {

struct ParseError : std::runtime_error {
    std::size_t line, column;
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " at line " + std::to_string(line) +
                             ", column " + std::to_string(column)),
          line(line),
          column(column) {}
};

FactoredRational parse_rational(const std::string& text);
WedgeElement parse_wedge(const std::string& text);
Cycle parse_cycle(const std::string& text);
CycleSum parse_cycle_sum(const std::string& text);
LiSymbol parse_li(const std::string& text);
PPoint parse_ppoint(const std::string& text);

using Parsed = std::variant<FactoredRational, WedgeElement, Cycle, LiSymbol>;

// dispatch on shape: [[ -> cycle, { -> Li symbol, /\ -> wedge, else rational
Parsed parse_expression(const std::string& text);

}  // namespace chowpoly
