#pragma once

// Divisorial valuations on function fields of (P^1)^p and the tame symbol
// Lambda^k F^x -> Lambda^{k-1} (residue field)^x.

#include <string>
#include <vector>

#include "chowpoly/wedge.hpp"

namespace chowpoly {

struct Valuation {
    enum class Kind { Point, Infinity, Graph };
    Kind kind = Kind::Point;
    std::string var;  // coordinate variable (Point/Infinity), solved variable (Graph)
    Rat value;        // Point only
    FactoredRational expr;  // Graph: solving expression r in the other variables
    Atom defining;          // Graph: monic defining atom, degree 1 in var

    static Valuation point(const std::string& var, const Rat& value);
    static Valuation infinity(const std::string& var);
    static Valuation graph(const std::string& solved_var, FactoredRational r, Atom defining);

    bool operator==(const Valuation& o) const;
    std::string to_string() const;
};

// order of vanishing of f along v; constants have order 0
int ord(const Valuation& v, const FactoredRational& f);

// residue-field representative of a unit; throws NotAUnitError when
// ord(v, f) != 0
FactoredRational residue_unit(const Valuation& v, const FactoredRational& f);

// the tame symbol: arity k -> arity k-1 over the residue field
WedgeElement tame_symbol(const Valuation& v, const WedgeElement& a);

// all divisors supporting the zeros/poles of a on (P^1)^vars, plus the
// infinity divisor of every variable; throws UnparametrizableDivisorError
// for an atom linear in no variable
std::vector<Valuation> divisor_support(const WedgeElement& a,
                                       const std::vector<std::string>& vars);

}  // namespace chowpoly
