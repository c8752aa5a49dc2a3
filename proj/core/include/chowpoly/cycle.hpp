#pragma once

// Formal cycles [Y, a] with Y = (P^1)^p, the residue differential, the
// polylogarithmic constructors and the simplification rules.
//
// Degree bookkeeping: a weight-m, degree-j cycle lives on p = m - j
// coordinates and carries a wedge of arity n = 2m - j.

#include <optional>
#include <string>
#include <vector>

#include "chowpoly/lisymbol.hpp"
#include "chowpoly/valuation.hpp"
#include "chowpoly/wedge.hpp"

namespace chowpoly {

struct Cycle {
    std::vector<std::string> vars;  // sorted coordinate names, p of them
    WedgeElement a;
    int weight = 0;
    int degree = 0;

    // checks p = m - j and n = 2m - j
    static Cycle make(std::vector<std::string> vars, WedgeElement a, int weight,
                      int degree);
    bool operator==(const Cycle& o) const;
    std::string to_string() const;
};

class CycleSum {
public:
    CycleSum(int weight, int degree) : weight_(weight), degree_(degree) {}

    int weight() const { return weight_; }
    int degree() const { return degree_; }
    const std::vector<std::pair<Rat, Cycle>>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Rat& c, Cycle cyc);
    CycleSum operator+(const CycleSum& o) const;
    CycleSum operator-(const CycleSum& o) const;
    CycleSum operator*(const Rat& c) const;

    std::string to_string() const;

private:
    int weight_, degree_;
    std::vector<std::pair<Rat, Cycle>> terms_;
};

// sum of tame symbols over the divisor support of every term;
// raises the degree by one
CycleSum differential(const CycleSum& s);
CycleSum differential(const Cycle& c);

// merges identical cycles, applies the transcendence-degree rule and (in
// degree 1) the constant-slot rule, and emits a deterministic canonical form
CycleSum normalize_cycle(const CycleSum& s);

// omega_m: (1-x1)^x1^(x1-x2)^x2^...^(x_{m-1}-f) in fresh variables
// x1..x_{m-1}; nullopt f (the points 0, infinity) gives the zero element
WedgeElement omega(int m, const std::optional<FactoredRational>& f);
WedgeElement omega(int m, const Rat& a);

// the multiplicative-coordinates form (1-y1)^y1^...^(1-y_{m-1})^y_{m-1}^
// (y1...y_{m-1} - a) in variables y1..y_{m-1}
WedgeElement omega_tilde(int m, const Rat& a);

// [ (P^1)^{m-1}, (1-x1)^x1^...^(1-x_{m-1})^x_{m-1}^P ], weight m, degree 1
Cycle gamma_P(int m, const MultiPoly& P);

// {a}_m -> [(P^1)^{m-1}, omega_m(a)], extended linearly; 0, infinity -> 0
CycleSum T_m(const LiSymbol& s);

// true iff normalize_cycle(a - pullback(b, map)) vanishes for some map
bool equal_after_reparam(const CycleSum& a, const CycleSum& b,
                         const std::vector<CoordMap>& maps);

}  // namespace chowpoly
