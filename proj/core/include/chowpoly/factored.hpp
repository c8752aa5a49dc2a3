#pragma once

// Factored rational functions: a nonzero rational constant times a product
// of irreducible monic polynomial atoms with integer exponents.
//
// Factorization is deliberately partial: rational content, square-free
// decomposition, splitting off factors linear in some variable, and
// univariate rational roots / quadratic discriminants / cubic
// irreducibility. Anything that survives those passes becomes an opaque
// atom (square-free, content-free, irreducibility unverified).

#include <optional>
#include <string>
#include <vector>

#include "chowpoly/errors.hpp"
#include "chowpoly/multipoly.hpp"

namespace chowpoly {

struct Atom {
    enum class Kind { Prime, Irreducible, Opaque };
    Kind kind = Kind::Irreducible;
    Int prime;       // Kind::Prime
    MultiPoly poly;  // otherwise: primitive, monic in lex-leading term

    static Atom make_prime(const Int& p);
    static Atom make_poly(MultiPoly p, bool irreducible);

    // total order: (kind, degree, lexicographic coefficient sequence)
    static int compare(const Atom& a, const Atom& b);
    bool operator==(const Atom& o) const { return compare(*this, o) == 0; }
    bool operator<(const Atom& o) const { return compare(*this, o) < 0; }

    bool is_poly() const { return kind != Kind::Prime; }
    std::string to_string() const;
};

class FactoredRational {
public:
    FactoredRational() : constant_(1) {}
    explicit FactoredRational(const Rat& c);  // c != 0

    const Rat& constant() const { return constant_; }
    const std::vector<std::pair<Atom, int>>& factors() const { return factors_; }

    bool is_constant() const { return factors_.empty(); }
    bool is_one() const { return factors_.empty() && constant_ == 1; }

    FactoredRational operator*(const FactoredRational& o) const;
    FactoredRational inverse() const;
    FactoredRational pow(int e) const;
    bool operator==(const FactoredRational& o) const;

    // expanded numerator/denominator pair (for printing and numerics)
    std::pair<MultiPoly, MultiPoly> expand() const;
    MultiPoly expand_poly() const;  // requires all exponents >= 0

    // union of atom variables
    std::vector<std::string> variables() const;
    bool uses(const std::string& var) const;

    std::string to_string() const;

    // internal builder: merges duplicates, drops zero exponents
    static FactoredRational build(Rat constant, std::vector<std::pair<Atom, int>> fs);

private:
    Rat constant_;                               // nonzero
    std::vector<std::pair<Atom, int>> factors_;  // sorted by atom, unique
};

// partial factorization; throws std::domain_error on the zero polynomial
FactoredRational factor(const MultiPoly& p);

// convenience: factor a num/den pair
FactoredRational factor_fraction(const MultiPoly& num, const MultiPoly& den);

// value substituted for a variable: a rational function or the point at
// infinity (handled in the chart s = 1/var)
struct SubstValue {
    bool infinite = false;
    bool zero = false;
    std::optional<FactoredRational> value;  // engaged unless infinite or zero
    static SubstValue at_infinity() {
        SubstValue s;
        s.infinite = true;
        return s;
    }
    static SubstValue of(FactoredRational f) {
        SubstValue s;
        s.value = std::move(f);
        return s;
    }
    static SubstValue of_rat(const Rat& c) {
        if (c == 0) {
            SubstValue s;
            s.zero = true;
            return s;
        }
        return of(FactoredRational(c));
    }
};

// f with var := value; throws NotAUnitError if some factor vanishes or
// blows up identically on the substitution locus
FactoredRational substitute(const FactoredRational& f, const std::string& var,
                            const SubstValue& value);

// order of vanishing of f along var = value together with the unit part
// (the result of dividing out the uniformizer power and substituting);
// at infinity the uniformizer is s = 1/var and the unit part is evaluated
// at s = 0
std::pair<int, FactoredRational> local_order_unit(const FactoredRational& f,
                                                  const std::string& var,
                                                  const SubstValue& value);

// transcendence degree of Q(f_1, ..., f_k) over Q: exact Jacobian rank of
// the logarithmic derivative matrix via fraction-free elimination
int trans_degree(const std::vector<FactoredRational>& fs,
                 const std::vector<std::string>& vars);

}  // namespace chowpoly
