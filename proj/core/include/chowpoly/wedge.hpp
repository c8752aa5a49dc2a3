#pragma once

// Canonical forms in Lambda^n F^x (x) Q: wedge monomials of atoms with
// rational coefficients. Constants are expanded into prime atoms here and
// torsion (-1, hence all rational roots of unity) dies.

#include <map>
#include <string>
#include <vector>

#include "chowpoly/factored.hpp"

namespace chowpoly {

struct WedgeMonomial {
    std::vector<Atom> slots;  // strictly increasing in the atom order

    static int compare(const WedgeMonomial& a, const WedgeMonomial& b);
    bool operator<(const WedgeMonomial& o) const { return compare(*this, o) < 0; }
    bool operator==(const WedgeMonomial& o) const { return compare(*this, o) == 0; }
    std::string to_string() const;
};

class WedgeElement {
public:
    explicit WedgeElement(int arity = 0) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<WedgeMonomial, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    WedgeElement operator+(const WedgeElement& o) const;
    WedgeElement operator-(const WedgeElement& o) const;
    WedgeElement operator*(const Rat& c) const;
    WedgeElement operator-() const { return *this * Rat(-1); }
    bool operator==(const WedgeElement& o) const;

    // add c * (sorted-with-sign wedge of the given atoms); duplicates kill
    // the term
    void add_term(const Rat& c, std::vector<Atom> atoms);

    // union of variables used by polynomial atoms in any monomial
    std::vector<std::string> variables() const;

    std::string to_string() const;

private:
    int arity_;
    std::map<WedgeMonomial, Rat> terms_;
};

// multilinear expansion of f_1 ^ ... ^ f_n over atoms and prime factors of
// the constants; throws std::domain_error on an empty-valued (zero) slot
WedgeElement wedge_of(const std::vector<FactoredRational>& fs);

// a coordinate substitution, applied simultaneously
using CoordMap = std::vector<std::pair<std::string, FactoredRational>>;

// simultaneous substitution into a factored rational
FactoredRational substitute_all(const FactoredRational& f, const CoordMap& map);

// slot-wise pullback; throws std::domain_error if the map is not dominant
WedgeElement pullback(const WedgeElement& a, const CoordMap& map);

bool coord_map_dominant(const CoordMap& map);

}  // namespace chowpoly
