#pragma once

// Sparse multivariate polynomials over Q.
//
// Variables are identified by name; the global variable order is
// lexicographic on names. A polynomial stores only the variables it
// actually uses (prune() drops unused ones), so two polynomials that are
// equal as functions compare equal structurally.

#include <map>
#include <string>
#include <vector>

#include "chowpoly/rat.hpp"

namespace chowpoly {

class MultiPoly {
public:
    // exponent vectors are aligned with vars_ (sorted ascending by name)
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, Rat>;

    MultiPoly() = default;
    explicit MultiPoly(const Rat& c);
    static MultiPoly variable(const std::string& name);
    static MultiPoly constant(const Rat& c) { return MultiPoly(c); }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rat constant_value() const;  // requires is_constant()

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;  // e >= 0

    int degree(const std::string& var) const;  // -1 for the zero polynomial
    int total_degree() const;                  // -1 for the zero polynomial
    bool uses(const std::string& var) const { return degree(var) > 0; }

    MultiPoly derivative(const std::string& var) const;

    // var := value (exact evaluation)
    MultiPoly eval(const std::string& var, const Rat& value) const;
    // var := p (polynomial composition)
    MultiPoly compose(const std::string& var, const MultiPoly& p) const;
    // var := num/den, result scaled by den^deg so it stays polynomial:
    // returns p(var -> num/den) * den^degree(var)
    MultiPoly compose_fraction(const std::string& var, const MultiPoly& num,
                               const MultiPoly& den) const;
    // rename a variable (target name must be fresh)
    MultiPoly rename(const std::string& from, const std::string& to) const;

    // lex-leading coefficient / exponent vector (vars ascending, compare
    // exponents left to right); requires nonzero
    Rat leading_coeff() const;

    // rational content: the unique c > 0 with p = (+-c) * (integer,
    // content-1 polynomial); requires nonzero
    Rat content() const;
    // p / content, sign fixed so the lex-leading coefficient is positive
    MultiPoly primitive_part() const;
    // p / leading_coeff()
    MultiPoly monic() const;

    // exact division; throws std::domain_error if not divisible
    MultiPoly divide_exact(const MultiPoly& d) const;

    static MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

    // deterministic total order used by the atom order:
    // (total degree, variable list, term sequence)
    static int compare(const MultiPoly& a, const MultiPoly& b);
    bool operator<(const MultiPoly& o) const { return compare(*this, o) < 0; }

    std::string to_string() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;

    void prune();  // drop zero coeffs and unused variables
    static void align(const MultiPoly& a, const MultiPoly& b,
                      std::vector<std::string>& vars, TermMap& ta, TermMap& tb);
    friend MultiPoly remap(const MultiPoly& p, const std::vector<std::string>& vars);
};

MultiPoly operator*(const Rat& c, const MultiPoly& p);

}  // namespace chowpoly
