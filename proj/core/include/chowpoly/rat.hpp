#pragma once

// Exact rational arithmetic. mpq_class keeps gcd(num, den) = 1 and den > 0
// after canonicalize(), which the helpers below always call.

#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowpoly {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0) throw std::domain_error("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long n = e > 0 ? e : -e;
    Rat r(1);
    while (n) {
        if (n & 1) r *= b;
        b *= b;
        n >>= 1;
    }
    return r;
}

// Prime factorization of a positive integer by trial division with a
// Pollard-rho fallback for large cofactors.
std::vector<std::pair<Int, int>> factor_integer(Int n);

}  // namespace chowpoly
