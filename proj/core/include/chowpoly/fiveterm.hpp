#pragma once

// The classical five-term dilogarithm family with one leg frozen at a
// rational value c (c != 0, 1):
//   {t} + {c} + {(1-t)/(1-ct)} + {1-ct} + {(1-c)/(1-ct)}
// and its residue-at-0-minus-residue-at-infinity specialization.

#include "chowpoly/lisymbol.hpp"

namespace chowpoly {

inline LiSymbol five_term_family(const Rat& c) {
    if (c == 0 || c == 1)
        throw std::domain_error("five-term family needs c != 0, 1");
    MultiPoly t = MultiPoly::variable("t");
    MultiPoly one{Rat(1)};
    MultiPoly den = one - c * t;
    LiSymbol s(2);
    s.add(Rat(1), PPoint::of(factor(t)));
    s.add(Rat(1), PPoint::of_rat(c));
    s.add(Rat(1), PPoint::of(factor_fraction(one - t, den)));
    s.add(Rat(1), PPoint::of(factor(den)));
    s.add(Rat(1), PPoint::of(factor_fraction(MultiPoly{Rat(1) - c}, den)));
    return s;
}

// res_0 - res_inf of the family: 2{1} + {1-c} - {1/c}
inline LiSymbol five_term_generator(const Rat& c) {
    LiSymbol s(2);
    s.add(Rat(2), PPoint::of_rat(Rat(1)));
    s.add(Rat(1), PPoint::of_rat(Rat(1) - c));
    s.add(Rat(-1), PPoint::of_rat(Rat(1) / c));
    return s;
}

}  // namespace chowpoly
