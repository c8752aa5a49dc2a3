#include <doctest.h>

#include <random>

#include "chowpoly/wedge.hpp"

using namespace chowpoly;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

// random nonzero factored rational built from linear pieces in x, y
FactoredRational random_fr(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-4, 4);
    auto linear = [&]() {
        int a = small(rng), b = small(rng), c = small(rng);
        MultiPoly p = var("x") * Rat(a) + var("y") * Rat(b) + MultiPoly{Rat(c)};
        if (p.is_zero()) p = var("x") + MultiPoly{Rat(1)};
        return p;
    };
    FactoredRational f = factor(linear());
    if (rng() % 2) f = f * factor(linear());
    if (rng() % 2) f = f * factor(linear()).inverse();
    int c = small(rng);
    if (c == 0) c = 2;
    return f * FactoredRational(Rat(c));
}

}  // namespace

TEST_CASE("wedge multilinearity on random slots") {
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        FactoredRational f = random_fr(rng), g = random_fr(rng), h = random_fr(rng);
        // (fg) ^ h = f ^ h + g ^ h
        WedgeElement lhs = wedge_of({f * g, h});
        WedgeElement rhs = wedge_of({f, h}) + wedge_of({g, h});
        CHECK(lhs == rhs);
    }
}

TEST_CASE("wedge antisymmetry on random slots") {
    std::mt19937_64 rng(202);
    for (int i = 0; i < 1000; ++i) {
        FactoredRational f = random_fr(rng), g = random_fr(rng);
        CHECK(wedge_of({f, g}) == -wedge_of({g, f}));
        CHECK(wedge_of({f, f}).is_zero());
    }
}

TEST_CASE("torsion dies: (-1) ^ x = 0 and inverses cancel") {
    std::mt19937_64 rng(303);
    for (int i = 0; i < 1000; ++i) {
        FactoredRational f = random_fr(rng);
        CHECK(wedge_of({FactoredRational(Rat(-1)), f}).is_zero());
        // f ^ g = (-f) ^ g since -1 is torsion
        FactoredRational g = random_fr(rng);
        CHECK(wedge_of({f * FactoredRational(Rat(-1)), g}) == wedge_of({f, g}));
        // inverting a slot flips the sign of every term
        CHECK(wedge_of({f.inverse(), g}) == -wedge_of({f, g}));
    }
}

TEST_CASE("constants expand into prime atoms") {
    MultiPoly x = var("x");
    // 6 ^ x = (2 ^ x) + (3 ^ x)
    WedgeElement w = wedge_of({FactoredRational(Rat(6)), factor(x)});
    CHECK(w == wedge_of({FactoredRational(Rat(2)), factor(x)}) +
                   wedge_of({FactoredRational(Rat(3)), factor(x)}));
    // 1/2 ^ x = -(2 ^ x)
    CHECK(wedge_of({FactoredRational(make_rat(1, 2)), factor(x)}) ==
          -wedge_of({FactoredRational(Rat(2)), factor(x)}));
    // 4 ^ x = 2 * (2 ^ x)
    CHECK(wedge_of({FactoredRational(Rat(4)), factor(x)}) ==
          wedge_of({FactoredRational(Rat(2)), factor(x)}) * Rat(2));
}

TEST_CASE("composite slots split into atoms") {
    MultiPoly x = var("x");
    MultiPoly one{Rat(1)};
    // (x^2 - 1) ^ x = (x-1) ^ x + (x+1) ^ x
    CHECK(wedge_of({factor(x * x - one), factor(x)}) ==
          wedge_of({factor(x - one), factor(x)}) + wedge_of({factor(x + one), factor(x)}));
}

TEST_CASE("wedge element linear structure") {
    std::mt19937_64 rng(404);
    for (int i = 0; i < 100; ++i) {
        WedgeElement a = wedge_of({random_fr(rng), random_fr(rng)});
        WedgeElement b = wedge_of({random_fr(rng), random_fr(rng)});
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        CHECK(a * Rat(0) == WedgeElement(2));
        CHECK((a + b) * Rat(3) == a * Rat(3) + b * Rat(3));
    }
}

TEST_CASE("pullback is functorial on slots") {
    MultiPoly x = var("x"), y = var("y"), u = var("u"), v = var("v");
    // x -> u, y -> u + v is a change of coordinates on the surface
    CoordMap map{{"x", factor(u)}, {"y", factor(u + v)}};
    CHECK(coord_map_dominant(map));

    WedgeElement a = wedge_of({factor(y - x), factor(x)});
    CHECK(pullback(a, map) == wedge_of({factor(v), factor(u)}));

    WedgeElement b = wedge_of({factor(x + y), factor(x)});
    CHECK(pullback(b, map) ==
          wedge_of({factor(u * Rat(2) + v), factor(u)}));

    // a non-dominant map (two coordinates through one function) is rejected
    CoordMap bad{{"x", factor(u)}, {"y", factor(u)}};
    CHECK_FALSE(coord_map_dominant(bad));
    CHECK_THROWS_AS(pullback(a, bad), std::domain_error);
}

TEST_CASE("zero slot is rejected") {
    MultiPoly x = var("x");
    CHECK_THROWS_AS(factor(x - x), std::domain_error);
}
