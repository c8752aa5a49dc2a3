#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "chowpoly/fiveterm.hpp"
#include "chowpoly/integrate.hpp"
#include "chowpoly/lisymbol.hpp"
#include "chowpoly/registry.hpp"

using namespace chowpoly;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

LiSymbol sym_of_rat(int weight, const Rat& a, const Rat& coeff = Rat(1)) {
    LiSymbol s(weight);
    s.add(coeff, PPoint::of_rat(a));
    return s;
}

}  // namespace

TEST_CASE("projective points order and collapse") {
    CHECK(PPoint::of_rat(Rat(0)) == PPoint::zero());
    CHECK(PPoint::zero() < PPoint::inf());
    CHECK(PPoint::inf() < PPoint::of_rat(Rat(1)));
    CHECK(PPoint::of_rat(Rat(2)) == PPoint::of(FactoredRational(Rat(2))));
}

TEST_CASE("symbol arithmetic merges points") {
    LiSymbol s = sym_of_rat(2, Rat(3)) + sym_of_rat(2, Rat(3), Rat(2));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms().begin()->second == Rat(3));
    CHECK((s - s * Rat(1)).is_zero());
    CHECK(s.over_constants());

    LiSymbol t(2);
    t.add(Rat(1), PPoint::of(factor(var("t"))));
    CHECK_FALSE(t.over_constants());
}

TEST_CASE("delta in weight 2 lands in the wedge") {
    // the convention is a ^ (1 - a)
    DeltaImage d = delta(sym_of_rat(2, Rat(3)));
    CHECK(d.wedge == wedge_of({FactoredRational(Rat(3)), FactoredRational(Rat(-2))}));

    // the inversion combination {a} + {1/a} is a kernel element
    LiSymbol inv = sym_of_rat(2, Rat(5)) + sym_of_rat(2, make_rat(1, 5));
    CHECK(delta(inv).is_zero());
}

TEST_CASE("delta in weight 3 lands in the tensor layer") {
    DeltaImage d = delta(sym_of_rat(3, Rat(4)));
    CHECK(d.wedge.is_zero());
    // {4}_2 (x) 4 expands over the primes: 4 = 2^2 gives coefficient 2 on atom 2
    REQUIRE(d.tensor.size() == 1);
    const auto& [key, c] = *d.tensor.begin();
    CHECK(key.first == PPoint::of_rat(Rat(4)));
    CHECK(key.second == Atom::make_prime(Int(2)));
    CHECK(c == Rat(2));
}

TEST_CASE("residues specialize one-parameter families") {
    MultiPoly t = var("t");
    MultiPoly one{Rat(1)};
    LiSymbol s(2);
    s.add(Rat(1), PPoint::of(factor(t)));
    s.add(Rat(2), PPoint::of(factor_fraction(one - t, one - Rat(2) * t)));

    LiSymbol at3 = res(Valuation::point("t", Rat(3)), s);
    LiSymbol expect3 = sym_of_rat(2, Rat(3)) + sym_of_rat(2, make_rat(2, 5), Rat(2));
    CHECK(at3 == expect3);

    // a family point that degenerates at the valuation is dropped, so only
    // the second term survives at 0 and at infinity
    LiSymbol at0 = res(Valuation::point("t", Rat(0)), s);
    LiSymbol expect0(2);
    expect0.add(Rat(2), PPoint::of_rat(Rat(1)));
    CHECK(at0 == expect0);

    LiSymbol atinf = res(Valuation::infinity("t"), s);
    LiSymbol expectinf(2);
    expectinf.add(Rat(2), PPoint::of_rat(make_rat(1, 2)));
    CHECK(atinf == expectinf);
}

TEST_CASE("five-term family lies in the kernel and yields the frozen generator") {
    for (Rat c : {Rat(2), Rat(3), Rat(-1), make_rat(1, 2)}) {
        LiSymbol family = five_term_family(c);
        CHECK(delta(family).is_zero());
        RmGenerator g = r_m_generator(family);
        CHECK(g.evidence == Evidence::Proved);
        CHECK(g.symbol == five_term_generator(c));
    }
}

TEST_CASE("weight 2 kernel failures are rejected") {
    MultiPoly t = var("t");
    LiSymbol bad(2);
    bad.add(Rat(1), PPoint::of(factor(t)));
    CHECK_THROWS_AS(r_m_generator(bad), EvidenceError);
}

TEST_CASE("weight 3 inversion family under certificate evidence") {
    MultiPoly t = var("t");
    LiSymbol alpha(3);
    alpha.add(Rat(1), PPoint::of(factor(t)));
    alpha.add(Rat(-1), PPoint::of(factor(t).inverse()));

    // delta(alpha) = ({t}_2 + {1/t}_2) (x) t, and the tensor row cites the
    // weight 2 inversion relation
    LiSymbol relation(2);
    relation.add(Rat(1), PPoint::of(factor(t)));
    relation.add(Rat(1), PPoint::of(factor(t).inverse()));
    CertificateRow row{Rat(1), relation, factor(t).factors()[0].first};

    RmGenerator g = r_m_generator(alpha, {row});
    CHECK(g.evidence == Evidence::Certified);
    // both family points degenerate at 0 and at infinity, so res_0 - res_inf
    // of {t}_3 - {1/t}_3 is the zero symbol
    CHECK(g.symbol.is_zero());

    // a wrong certificate is rejected
    CertificateRow wrong{Rat(2), relation, factor(t).factors()[0].first};
    CHECK_THROWS_AS(r_m_generator(alpha, {wrong}), EvidenceError);
}

TEST_CASE("weight 3 inversion family under numeric evidence") {
    MultiPoly t = var("t");
    LiSymbol alpha(3);
    alpha.add(Rat(1), PPoint::of(factor(t)));
    alpha.add(Rat(-1), PPoint::of(factor(t).inverse()));

    RmGenerator g = r_m_generator(alpha, {}, sv_pairing_kernel_check());
    CHECK(g.evidence == Evidence::Numeric);

    // the flipped sign is not in the kernel and the sampler notices
    LiSymbol bad(3);
    bad.add(Rat(1), PPoint::of(factor(t)));
    bad.add(Rat(1), PPoint::of(factor(t).inverse()));
    CHECK_THROWS_AS(r_m_generator(bad, {}, sv_pairing_kernel_check()), EvidenceError);

    // without any evidence the call must refuse
    CHECK_THROWS_AS(r_m_generator(alpha), EvidenceError);
}

TEST_CASE("registry round trip") {
    namespace fs = std::filesystem;
    fs::path path = fs::temp_directory_path() / "chowpoly_registry_test.json";
    std::remove(path.string().c_str());

    Registry reg = Registry::load(path.string());
    CHECK(reg.entries().empty());

    reg.add({"fiveterm2", five_term_generator(Rat(2)), Evidence::Proved});
    reg.add({"fiveterm3", five_term_generator(Rat(3)), Evidence::Numeric});
    reg.save(path.string());

    Registry back = Registry::load(path.string());
    REQUIRE(back.entries().size() == 2);
    const RegistryEntry* e = back.find("fiveterm2");
    REQUIRE(e != nullptr);
    CHECK(e->symbol == five_term_generator(Rat(2)));
    CHECK(e->evidence == Evidence::Proved);
    CHECK(back.find("missing") == nullptr);

    // re-adding a name replaces the entry
    back.add({"fiveterm2", five_term_generator(make_rat(1, 2)), Evidence::Certified});
    REQUIRE(back.entries().size() == 2);
    CHECK(back.find("fiveterm2")->symbol == five_term_generator(make_rat(1, 2)));

    std::remove(path.string().c_str());
}
