#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "chowpoly/polylog.hpp"

using namespace chowpoly;

namespace {

constexpr double kPi = std::numbers::pi;

struct LiOracle {
    int m;
    Complex z;
    Complex value;
};

// frozen against an independent arbitrary-precision evaluation
const LiOracle kLiOracles[] = {
    {2, {0.3, 0.7}, {0.163763773677955, 0.76789670985504102}},
    {2, {1.2, 0.4}, {1.4007216384386426, 1.0971316181447307}},
    {2, {-2.5, 1.1}, {-1.7495715887910626, 0.54347260029932456}},
    {2, {0.5, -0.8}, {0.30849812213721004, -0.9538976919503585}},
    {2, {-0.9, 0.05}, {-0.75242265138944987, 0.035655350411421786}},
    {2, {2.0, 3.0}, {-0.28098805537806049, 3.0172512063694066}},
    {3, {0.3, 0.7}, {0.23659448545934847, 0.74154776854248096}},
    {3, {1.2, 0.4}, {1.3687768208360397, 0.6574732391102068}},
    {3, {-2.5, 1.1}, {-2.0599321659365631, 0.74262422559251229}},
    {3, {0.5, -0.8}, {0.41814370079446412, -0.88941468156888904}},
    {3, {-0.9, 0.05}, {-0.81880841392525663, 0.041785344663620915}},
    {3, {2.0, 3.0}, {0.67660014685150602, 3.4098814160096013}},
    {4, {0.3, 0.7}, {0.27026121275374288, 0.72300265099994421}},
    {4, {1.2, 0.4}, {1.2906370747421412, 0.49860950055410965}},
    {4, {-2.5, 1.1}, {-2.2537733791099342, 0.88503525774801519}},
    {4, {0.5, -0.8}, {0.46440895486741741, -0.8477245506146317}},
    {4, {-0.9, 0.05}, {-0.85658086752571058, 0.045479253132082691}},
    {4, {2.0, 3.0}, {1.3331023755309499, 3.3978773630472749}},
};

struct SvOracle {
    int m;
    Complex z;
    double value;
};

const SvOracle kSvOracles[] = {
    {2, {0.3, 0.7}, 0.98181057142732547},
    {2, {1.2, 0.4}, 0.61903360148425152},
    {2, {-2.5, 1.1}, 0.23750685328612427},
    {2, {0.5, -0.8}, -1.012875282224005},
    {2, {-0.9, 0.05}, 0.038386816900367777},
    {2, {2.0, 3.0}, 0.59010775293037019},
    {3, {0.3, 0.7}, 0.28144755367983411},
    {3, {1.2, 0.4}, 1.0544184575823102},
    {3, {-2.5, 1.1}, -0.73943881826229664},
    {3, {0.5, -0.8}, 0.43618487188521702},
    {3, {-0.9, 0.05}, -0.89923201793991372},
    {3, {2.0, 3.0}, 0.40576741242256786},
    {4, {0.3, 0.7}, 0.94396128014186797},
    {4, {1.2, 0.4}, 0.36429877274034088},
    {4, {-2.5, 1.1}, 0.32175569500754708},
    {4, {0.5, -0.8}, -0.90062749873488675},
    {4, {-0.9, 0.05}, 0.049945498389427374},
    {4, {2.0, 3.0}, 0.67899001499857797},
};

}  // namespace

TEST_CASE("Bernoulli numbers") {
    CHECK(bernoulli(0) == Rat(1));
    CHECK(bernoulli(1) == make_rat(-1, 2));
    CHECK(bernoulli(2) == make_rat(1, 6));
    CHECK(bernoulli(3) == Rat(0));
    CHECK(bernoulli(12) == make_rat(-691, 2730));
    CHECK_THROWS_AS(bernoulli(-1), std::domain_error);
}

TEST_CASE("zeta at integers") {
    CHECK(zeta_int(2) == doctest::Approx(kPi * kPi / 6).epsilon(1e-13));
    CHECK(zeta_int(4) == doctest::Approx(std::pow(kPi, 4) / 90).epsilon(1e-13));
    CHECK(zeta_int(3) == doctest::Approx(1.2020569031595943).epsilon(1e-13));
    CHECK(zeta_int(0) == -0.5);
    CHECK(zeta_int(-1) == doctest::Approx(-1.0 / 12).epsilon(1e-15));
    CHECK(zeta_int(-2) == 0.0);
    CHECK_THROWS_AS(zeta_int(1), std::domain_error);
}

TEST_CASE("polylogarithm against frozen high-precision values") {
    for (const auto& o : kLiOracles) {
        Complex v = li_m(o.m, o.z);
        CHECK(std::abs(v - o.value) < 1e-10);
    }
    CHECK(std::abs(li_m(2, Complex(1, 0)).real() - kPi * kPi / 6) < 1e-10);
    CHECK(li_m(3, Complex(0, 0)) == Complex(0, 0));
    CHECK(li_m(1, Complex(0.5, 0)).real() == doctest::Approx(std::log(2.0)).epsilon(1e-13));
    CHECK_THROWS_AS(li_m(1, Complex(1, 0)), std::domain_error);
}

TEST_CASE("polylogarithm inversion consistency across regions") {
    // the dilogarithm inversion identity ties the |z| >= 2 regime back to
    // the direct series: Li2(z) + Li2(1/z) = -pi^2/6 - log^2(-z)/2
    std::mt19937_64 rng(909);
    std::uniform_real_distribution<double> mag(2.1, 8.0), ang(0.1, kPi - 0.1);
    for (int i = 0; i < 100; ++i) {
        double r = mag(rng), th = ang(rng);
        double sgn = (rng() % 2) ? 1.0 : -1.0;
        Complex z = std::polar(r, sgn * th);
        Complex lhs = li_m(2, z) + li_m(2, 1.0 / z);
        Complex lg = std::log(-z);
        Complex rhs = -kPi * kPi / 6.0 - lg * lg / 2.0;
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
    // continuity across the region seams |z| = 0.55 and |z| = 2
    for (double rad : {0.55, 2.0}) {
        for (int k = 0; k < 24; ++k) {
            double th = 0.13 + 2 * kPi * k / 24.0;
            Complex lo = std::polar(rad - 1e-9, th), hi = std::polar(rad + 1e-9, th);
            for (int m = 2; m <= 4; ++m)
                CHECK(std::abs(li_m(m, lo) - li_m(m, hi)) < 1e-7);
        }
    }
}

TEST_CASE("single-valued polylogarithm against frozen values") {
    for (const auto& o : kSvOracles) CHECK(sv_polylog(o.m, o.z) == doctest::Approx(o.value).epsilon(1e-9));
    CHECK(std::abs(sv_polylog(3, Complex(1, 0)) - 1.2020569031595943) < 1e-10);
    CHECK(sv_polylog(2, Complex(0, 0)) == 0.0);
    CHECK_THROWS_AS(sv_polylog(1, Complex(0.5, 0)), std::domain_error);
}

TEST_CASE("weight 2 vanishes on the real line") {
    std::mt19937_64 rng(111);
    std::uniform_real_distribution<double> xs(-4.0, 4.0);
    for (int i = 0; i < 20; ++i) {
        double x = xs(rng);
        if (std::abs(x) < 1e-6 || std::abs(x - 1) < 1e-6) continue;
        CHECK(std::abs(sv_polylog(2, Complex(x, 0))) < 1e-10);
    }
}

TEST_CASE("functional symmetries of the single-valued functions") {
    std::mt19937_64 rng(222);
    std::uniform_real_distribution<double> re(-2.0, 2.0), im(0.2, 2.0);
    for (int i = 0; i < 50; ++i) {
        Complex z(re(rng), im(rng));
        // conjugation: odd weights are invariant, even weights flip sign
        CHECK(sv_polylog(2, std::conj(z)) == doctest::Approx(-sv_polylog(2, z)).epsilon(1e-9));
        CHECK(sv_polylog(3, std::conj(z)) == doctest::Approx(sv_polylog(3, z)).epsilon(1e-9));
        // inversion: weight 2 flips sign, weight 3 is invariant
        CHECK(sv_polylog(2, 1.0 / z) == doctest::Approx(-sv_polylog(2, z)).epsilon(1e-8));
        CHECK(sv_polylog(3, 1.0 / z) == doctest::Approx(sv_polylog(3, z)).epsilon(1e-8));
    }
}

TEST_CASE("single-valuedness across the classical branch cut") {
    // Li_m jumps across (1, inf); the Bernoulli combination does not
    const double eps = 1e-9;
    for (double x : {1.5, 2.5, 4.0}) {
        Complex above(x, eps), below(x, -eps);
        CHECK(std::abs(li_m(2, above).imag() - li_m(2, below).imag()) > 0.1);
        for (int m = 2; m <= 4; ++m)
            CHECK(std::abs(sv_polylog(m, above) - sv_polylog(m, below)) < 1e-8);
    }
    // walk a loop around z = 1 and require small steps throughout
    for (int m = 2; m <= 4; ++m) {
        const int steps = 400;
        double last = sv_polylog(m, Complex(1, 0) + std::polar(0.6, 0.0));
        for (int k = 1; k <= steps; ++k) {
            double th = 2 * kPi * k / steps;
            double cur = sv_polylog(m, Complex(1, 0) + std::polar(0.6, th));
            CHECK(std::abs(cur - last) < 0.05);
            last = cur;
        }
    }
}
