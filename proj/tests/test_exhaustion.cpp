#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "archimedes/errors.hpp"
#include "archimedes/exhaustion.hpp"
#include "oracle.hpp"
#include "testutil.hpp"

using namespace archimedes;

TEST_CASE("hexagon squeeze state matches the closed forms") {
    const SqueezeState s = squeeze_state(0, Rational(1), 128);
    CHECK(s.sides == 6);
    // inscribed hexagon area 3*sqrt(3)/2 = 2.59807621135331594029...
    CHECK(testutil::consistent(s.area_lower, testutil::frozen("2.598076211353315940")));
    // circumscribed hexagon area 2*sqrt(3) = 3.46410161513775458705...
    CHECK(testutil::consistent(s.area_upper, testutil::frozen("3.464101615137754587")));
    CHECK(s.area_lower.hi() < s.area_upper.lo());
    CHECK(s.circumference_lower.hi() < s.circumference_upper.lo());
}

TEST_CASE("sixteen-fold polygon squeezes both brackets around pi") {
    const SqueezeState s = squeeze_state(4, Rational(1), 128);
    CHECK(s.sides == 96);
    // half*C*r bracket is the semiperimeter pair itself
    CHECK(s.half_cr_bracket().lo() > Rational::from_string("3.1410"));
    CHECK(s.half_cr_bracket().hi() < Rational::from_string("3.1428"));
    // the area bracket reaches down to the inscribed 96-gon area
    // 96 sin(pi/96) cos(pi/96) = 3.13935020304686720713...
    CHECK(testutil::consistent(s.area_lower, testutil::frozen("3.139350203046867207")));
    CHECK(s.area_bracket().lo() > Rational::from_string("3.1393"));
    CHECK(s.area_bracket().hi() < Rational::from_string("3.1428"));
    CHECK(testutil::consistent(s.area_bracket(), oracle::machin_pi()));
}

TEST_CASE("scaling the radius scales areas exactly quadratically") {
    const SqueezeState unit = squeeze_state(4, Rational(1), 128);
    const SqueezeState five = squeeze_state(4, Rational(5), 128);
    const Rational k(25);
    CHECK(five.area_lower.lo() == unit.area_lower.lo() * k);
    CHECK(five.area_lower.hi() == unit.area_lower.hi() * k);
    CHECK(five.area_upper.lo() == unit.area_upper.lo() * k);
    CHECK(five.area_upper.hi() == unit.area_upper.hi() * k);
    // circumference scales linearly
    CHECK(five.circumference_lower.lo() == unit.circumference_lower.lo() * Rational(5));
    CHECK(five.circumference_upper.hi() == unit.circumference_upper.hi() * Rational(5));

    const SqueezeState scaled = squeeze_state(4, Rational(7, 3), 128);
    const Rational lambda_sq = Rational(7, 3) * Rational(7, 3);
    CHECK(scaled.area_upper.hi() == unit.area_upper.hi() * lambda_sq);
    CHECK(scaled.half_cr_lower.lo() == unit.half_cr_lower.lo() * lambda_sq);
}

TEST_CASE("the polygon area identity holds in enclosure form") {
    // area(P_in) = (1/2) * apothem * perimeter(P_in): same exact quantity
    // computed through two associations, equal up to trim dust.
    for (int k = 0; k <= 8; k += 4) {
        const SqueezeState s = squeeze_state(k, Rational(1), 128);
        const Interval product =
            scale(s.apothem * s.circumference_lower, Rational(1, 2));
        CHECK(product.intersects(s.area_lower));
        const Rational dust = pow2(2 - 128) * Rational(8);
        CHECK(product.lo() - dust <= s.area_lower.lo());
        CHECK(product.hi() + dust >= s.area_lower.hi());
    }
}

TEST_CASE("prop 1 certificate at twelve doublings and tolerance 1e-6") {
    const auto cert = verify_prop1(12, Rational(1), Rational(1, 1000000), 128);
    CHECK(cert.certified);
    CHECK(cert.gap < Rational(1, 1000000));
    CHECK(cert.area.intersects(cert.half_cr));
    // both contain pi * r^2
    CHECK(testutil::consistent(cert.area, oracle::machin_pi()));
    CHECK(testutil::consistent(cert.half_cr, oracle::machin_pi()));
}

TEST_CASE("prop 1 brackets always overlap and tighten monotonically") {
    Rational previous_gap;
    for (int k = 0; k <= 16; ++k) {
        const SqueezeState s = squeeze_state(k, Rational(3, 2), 128);
        const Interval area = s.area_bracket();
        const Interval half_cr = s.half_cr_bracket();
        REQUIRE(area.intersects(half_cr));
        const Rational pi_r_sq_lo = oracle::machin_pi().lo * Rational(9, 4);
        const Rational pi_r_sq_hi = oracle::machin_pi().hi * Rational(9, 4);
        REQUIRE(area.lo() <= pi_r_sq_lo);
        REQUIRE(area.hi() >= pi_r_sq_hi);
        REQUIRE(half_cr.lo() <= pi_r_sq_lo);
        REQUIRE(half_cr.hi() >= pi_r_sq_hi);
        const Rational gap = max(area.width(), half_cr.width());
        if (k > 0) REQUIRE(gap < previous_gap);
        previous_gap = gap;
    }
}

TEST_CASE("unreachable tolerance reports a depth estimate") {
    CHECK_THROWS_AS(verify_prop1(0, Rational(1), Rational(1, 1000000), 128), ToleranceUnreachable);
    try {
        verify_prop1(0, Rational(1), Rational(1, 1000000), 128);
    } catch (const ToleranceUnreachable& e) {
        CHECK(e.required_doublings >= 8);
        CHECK(e.required_doublings <= 16);
    }
    CHECK_THROWS_AS(verify_prop1(4, Rational(1), Rational(0), 128), std::invalid_argument);
}

TEST_CASE("sector inequality for the acceptance angle family") {
    for (const long n : {6L, 12L, 24L, 48L, 96L}) {
        const Rational q(1, n);
        int j = 0;
        for (long m = n / 6; m > 1; m /= 2) ++j;
        const SectorBounds b = verify_sector(q, j + 6, 128);
        CHECK(b.chord.hi() < b.arc.lo());
        CHECK(b.arc.hi() < b.tangent.lo());
        // cross-check all three against the oracle
        const auto pi = oracle::machin_pi();
        const oracle::Bracket angle{pi.lo / Rational(n), pi.hi / Rational(n)};
        const auto s = oracle::sin_of(angle);
        const auto t = oracle::tan_of(angle);
        CHECK(testutil::consistent(b.chord,
                                   oracle::Bracket{Rational(2) * s.lo, Rational(2) * s.hi}));
        CHECK(testutil::consistent(b.tangent,
                                   oracle::Bracket{Rational(2) * t.lo, Rational(2) * t.hi}));
        CHECK(testutil::consistent(b.arc,
                                   oracle::Bracket{Rational(2) * angle.lo, Rational(2) * angle.hi}));
    }
}

TEST_CASE("sector: pi/6 has an exactly rational chord") {
    const SectorBounds b = verify_sector(Rational(1, 6), 6, 128);
    CHECK(b.chord.lo() == Rational(1));
    CHECK(b.chord.hi() == Rational(1));
    // tangent = 2/sqrt(3) = 1.15470053837925152901...
    CHECK(testutil::consistent(b.tangent, testutil::frozen("1.154700538379251529")));
    // arc = pi/3 = 1.04719755119659774615...
    CHECK(testutil::consistent(b.arc, testutil::frozen("1.047197551196597746")));
}

TEST_CASE("sector rejects angles outside the doubling family") {
    CHECK_THROWS_AS(verify_sector(Rational(1, 5), 8, 128), UnsupportedAngle);
    CHECK_THROWS_AS(verify_sector(Rational(1, 7), 8, 128), UnsupportedAngle);
    CHECK_THROWS_AS(verify_sector(Rational(2, 6), 8, 128), UnsupportedAngle);  // = 1/3
    CHECK_THROWS_AS(verify_sector(Rational(1, 2), 8, 128), UnsupportedAngle);
    CHECK_THROWS_AS(verify_sector(Rational(-1, 6), 8, 128), UnsupportedAngle);
    CHECK_THROWS_AS(verify_sector(Rational(1, 18), 8, 128), UnsupportedAngle);  // 18 = 6*3
    CHECK_THROWS_AS(verify_sector(Rational(1, 12), 1, 128), std::invalid_argument);
}

TEST_CASE("euclid XII.2: area ratios contain the squared radius ratio") {
    CHECK(verify_euclid_xii2(Rational(1), Rational(2), 4, 128));
    CHECK(verify_euclid_xii2(Rational(3), Rational(5), 4, 128));
    CHECK(verify_euclid_xii2(Rational(7, 4), Rational(7, 4), 4, 128));

    std::mt19937_64 rng(515);
    std::uniform_int_distribution<long> num(1, 300);
    std::uniform_int_distribution<long> den(1, 60);
    std::uniform_int_distribution<int> depth(0, 8);
    for (int i = 0; i < 100; ++i) {
        const Rational r1(num(rng), den(rng));
        const Rational r2(num(rng), den(rng));
        REQUIRE(verify_euclid_xii2(r1, r2, depth(rng), 128));
    }
}
