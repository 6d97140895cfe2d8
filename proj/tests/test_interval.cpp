#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvepair/interval.hpp"
#include "support/generators.hpp"

using namespace curvepair;
using curvepair::testing::Gen;

TEST_CASE("addition endpoints are the formula values exactly") {
    CHECK(Interval::of_ints(1, 2) + Interval::of_ints(3, 4) == Interval::of_ints(4, 6));
    Interval cd = Interval::of_ints(-7, 13);
    CHECK(Interval::of_ints(0, 0) + cd == cd);
    CHECK(Interval::of_ints(-1, 1) + Interval::of_ints(-2, 2) == Interval::of_ints(-3, 3));
}

TEST_CASE("subtraction") {
    CHECK(Interval::of_ints(1, 2) - Interval::of_ints(3, 4) == Interval::of_ints(-3, -1));
    Interval i = Interval::of_ints(-5, 9);
    CHECK(i - Interval::of_ints(0, 0) == i);
    CHECK(Interval::of_ints(0, 1) - Interval::of_ints(0, 1) == Interval::of_ints(-1, 1));
}

TEST_CASE("multiplication takes min and max of the endpoint products") {
    CHECK(Interval::of_ints(-1, 2) * Interval::of_ints(3, 4) == Interval::of_ints(-4, 8));
    Interval cd = Interval::of_ints(-3, 11);
    CHECK(Interval::of_ints(1, 1) * cd == cd);
    CHECK(Interval::of_ints(-2, -1) * Interval::of_ints(-3, -1) == Interval::of_ints(1, 6));
}

TEST_CASE("contains_zero") {
    CHECK(contains_zero(Interval::of_ints(-1, 1)));
    CHECK(!contains_zero(Interval::of_ints(1, 2)));
    CHECK(contains_zero(Interval::of_ints(0, 0)));
}

TEST_CASE("invalid interval is rejected") {
    CHECK_THROWS(Interval(Dyadic(2), Dyadic(1)));
}

TEST_CASE("power uses the exact range") {
    // even power over a sign-straddling interval clamps at zero
    CHECK(pow(Interval::of_ints(-2, 3), 2) == Interval::of_ints(0, 9));
    CHECK(pow(Interval::of_ints(-3, -2), 2) == Interval::of_ints(4, 9));
    // odd powers are monotone
    CHECK(pow(Interval::of_ints(-2, 3), 3) == Interval::of_ints(-8, 27));
    CHECK(pow(Interval::of_ints(-2, 3), 0) == Interval::of_ints(1, 1));
}

TEST_CASE("property: inclusion soundness over 1000 samples per operator") {
    Gen gen{42};
    for (int round = 0; round < 40; ++round) {
        Interval i = gen.interval();
        Interval j = gen.interval();
        Interval sum = i + j;
        Interval diff = i - j;
        Interval prod = i * j;
        for (int s = 0; s < 25; ++s) {
            Dyadic a = gen.sample(i);
            Dyadic b = gen.sample(j);
            CHECK(sum.contains(a + b));
            CHECK(diff.contains(a - b));
            CHECK(prod.contains(a * b));
        }
    }
}

TEST_CASE("property: power inclusion and monotonicity under interval inclusion") {
    Gen gen{43};
    for (int round = 0; round < 200; ++round) {
        Interval i = gen.interval();
        unsigned k = static_cast<unsigned>(gen.int_in(0, 6));
        Interval p = pow(i, k);
        for (int s = 0; s < 5; ++s) CHECK(p.contains(gen.sample(i).pow(k)));
        // a narrower interval has a narrower power range
        Interval inner(gen.sample(i), i.hi);
        CHECK(p.contains(pow(inner, k)));
    }
}

TEST_CASE("box containment helpers") {
    IBox box{Interval::of_ints(0, 2), Interval::of_ints(-1, 1)};
    CHECK(box.contains(Point{Dyadic(1), Dyadic(0)}));
    CHECK(!box.strictly_contains(Point{Dyadic(0), Dyadic(0)}));
    CHECK(box.intersects(IBox{Interval::of_ints(2, 3), Interval::of_ints(0, 4)}));
    CHECK(hull(Interval::of_ints(0, 1), Interval::of_ints(5, 6)) == Interval::of_ints(0, 6));
}
