#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvepair/polynomial.hpp"
#include "support/generators.hpp"

using namespace curvepair;
using curvepair::testing::Gen;

namespace {

mpz_class coeff(const BivariatePolynomial& p, int dx, int dy) {
    auto it = p.terms().find(Monomial{dx, dy});
    return it == p.terms().end() ? mpz_class(0) : it->second;
}

int sign_of(const Dyadic& d) { return d.sign(); }

}  // namespace

TEST_CASE("parsing the circle") {
    auto p = parse_polynomial("x^2 + y^2 - 4");
    CHECK(p.terms().size() == 3);
    CHECK(coeff(p, 2, 0) == 1);
    CHECK(coeff(p, 0, 2) == 1);
    CHECK(coeff(p, 0, 0) == -4);
}

TEST_CASE("parsing zero and expansion with cancellation") {
    CHECK(parse_polynomial("0").is_zero());
    auto p = parse_polynomial("(x-2)^2 + y^2 - 4");
    CHECK(p.terms().size() == 3);
    CHECK(coeff(p, 2, 0) == 1);
    CHECK(coeff(p, 1, 0) == -4);
    CHECK(coeff(p, 0, 2) == 1);
    CHECK(coeff(p, 0, 0) == 0);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_polynomial("x^2 +"), ParseError);
    CHECK_THROWS_AS(parse_polynomial("2x"), ParseError);      // implicit multiplication
    CHECK_THROWS_AS(parse_polynomial("x^-1"), ParseError);    // negative exponent
    CHECK_THROWS_AS(parse_polynomial("1.5*x"), ParseError);   // non-integer coefficient
    CHECK_THROWS_AS(parse_polynomial("z"), ParseError);
    try {
        parse_polynomial("x + $");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("print then parse is the identity") {
    Gen gen{5};
    for (int i = 0; i < 100; ++i) {
        BivariatePolynomial p = gen.polynomial();
        CHECK(parse_polynomial(p.str()) == p);
    }
}

TEST_CASE("partial derivatives") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    CHECK(partial_derivative(circle, Axis::X) == parse_polynomial("2*x"));
    CHECK(partial_derivative(parse_polynomial("x"), Axis::Y).is_zero());
    CHECK(partial_derivative(parse_polynomial("x^2*y^3"), Axis::X) ==
          parse_polynomial("2*x*y^3"));
}

TEST_CASE("property: derivative is linear and kills constants") {
    Gen gen{6};
    for (int i = 0; i < 100; ++i) {
        BivariatePolynomial p = gen.polynomial();
        BivariatePolynomial q = gen.polynomial();
        for (Axis a : {Axis::X, Axis::Y}) {
            CHECK(partial_derivative(p + q, a) ==
                  partial_derivative(p, a) + partial_derivative(q, a));
        }
    }
    CHECK(partial_derivative(BivariatePolynomial(42), Axis::X).is_zero());
}

TEST_CASE("exact evaluation") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    CHECK(eval_exact(circle, Point{Dyadic(0), Dyadic(0)}) == Dyadic(-4));
    CHECK(eval_exact(circle, Point{Dyadic(2), Dyadic(0)}).is_zero());
    Point half{Dyadic(mpz_class(1), -1), Dyadic(mpz_class(1), -1)};
    CHECK(eval_exact(circle, half) == Dyadic(mpz_class(-7), -1));  // -7/2
}

TEST_CASE("interval evaluation on the pinned boxes") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    IBox b01{Interval::of_ints(0, 1), Interval::of_ints(0, 1)};
    IBox b12{Interval::of_ints(1, 2), Interval::of_ints(1, 2)};
    CHECK(eval_interval(circle, b01) == Interval::of_ints(-4, -2));
    CHECK(eval_interval(circle, b12) == Interval::of_ints(-2, 4));
    CHECK(eval_interval(BivariatePolynomial(7), b12) == Interval::of_ints(7, 7));
}

TEST_CASE("property: exact values land in the interval enclosure") {
    Gen gen{8};
    for (int round = 0; round < 25; ++round) {
        BivariatePolynomial p = gen.polynomial();
        IBox box{gen.interval(), gen.interval()};
        Interval range = eval_interval(p, box);
        for (int s = 0; s < 4; ++s) {
            Point pt = gen.sample(box);
            CHECK(range.contains(eval_exact(p, pt)));
        }
    }
}

TEST_CASE("rescaling examples") {
    RectRegion rect1{0, 0, 2, 1};
    RectRegion square1{0, 0, 2, 2};
    auto q1 = rescale_to_square(parse_polynomial("x"), rect1, square1);
    // q vanishes exactly on x = 0
    CHECK(eval_exact(q1, Point{Dyadic(0), Dyadic(1)}).is_zero());
    CHECK(eval_exact(q1, Point{Dyadic(1), Dyadic(1)}).sign() != 0);
    CHECK(q1.degree_y() == 0);

    RectRegion rect2{-3, -3, 3, 3};
    auto q2 = rescale_to_square(parse_polynomial("x^2 + y^2 - 4"), rect2, rect2);
    CHECK(q2 == parse_polynomial("x^2 + y^2 - 4"));  // identity map

    RectRegion rect3{0, 0, 4, 2};
    RectRegion square3{0, 0, 4, 4};
    auto q3 = rescale_to_square(parse_polynomial("y - 1"), rect3, square3);
    // proportional to y - 2
    CHECK(eval_exact(q3, Point{Dyadic(1), Dyadic(2)}).is_zero());
    CHECK(eval_exact(q3, Point{Dyadic(1), Dyadic(0)}).sign() ==
          -eval_exact(q3, Point{Dyadic(1), Dyadic(4)}).sign());
}

TEST_CASE("rescaling rejects degenerate rectangles") {
    CHECK_THROWS(rescale_to_square(parse_polynomial("x"), RectRegion{0, 0, 0, 1},
                                   RectRegion{0, 0, 2, 2}));
    CHECK_THROWS(rescale_to_square(parse_polynomial("x"), RectRegion{0, 0, 2, 1},
                                   RectRegion{0, 0, 2, 3}));
}

TEST_CASE("property: rescaling preserves signs under the affine map") {
    Gen gen{9};
    RectRegion rect{-1, 2, 3, 4};    // width 4, height 2
    RectRegion square{-1, 2, 3, 6};  // side 4
    for (int round = 0; round < 30; ++round) {
        BivariatePolynomial p = gen.polynomial(3, 4, 9);
        BivariatePolynomial q = rescale_to_square(p, rect, square);
        for (int s = 0; s < 5; ++s) {
            // sample the square, map to the rectangle: A(sx, sy) = (sx, 2 + (sy-2)/2)
            Point sq = gen.sample(IBox{Interval::of_ints(-1, 3), Interval::of_ints(2, 6)});
            Point mapped{sq.x, Dyadic(2) + (sq.y - Dyadic(2)).halved()};
            CHECK(sign_of(eval_exact(q, sq)) == sign_of(eval_exact(p, mapped)));
        }
    }
}

TEST_CASE("curve pair caches matching partials") {
    CurvePair pair(parse_polynomial("x^2 + y^2 - 4"), parse_polynomial("x*y"));
    CHECK(pair.fx == partial_derivative(pair.f, Axis::X));
    CHECK(pair.fy == partial_derivative(pair.f, Axis::Y));
    CHECK(pair.gx == partial_derivative(pair.g, Axis::X));
    CHECK(pair.gy == partial_derivative(pair.g, Axis::Y));
}
