#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvepair/oracle.hpp"

using namespace curvepair;

namespace {

bool disjoint(const IBox& a, const IBox& b) {
    return !a.intersects(b);
}

}  // namespace

TEST_CASE("linear system: one certified root containing the origin") {
    CurvePair pair(parse_polynomial("x"), parse_polynomial("y"));
    auto roots = certify_intersections(pair, RectRegion{-1, -1, 1, 1}, 2);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].box.contains(Point{Dyadic(0), Dyadic(0)}));
}

TEST_CASE("crossing circles: two roots at x = 1, y = +-sqrt(3)") {
    CurvePair pair(parse_polynomial("x^2 + y^2 - 4"), parse_polynomial("(x-2)^2 + y^2 - 4"));
    auto roots = certify_intersections(pair, RectRegion{-4, -4, 4, 4}, 6);
    REQUIRE(roots.size() == 2);
    for (const auto& r : roots) {
        CHECK(r.midpoint_estimate.x.to_double() == doctest::Approx(1.0).epsilon(1e-9));
        CHECK(std::abs(r.midpoint_estimate.y.to_double()) ==
              doctest::Approx(1.7320508075688772).epsilon(1e-9));
        CHECK(r.box.contains(r.midpoint_estimate));
    }
    CHECK(disjoint(roots[0].box, roots[1].box));
}

TEST_CASE("disjoint circles: no roots") {
    CurvePair pair(parse_polynomial("x^2 + y^2 - 1"), parse_polynomial("(x-3)^2 + y^2 - 1"));
    CHECK(certify_intersections(pair, RectRegion{-2, -2, 4, 4}, 6).empty());
}

TEST_CASE("certified boxes stay inside the region and are deterministic") {
    CurvePair pair(parse_polynomial("x^2 + y^2 - 4"), parse_polynomial("(x-2)^2 + y^2 - 4"));
    RectRegion region{-4, -4, 4, 4};
    auto a = certify_intersections(pair, region, 5);
    auto b = certify_intersections(pair, region, 5);
    REQUIRE(a.size() == b.size());
    IBox region_box = region.to_ibox();
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].box == b[i].box);
        CHECK(region_box.contains(a[i].box));
    }
}

TEST_CASE("smoothness and transversality checks") {
    CurvePair lines(parse_polynomial("x"), parse_polynomial("y"));
    CHECK(check_smooth_transversal(lines, RectRegion{-1, -1, 1, 1}, 3));

    CurvePair circles(parse_polynomial("x^2 + y^2 - 4"), parse_polynomial("(x-2)^2 + y^2 - 4"));
    CHECK(check_smooth_transversal(circles, RectRegion{-4, -4, 4, 4}, 6));

    // x^2 - y^2 is singular at the origin: f, fx, fy all vanish there
    CurvePair singular(parse_polynomial("x^2 - y^2"), parse_polynomial("x + y - 3"));
    CHECK(!check_smooth_transversal(singular, RectRegion{-2, -2, 2, 2}, 4));

    // tangential intersection: parabola and the x axis meet at an exact
    // non-transversal root
    CurvePair tangent(parse_polynomial("y - x^2"), parse_polynomial("y"));
    CHECK(!check_smooth_transversal(tangent, RectRegion{-2, -2, 2, 2}, 4));
}

TEST_CASE("grid depth must be positive") {
    CurvePair pair(parse_polynomial("x"), parse_polynomial("y"));
    CHECK_THROWS(certify_intersections(pair, RectRegion{-1, -1, 1, 1}, 0));
}

TEST_CASE("near-tangent parabola pairs used by the acceptance suite") {
    CurvePair two(parse_polynomial("y - x^2"), parse_polynomial("8*y - 9*x^2 + 2"));
    auto roots = certify_intersections(two, RectRegion{-3, -3, 3, 3}, 6);
    CHECK(roots.size() == 2);
    CHECK(check_smooth_transversal(two, RectRegion{-3, -3, 3, 3}, 6));

    CurvePair zero(parse_polynomial("y - x^2"), parse_polynomial("8*y - 9*x^2 - 1"));
    CHECK(certify_intersections(zero, RectRegion{-3, -3, 3, 3}, 6).empty());
    CHECK(check_smooth_transversal(zero, RectRegion{-3, -3, 3, 3}, 6));
}
