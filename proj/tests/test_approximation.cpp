#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvepair/approximation.hpp"
#include "curvepair/subdivision.hpp"

using namespace curvepair;

namespace {

Partition uniform(SquareRegion region, int depth) {
    Partition part(region);
    for (int d = 0; d < depth; ++d) {
        std::vector<BoxKey> keys;
        for (const auto& [k, r] : part.leaves()) keys.push_back(k);
        for (const BoxKey& k : keys) part.split(k);
    }
    return part;
}

// Exact check: distance from v to the circle x^2 + y^2 = r^2 is at most t,
// where only t^2 is required to be dyadic. dist = |sqrt(s) - r| with
// s = |v|^2; dist <= t  <=>  s + r^2 - t^2 <= 2 r sqrt(s), squared safely.
bool within_of_circle(const Point& v, std::int64_t radius_squared, const Dyadic& t_squared) {
    Dyadic s = v.x * v.x + v.y * v.y;
    Dyadic r2 = Dyadic::from_int(radius_squared);
    Dyadic lhs = s + r2 - t_squared;
    if (lhs.sign() <= 0) return true;
    return lhs * lhs <= Dyadic(4) * r2 * s;
}

}  // namespace

TEST_CASE("sign map uses exact signs with zeros counted positive") {
    auto f = parse_polynomial("x");
    Partition part(SquareRegion{-1, -1, 2});
    auto signs = sign_map(f, part);
    CHECK(signs.at(Point{Dyadic(-1), Dyadic(-1)}) == -1);
    CHECK(signs.at(Point{Dyadic(1), Dyadic(1)}) == 1);

    auto circle = parse_polynomial("x^2 + y^2 - 4");
    CHECK(sign_at(circle, Point{Dyadic(2), Dyadic(0)}) == 1);  // exact zero perturbs to +

    auto one = BivariatePolynomial(1);
    for (const auto& [pt, s] : sign_map(one, part)) CHECK(s == 1);
}

TEST_CASE("edges: a coarse side split by finer neighbors registers half-sides") {
    Partition part(SquareRegion{0, 0, 4});
    part.split(BoxKey{0, 0, 0});
    part.split(BoxKey{1, 1, 0});
    auto edges = collect_edges(part);
    // the east side of the SW quadrant is two edges owned by the fine boxes
    int on_seam = 0;
    for (const auto& e : edges) {
        if (e.vertical && e.a.x == Dyadic(2) && e.b.y <= Dyadic(2)) {
            ++on_seam;
            CHECK(e.owner_count == 2);
            CHECK(e.length() == Dyadic(1));
        }
    }
    CHECK(on_seam == 2);
    // region boundary edges have one owner
    for (const auto& e : edges)
        if (e.a.x == Dyadic(0) && e.vertical) CHECK(e.owner_count == 1);
}

TEST_CASE("vertex placement on a single box") {
    auto f = parse_polynomial("x");
    Partition part(SquareRegion{-1, -1, 2});
    auto signs = sign_map(f, part);
    auto edges = collect_edges(part);
    auto vertices = place_vertices(signs, edges);
    REQUIRE(vertices.size() == 2);
    CHECK(vertices.contains(Point{Dyadic(0), Dyadic(-1)}));
    CHECK(vertices.contains(Point{Dyadic(0), Dyadic(1)}));

    auto one = BivariatePolynomial(1);
    CHECK(place_vertices(sign_map(one, part), edges).empty());
}

TEST_CASE("vertex-edge correspondence: one vertex iff endpoint signs differ") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    Partition part = uniform(SquareRegion{-4, -4, 8}, 3);
    auto signs = sign_map(circle, part);
    auto edges = collect_edges(part);
    auto vertices = place_vertices(signs, edges);
    std::size_t expected = 0;
    for (const auto& e : edges)
        if (signs.at(e.a) != signs.at(e.b)) ++expected;
    CHECK(vertices.size() == expected);
}

TEST_CASE("connect_box pairs two vertices and leaves empty boxes alone") {
    auto f = parse_polynomial("x");
    Partition part(SquareRegion{-1, -1, 2});
    auto signs = sign_map(f, part);
    auto segs = connect_box(f, part, signs, BoxKey{0, 0, 0});
    REQUIRE(segs.size() == 1);
    CHECK(((segs[0].a == Point{Dyadic(0), Dyadic(-1)} && segs[0].b == Point{Dyadic(0), Dyadic(1)}) ||
           (segs[0].b == Point{Dyadic(0), Dyadic(-1)} && segs[0].a == Point{Dyadic(0), Dyadic(1)})));

    auto one = BivariatePolynomial(1);
    CHECK(connect_box(one, part, sign_map(one, part), BoxKey{0, 0, 0}).empty());
}

TEST_CASE("connect_box resolves the four-vertex checkerboard by the center sign") {
    // x*y has checkerboard corner signs on [-1,1]^2 and center sign + (exact
    // zero perturbed); enumerate the two matchings and check the chosen one.
    auto f = parse_polynomial("x*y");
    Partition part(SquareRegion{-1, -1, 2});
    auto signs = sign_map(f, part);
    auto segs = connect_box(f, part, signs, BoxKey{0, 0, 0});
    REQUIRE(segs.size() == 2);
    // center is +; the segments must cut off the negative corners (1,-1), (-1,1):
    // south-east pairing and north-west pairing
    Point ms{Dyadic(0), Dyadic(-1)}, me{Dyadic(1), Dyadic(0)}, mn{Dyadic(0), Dyadic(1)},
        mw{Dyadic(-1), Dyadic(0)};
    auto has = [&](const Point& a, const Point& b) {
        for (const auto& s : segs)
            if ((s.a == a && s.b == b) || (s.a == b && s.b == a)) return true;
        return false;
    };
    CHECK(has(ms, me));
    CHECK(has(mn, mw));
    // the alternative matching (separating the positive corners) is not chosen
    CHECK(!has(ms, mw));
    CHECK(!has(mn, me));
}

TEST_CASE("circle assembles to one closed polyline with degree 2 everywhere") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    CurvePair pair(circle, BivariatePolynomial(1));
    SubdivisionLimits lim;
    auto part = subdivide(pair, SquareRegion{-4, -4, 8}, lim);
    balance(part, pair, lim);
    verify_rule4(part, pair, lim);
    auto approx = assemble(circle, part);
    for (const auto& [v, incident] : approx.adjacency) CHECK(incident.size() == 2);
    auto chains = polylines(approx);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].front() == chains[0].back());  // closed
    CHECK(chains[0].size() >= 8);
}

TEST_CASE("empty curve assembles to an empty approximation") {
    auto one = BivariatePolynomial(1);
    Partition part = uniform(SquareRegion{-1, -1, 2}, 2);
    auto approx = assemble(one, part);
    CHECK(approx.vertices.empty());
    CHECK(approx.segments.empty());
    CHECK(polylines(approx).empty());
}

TEST_CASE("vertices on a uniform partition stay within half a diagonal of the circle") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    Partition part = uniform(SquareRegion{-4, -4, 8}, 3);
    auto signs = sign_map(circle, part);
    auto edges = collect_edges(part);
    auto vertices = place_vertices(signs, edges);
    CHECK(!vertices.empty());
    Dyadic w = Dyadic(1);          // leaf side at depth 3 on a side-8 region
    Dyadic t2 = (w * w).halved();  // (w sqrt(2) / 2)^2
    for (const auto& [v, e] : vertices) CHECK(within_of_circle(v, 4, t2));
}

TEST_CASE("sign consistency: a box with a segment has corners of both signs") {
    auto circle = parse_polynomial("x^2 + y^2 - 4");
    CurvePair pair(circle, BivariatePolynomial(1));
    SubdivisionLimits lim;
    auto part = subdivide(pair, SquareRegion{-4, -4, 8}, lim);
    balance(part, pair, lim);
    auto approx = assemble(circle, part);
    auto signs = sign_map(circle, part);
    std::set<BoxKey> with_segments;
    for (const Segment& s : approx.segments) with_segments.insert(s.box);
    for (const BoxKey& b : with_segments) {
        IBox g = part.box_geometry(b);
        bool pos = false, neg = false;
        for (const Point& c : {Point{g.x.lo, g.y.lo}, Point{g.x.hi, g.y.lo},
                               Point{g.x.hi, g.y.hi}, Point{g.x.lo, g.y.hi}}) {
            (signs.at(c) > 0 ? pos : neg) = true;
        }
        CHECK((pos && neg));
    }
}

TEST_CASE("two vertices on one geometric side connect when forced by the signs") {
    // Small circle centered at a T-junction corner: the coarse box below sees
    // both sign changes on its split north side and must join them.
    Partition part(SquareRegion{0, 0, 4});
    part.split(BoxKey{0, 0, 0});
    part.split(BoxKey{1, 0, 1});  // refine the NW quadrant
    auto f = parse_polynomial("4*(x-1)^2 + 4*(y-2)^2 - 1");
    auto signs = sign_map(f, part);
    auto in_coarse = connect_box(f, part, signs, BoxKey{1, 0, 0});
    REQUIRE(in_coarse.size() == 1);
    Dyadic two(2);
    CHECK(in_coarse[0].a.y == two);
    CHECK(in_coarse[0].b.y == two);
    auto approx = assemble(f, part);
    auto chains = polylines(approx);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].front() == chains[0].back());
    // triangle: the same-side pair in the coarse box plus one segment in each
    // of the two finer boxes above
    CHECK(approx.segments.size() == 3);
}

TEST_CASE("nested circles run separately each give one closed component") {
    SubdivisionLimits lim;
    for (const char* text : {"x^2 + y^2 - 4", "x^2 + y^2 - 1"}) {
        auto f = parse_polynomial(text);
        CurvePair pair(f, BivariatePolynomial(1));
        auto part = subdivide(pair, SquareRegion{-4, -4, 8}, lim);
        balance(part, pair, lim);
        auto chains = polylines(assemble(f, part));
        REQUIRE(chains.size() == 1);
        CHECK(chains[0].front() == chains[0].back());
    }
}
