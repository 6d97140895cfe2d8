#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvepair/partition.hpp"

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

}  // namespace

TEST_CASE("children tile the parent at half the side") {
    auto kids = children(BoxKey{0, 0, 0});
    CHECK(kids == std::array<BoxKey, 4>{BoxKey{1, 0, 0}, BoxKey{1, 1, 0}, BoxKey{1, 0, 1},
                                        BoxKey{1, 1, 1}});
    Partition part(SquareRegion{-1, -1, 2});
    IBox parent = part.box_geometry(BoxKey{0, 0, 0});
    part.split(BoxKey{0, 0, 0});
    Dyadic area;
    for (const auto& [k, r] : part.leaves()) {
        IBox g = part.box_geometry(k);
        CHECK(g.x.width() == parent.x.width().halved());
        CHECK(parent.contains(g));
        area += g.x.width() * g.y.width();
    }
    CHECK(area == parent.x.width() * parent.y.width());
}

TEST_CASE("box geometry uses exact dyadic corners") {
    Partition part(SquareRegion{-4, -4, 8});
    IBox g = part.box_geometry(BoxKey{3, 5, 2});
    CHECK(g.x.lo == Dyadic(1));  // -4 + 5 * 8/8
    CHECK(g.x.hi == Dyadic(2));
    CHECK(g.y.lo == Dyadic(-2));
    CHECK(g.y.hi == Dyadic(-1));
    CHECK(part.side_length(BoxKey{3, 5, 2}) == Dyadic(1));
}

TEST_CASE("neighbors across equal, finer and coarser boxes") {
    Partition part(SquareRegion{0, 0, 4});
    part.split(BoxKey{0, 0, 0});
    part.split(BoxKey{1, 1, 0});  // refine the SE quadrant
    // west neighbor of a refined child is the coarse SW quadrant
    auto w = part.neighbors(BoxKey{2, 2, 0}, Side::west);
    REQUIRE(w.size() == 1);
    CHECK(w[0] == BoxKey{1, 0, 0});
    // east neighbors of the SW quadrant are the two refined children
    auto e = part.neighbors(BoxKey{1, 0, 0}, Side::east);
    CHECK(e.size() == 2);
    // region boundary has no neighbors
    CHECK(part.neighbors(BoxKey{1, 0, 0}, Side::west).empty());
}

TEST_CASE("interior neighborhood sizes on a uniform grid") {
    Partition part = uniform(SquareRegion{0, 0, 8}, 3);
    BoxKey center{3, 3, 3};
    auto n1 = neighborhood(part, center, 1);
    CHECK(n1.members.size() == 5);  // self plus the four edge neighbors

    auto n2 = neighborhood(part, center, 2);
    CHECK(n2.members.size() == 13);  // the radius-2 diamond
    // diagonal boxes of the 3x3 block enter via the side neighbors
    CHECK(n2.members.contains(BoxKey{3, 4, 4}));
    CHECK(n2.members.contains(BoxKey{3, 2, 2}));
    // corner-only contact never joins directly: the radius-2 diagonals stay out
    CHECK(!n2.members.contains(BoxKey{3, 5, 5}));
    // hull is the 5w x 5w square around the center box
    CHECK(n2.hull.x == Interval::of_ints(1, 6));
    CHECK(n2.hull.y == Interval::of_ints(1, 6));
}

TEST_CASE("corner neighborhood clips to the region") {
    Partition part = uniform(SquareRegion{0, 0, 8}, 3);
    auto n1 = neighborhood(part, BoxKey{3, 0, 0}, 1);
    CHECK(n1.members.size() == 3);
}

TEST_CASE("leaf containment") {
    Partition part(SquareRegion{0, 0, 4});
    part.split(BoxKey{0, 0, 0});
    CHECK(part.leaf_containing(Point{Dyadic(3), Dyadic(1)}) == BoxKey{1, 1, 0});
    CHECK_THROWS(part.leaf_containing(Point{Dyadic(5), Dyadic(0)}));
}

TEST_CASE("tiling invariant: leaves cover the region exactly") {
    Partition part(SquareRegion{-2, -2, 4});
    part.split(BoxKey{0, 0, 0});
    part.split(BoxKey{1, 0, 0});
    part.split(BoxKey{2, 1, 1});
    Dyadic total;
    for (const auto& [k, r] : part.leaves()) {
        IBox g = part.box_geometry(k);
        total += g.x.width() * g.y.width();
    }
    CHECK(total == Dyadic(16));
    // pairwise interior-disjoint
    std::vector<BoxKey> keys;
    for (const auto& [k, r] : part.leaves()) keys.push_back(k);
    for (std::size_t i = 0; i < keys.size(); ++i) {
        for (std::size_t j = i + 1; j < keys.size(); ++j) {
            IBox a = part.box_geometry(keys[i]);
            IBox b = part.box_geometry(keys[j]);
            bool interiors_meet = a.x.lo < b.x.hi && b.x.lo < a.x.hi && a.y.lo < b.y.hi &&
                                  b.y.lo < a.y.hi;
            CHECK(!interiors_meet);
        }
    }
}
