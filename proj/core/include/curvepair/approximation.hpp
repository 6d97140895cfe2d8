// Piecewise-linear curve approximation on a balanced partition: corner sign
// maps, vertices at the midpoints of sign-changing subdivision edges, and
// non-crossing in-box segment matchings.
#pragma once

#include "curvepair/partition.hpp"

#include <vector>

namespace curvepair {

// A box side not composed of sides of smaller neighbors; vertices live here.
struct SubdivisionEdge {
    Point a;  // a < b
    Point b;
    std::array<BoxKey, 2> owners{};
    int owner_count = 0;
    bool vertical = false;

    Point midpoint() const { return Point{Dyadic::midpoint(a.x, b.x), Dyadic::midpoint(a.y, b.y)}; }
    Dyadic length() const { return vertical ? b.y - a.y : b.x - a.x; }
    bool on_region_boundary() const { return owner_count == 1; }
};

struct Segment {
    Point a;
    Point b;
    BoxKey box;
};

using SignMap = std::map<Point, int>;

// Exact sign of p at every leaf corner; exact zeros count as positive.
SignMap sign_map(const BivariatePolynomial& p, const Partition& part);
int sign_at(const BivariatePolynomial& p, const Point& point);

// Requires a 2:1-balanced partition.
std::vector<SubdivisionEdge> collect_edges(const Partition& part);

// One vertex at the midpoint of each edge whose endpoint signs differ.
std::map<Point, std::size_t> place_vertices(const SignMap& signs,
                                            const std::vector<SubdivisionEdge>& edges);

// Matches the vertices on the box boundary with pairwise non-crossing
// segments. With four vertices and alternating corner signs the matching
// consistent with the exact center sign is chosen.
std::vector<Segment> connect_box(const BivariatePolynomial& p, const Partition& part,
                                 const SignMap& signs, const BoxKey& box);

struct CurveApprox {
    std::vector<SubdivisionEdge> edges;
    std::map<Point, std::size_t> vertices;  // vertex point -> index into edges
    std::vector<Segment> segments;
    std::map<Point, std::vector<std::size_t>> adjacency;  // vertex -> segment indices

    void rebuild_adjacency();
};

CurveApprox assemble(const BivariatePolynomial& p, const Partition& part);

// Connected components as ordered point chains; closed chains repeat the
// first point at the end. Deterministic order.
std::vector<std::vector<Point>> polylines(const CurveApprox& approx);

}  // namespace curvepair
