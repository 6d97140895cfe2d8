// Certifies crossings of the two curve approximations: proper in-box segment
// crossings, chains of shared elements (snakes), the boundary-walk
// orientation test deciding whether a snake hides a crossing, and the
// separation / explicit-crossing rewrite that resolves every snake.
#pragma once

#include "curvepair/approximation.hpp"

#include <gmpxx.h>

#include <optional>

namespace curvepair {

struct RationalPoint {
    mpq_class x;
    mpq_class y;

    static RationalPoint of(const Point& p) { return {p.x.to_rational(), p.y.to_rational()}; }
    Point dyadic_floor(unsigned precision_bits) const {
        return Point{Dyadic::from_rational_floor(x, precision_bits),
                     Dyadic::from_rational_floor(y, precision_bits)};
    }
    friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
        return cmp(a.x, b.x) == 0 && cmp(a.y, b.y) == 0;
    }
    friend bool operator<(const RationalPoint& a, const RationalPoint& b) {
        int c = cmp(a.x, b.x);
        return c != 0 ? c < 0 : cmp(a.y, b.y) < 0;
    }
};

struct TransversalCrossing {
    BoxKey box;
    RationalPoint point;   // exact segment-pair intersection
    IBox isolating_hull;   // hull of the box neighborhood
};

struct Snake {
    // Chain data, ordered; a degenerate snake has one vertex and no segments.
    std::vector<Point> shared_vertices;
    std::vector<Segment> shared_segments;
    std::array<BoxKey, 2> heads{};
    // First approximation points after the separation, per head.
    std::array<Point, 2> f_continuation{};
    std::array<Point, 2> g_continuation{};

    bool degenerate() const { return shared_segments.empty(); }
    std::set<BoxKey> chain_boxes() const;
};

enum class SnakeVerdict { crossing, no_crossing };
enum class HeadOrientation { cw, ccw };

// The snake hides a crossing exactly when both heads see the same turn.
constexpr SnakeVerdict verdict_from_orientations(HeadOrientation a, HeadOrientation b) {
    return a == b ? SnakeVerdict::crossing : SnakeVerdict::no_crossing;
}

struct SnakeCrossing {
    Point point;
    IBox isolating_hull;  // hull of the snake neighborhood
};

struct ResolvedPair {
    CurveApprox f;
    CurveApprox g;
    std::vector<SnakeCrossing> crossings;
};

struct CrossingReport {
    std::vector<TransversalCrossing> transversal;
    std::vector<SnakeCrossing> snake_crossings;
    CurveApprox resolved_f;
    CurveApprox resolved_g;
    std::size_t snake_count = 0;

    std::size_t total_crossings() const { return transversal.size() + snake_crossings.size(); }
};

// Raised when an exit point ties with another on the snake-neighborhood
// boundary; the pipeline reacts by subdividing the heads and retrying.
class SnakeTieError : public Error {
  public:
    SnakeTieError(std::array<BoxKey, 2> heads)
        : Error("EndpointOnSnakeBoundary", "pairing",
                "snake exit points collide on the neighborhood boundary"),
          heads_(heads) {}
    const std::array<BoxKey, 2>& heads() const { return heads_; }

  private:
    std::array<BoxKey, 2> heads_;
};

// Every box where a segment of af properly crosses a segment of ag strictly
// inside the box yields one crossing; exact rational arithmetic throughout.
std::vector<TransversalCrossing> find_transversal(const CurveApprox& af, const CurveApprox& ag,
                                                  const Partition& part);

// Maximal chains of shared segments / shared vertices, extended to the boxes
// where the approximations separate.
std::vector<Snake> find_snakes(const CurveApprox& af, const CurveApprox& ag,
                               const Partition& part);

// Boxes of the snake neighborhood N(S).
std::set<BoxKey> snake_region(const Partition& part, const Snake& s);

SnakeVerdict snake_orientation(const Snake& s, const CurveApprox& af, const CurveApprox& ag,
                               const Partition& part);

// No-crossing snakes: shared vertices displaced in opposite directions along
// their edges by length/8 so the polylines disentangle. Crossing snakes: same
// separation with one explicit crossing inserted mid-chain (at the shared
// vertex itself for a degenerate snake).
ResolvedPair resolve_snakes(const CurveApprox& af, const CurveApprox& ag,
                            const std::vector<Snake>& snakes,
                            const std::vector<SnakeVerdict>& verdicts, const Partition& part);

// Runs snake detection, orientation, resolution and transversal detection on
// the resolved approximations. Throws SnakeTieError when orientation needs a
// finer head.
CrossingReport build_report(const CurveApprox& af, const CurveApprox& ag, const Partition& part);

// Exact sign of the cross product (b-a) x (c-a).
int orientation_sign(const Point& a, const Point& b, const Point& c);

// All intersection points of the two segment sets, computed exactly: isolated
// proper or touching intersection points, plus a flag when any overlap has
// positive length. Used by the disjointness checks.
struct IntersectionSummary {
    std::vector<RationalPoint> points;
    bool has_shared_segment = false;
};
IntersectionSummary intersect_all(const CurveApprox& af, const CurveApprox& ag);

}  // namespace curvepair
