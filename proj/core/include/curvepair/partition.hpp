// Quadtree partition of a square region with integer corners, plus the
// edge-adjacency neighborhood machinery used by the acceptance predicates.
#pragma once

#include "curvepair/errors.hpp"
#include "curvepair/polynomial.hpp"

#include <array>
#include <map>
#include <set>
#include <vector>

namespace curvepair {

struct SquareRegion {
    std::int64_t x0 = 0;
    std::int64_t y0 = 0;
    std::int64_t size = 1;

    static SquareRegion of(const RectRegion& r);  // requires r square
    RectRegion to_rect() const { return RectRegion{x0, y0, x0 + size, y0 + size}; }
    friend constexpr auto operator<=>(const SquareRegion&, const SquareRegion&) = default;
};

enum class AcceptRule { unset, C0C0, C0C1, C1C0, C1C1X, boundary };

const char* to_string(AcceptRule rule);
AcceptRule accept_rule_from_string(const std::string& s);

enum class Side { south, east, north, west };
constexpr std::array<Side, 4> all_sides{Side::south, Side::east, Side::north, Side::west};

class Partition {
  public:
    explicit Partition(SquareRegion region);

    const SquareRegion& region() const { return region_; }
    const std::map<BoxKey, AcceptRule>& leaves() const { return leaves_; }
    std::size_t leaf_count() const { return leaves_.size(); }
    int max_depth_used() const { return max_depth_used_; }

    bool is_leaf(const BoxKey& key) const { return leaves_.contains(key); }
    AcceptRule rule(const BoxKey& key) const;
    void set_rule(const BoxKey& key, AcceptRule rule);

    // Replaces a leaf by its four children (inheriting the given rule);
    // returns the children in row-major order.
    std::array<BoxKey, 4> split(const BoxKey& key, AcceptRule child_rule = AcceptRule::unset);

    IBox box_geometry(const BoxKey& key) const;
    Dyadic side_length(const BoxKey& key) const;
    Dyadic coordinate(std::int64_t grid, int depth, bool x_axis) const;
    bool touches_region_boundary(const BoxKey& key) const;

    // Leaves sharing a positive-length segment of the given side.
    std::vector<BoxKey> neighbors(const BoxKey& key, Side side) const;
    std::vector<BoxKey> all_neighbors(const BoxKey& key) const;

    // Leaf containing the point; points on shared boundaries resolve to the
    // smallest-index candidate. Throws if outside the region.
    BoxKey leaf_containing(const Point& p) const;

  private:
    void descend_collect(const BoxKey& cell, Side facing, std::vector<BoxKey>& out) const;

    SquareRegion region_;
    std::map<BoxKey, AcceptRule> leaves_;
    int max_depth_used_ = 0;
};

std::array<BoxKey, 4> children(const BoxKey& b);

struct Neighborhood {
    BoxKey center;
    std::set<BoxKey> members;
    IBox hull;
};

// The i-fold edge-adjacency closure of b in p: stage by stage, each member
// contributes itself and its edge neighbors; corner-only contact never joins.
Neighborhood neighborhood(const Partition& p, const BoxKey& b, int i);

// Hull of the union of per-box neighborhoods over a set of boxes.
Neighborhood neighborhood_of_set(const Partition& p, const std::set<BoxKey>& boxes, int i);

}  // namespace curvepair
