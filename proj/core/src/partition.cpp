#include "curvepair/partition.hpp"

#include <stdexcept>

namespace curvepair {

std::string to_string(const BoxKey& key) {
    return "(depth " + std::to_string(key.depth) + ", ix " + std::to_string(key.ix) + ", iy " +
           std::to_string(key.iy) + ")";
}

SquareRegion SquareRegion::of(const RectRegion& r) {
    if (!r.is_square() || r.width() <= 0)
        throw std::invalid_argument("region is not a positive square");
    return SquareRegion{r.x0, r.y0, r.width()};
}

const char* to_string(AcceptRule rule) {
    switch (rule) {
        case AcceptRule::C0C0: return "C0C0";
        case AcceptRule::C0C1: return "C0C1";
        case AcceptRule::C1C0: return "C1C0";
        case AcceptRule::C1C1X: return "C1C1X";
        case AcceptRule::boundary: return "boundary";
        case AcceptRule::unset: break;
    }
    return "unset";
}

AcceptRule accept_rule_from_string(const std::string& s) {
    for (AcceptRule r : {AcceptRule::C0C0, AcceptRule::C0C1, AcceptRule::C1C0, AcceptRule::C1C1X,
                         AcceptRule::boundary})
        if (s == to_string(r)) return r;
    return AcceptRule::unset;
}

Partition::Partition(SquareRegion region) : region_(region) {
    if (region_.size <= 0) throw std::invalid_argument("region size must be positive");
    leaves_.emplace(BoxKey{0, 0, 0}, AcceptRule::unset);
}

AcceptRule Partition::rule(const BoxKey& key) const {
    auto it = leaves_.find(key);
    if (it == leaves_.end()) throw std::logic_error("rule(): not a leaf " + to_string(key));
    return it->second;
}

void Partition::set_rule(const BoxKey& key, AcceptRule rule) {
    auto it = leaves_.find(key);
    if (it == leaves_.end()) throw std::logic_error("set_rule(): not a leaf " + to_string(key));
    it->second = rule;
}

std::array<BoxKey, 4> children(const BoxKey& b) {
    return {BoxKey{b.depth + 1, 2 * b.ix, 2 * b.iy}, BoxKey{b.depth + 1, 2 * b.ix + 1, 2 * b.iy},
            BoxKey{b.depth + 1, 2 * b.ix, 2 * b.iy + 1},
            BoxKey{b.depth + 1, 2 * b.ix + 1, 2 * b.iy + 1}};
}

std::array<BoxKey, 4> Partition::split(const BoxKey& key, AcceptRule child_rule) {
    auto it = leaves_.find(key);
    if (it == leaves_.end()) throw std::logic_error("split(): not a leaf " + to_string(key));
    leaves_.erase(it);
    auto kids = children(key);
    for (const BoxKey& k : kids) leaves_.emplace(k, child_rule);
    if (key.depth + 1 > max_depth_used_) max_depth_used_ = key.depth + 1;
    return kids;
}

Dyadic Partition::coordinate(std::int64_t grid, int depth, bool x_axis) const {
    // origin + grid * size * 2^-depth
    Dyadic offset(mpz_class(grid) * mpz_class(region_.size), -static_cast<std::int64_t>(depth));
    return Dyadic::from_int(x_axis ? region_.x0 : region_.y0) + offset;
}

IBox Partition::box_geometry(const BoxKey& key) const {
    return IBox{Interval(coordinate(key.ix, key.depth, true), coordinate(key.ix + 1, key.depth, true)),
                Interval(coordinate(key.iy, key.depth, false),
                         coordinate(key.iy + 1, key.depth, false))};
}

Dyadic Partition::side_length(const BoxKey& key) const {
    return Dyadic(mpz_class(region_.size), -static_cast<std::int64_t>(key.depth));
}

bool Partition::touches_region_boundary(const BoxKey& key) const {
    std::uint32_t last = (1u << key.depth) - 1;
    return key.ix == 0 || key.iy == 0 || key.ix == last || key.iy == last;
}

namespace {

// Address of the same-depth cell adjacent across the given side, if any.
bool adjacent_cell(const BoxKey& key, Side side, BoxKey& out) {
    std::uint32_t cells = 1u << key.depth;
    out = key;
    switch (side) {
        case Side::south:
            if (key.iy == 0) return false;
            out.iy -= 1;
            return true;
        case Side::north:
            if (key.iy + 1 >= cells) return false;
            out.iy += 1;
            return true;
        case Side::west:
            if (key.ix == 0) return false;
            out.ix -= 1;
            return true;
        case Side::east:
            if (key.ix + 1 >= cells) return false;
            out.ix += 1;
            return true;
    }
    return false;
}

Side opposite(Side s) {
    switch (s) {
        case Side::south: return Side::north;
        case Side::north: return Side::south;
        case Side::east: return Side::west;
        case Side::west: return Side::east;
    }
    return Side::south;
}

}  // namespace

void Partition::descend_collect(const BoxKey& cell, Side facing, std::vector<BoxKey>& out) const {
    if (is_leaf(cell)) {
        out.push_back(cell);
        return;
    }
    if (cell.depth >= max_depth_used_)
        throw std::logic_error("partition tiling is inconsistent near " + to_string(cell));
    // Recurse into the two children lining the facing side.
    auto kids = children(cell);
    switch (facing) {
        case Side::south: descend_collect(kids[0], facing, out); descend_collect(kids[1], facing, out); break;
        case Side::north: descend_collect(kids[2], facing, out); descend_collect(kids[3], facing, out); break;
        case Side::west: descend_collect(kids[0], facing, out); descend_collect(kids[2], facing, out); break;
        case Side::east: descend_collect(kids[1], facing, out); descend_collect(kids[3], facing, out); break;
    }
}

std::vector<BoxKey> Partition::neighbors(const BoxKey& key, Side side) const {
    BoxKey adj;
    if (!adjacent_cell(key, side, adj)) return {};
    // An ancestor leaf covers the whole adjacent strip.
    for (int d = adj.depth; d >= 0; --d) {
        BoxKey up{d, adj.ix >> (adj.depth - d), adj.iy >> (adj.depth - d)};
        if (is_leaf(up)) return {up};
    }
    // Otherwise the adjacent cell is refined; gather the leaves on its
    // facing column/row.
    std::vector<BoxKey> out;
    descend_collect(adj, opposite(side), out);
    return out;
}

std::vector<BoxKey> Partition::all_neighbors(const BoxKey& key) const {
    std::vector<BoxKey> out;
    for (Side s : all_sides) {
        auto part = neighbors(key, s);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

BoxKey Partition::leaf_containing(const Point& p) const {
    IBox region_box = region_.to_rect().to_ibox();
    if (!region_box.contains(p)) throw std::invalid_argument("point outside region");
    BoxKey cur{0, 0, 0};
    while (!is_leaf(cur)) {
        if (cur.depth >= max_depth_used_)
            throw std::logic_error("partition tiling is inconsistent near " + to_string(cur));
        auto kids = children(cur);
        BoxKey next = kids[3];
        for (const BoxKey& k : kids) {
            if (box_geometry(k).contains(p)) {
                next = k;
                break;
            }
        }
        cur = next;
    }
    return cur;
}

Neighborhood neighborhood(const Partition& p, const BoxKey& b, int i) {
    if (!p.is_leaf(b)) throw std::logic_error("neighborhood(): not a leaf " + to_string(b));
    return neighborhood_of_set(p, {b}, i);
}

Neighborhood neighborhood_of_set(const Partition& p, const std::set<BoxKey>& boxes, int i) {
    std::set<BoxKey> members = boxes;
    for (int stage = 0; stage < i; ++stage) {
        std::set<BoxKey> next = members;
        for (const BoxKey& m : members)
            for (const BoxKey& n : p.all_neighbors(m)) next.insert(n);
        members.swap(next);
    }
    Neighborhood n;
    n.center = boxes.empty() ? BoxKey{} : *boxes.begin();
    bool first = true;
    for (const BoxKey& m : members) {
        IBox g = p.box_geometry(m);
        n.hull = first ? g : hull(n.hull, g);
        first = false;
    }
    n.members = std::move(members);
    return n;
}

}  // namespace curvepair
