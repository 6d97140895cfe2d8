#include "curvepair/approximation.hpp"

#include <algorithm>

namespace curvepair {

int sign_at(const BivariatePolynomial& p, const Point& point) {
    int s = eval_exact(p, point).sign();
    return s >= 0 ? 1 : -1;  // exact zeros perturb to positive
}

SignMap sign_map(const BivariatePolynomial& p, const Partition& part) {
    SignMap signs;
    for (const auto& [key, rule] : part.leaves()) {
        IBox g = part.box_geometry(key);
        for (const Point& corner :
             {Point{g.x.lo, g.y.lo}, Point{g.x.hi, g.y.lo}, Point{g.x.hi, g.y.hi},
              Point{g.x.lo, g.y.hi}}) {
            if (!signs.contains(corner)) signs.emplace(corner, sign_at(p, corner));
        }
    }
    return signs;
}

namespace {

struct SideGeometry {
    Point from;  // walking the box boundary counterclockwise
    Point to;
    bool vertical;
};

SideGeometry side_geometry(const IBox& g, Side s) {
    switch (s) {
        case Side::south: return {{g.x.lo, g.y.lo}, {g.x.hi, g.y.lo}, false};
        case Side::east: return {{g.x.hi, g.y.lo}, {g.x.hi, g.y.hi}, true};
        case Side::north: return {{g.x.hi, g.y.hi}, {g.x.lo, g.y.hi}, false};
        case Side::west: return {{g.x.lo, g.y.hi}, {g.x.lo, g.y.lo}, true};
    }
    return {};
}

bool side_is_split(const Partition& part, const BoxKey& key, Side s) {
    for (const BoxKey& n : part.neighbors(key, s))
        if (n.depth > key.depth) return true;
    return false;
}

SubdivisionEdge make_edge(Point a, Point b, bool vertical) {
    SubdivisionEdge e;
    if (b < a) std::swap(a, b);
    e.a = std::move(a);
    e.b = std::move(b);
    e.vertical = vertical;
    return e;
}

}  // namespace

std::vector<SubdivisionEdge> collect_edges(const Partition& part) {
    std::map<std::pair<Point, Point>, SubdivisionEdge> dedup;
    for (const auto& [key, rule] : part.leaves()) {
        IBox g = part.box_geometry(key);
        for (Side s : all_sides) {
            auto nbrs = part.neighbors(key, s);
            bool split = false;
            for (const BoxKey& n : nbrs) split |= n.depth > key.depth;
            if (split) continue;  // the deeper side registers it
            SideGeometry side = side_geometry(g, s);
            SubdivisionEdge e = make_edge(side.from, side.to, side.vertical);
            auto [it, inserted] = dedup.try_emplace({e.a, e.b}, e);
            SubdivisionEdge& slot = it->second;
            for (const BoxKey& owner : nbrs) {
                bool seen = false;
                for (int i = 0; i < slot.owner_count; ++i) seen |= slot.owners[i] == owner;
                if (!seen && slot.owner_count < 2) slot.owners[slot.owner_count++] = owner;
            }
            bool seen = false;
            for (int i = 0; i < slot.owner_count; ++i) seen |= slot.owners[i] == key;
            if (!seen && slot.owner_count < 2) slot.owners[slot.owner_count++] = key;
        }
    }
    std::vector<SubdivisionEdge> edges;
    edges.reserve(dedup.size());
    for (auto& [k, e] : dedup) edges.push_back(std::move(e));
    return edges;
}

std::map<Point, std::size_t> place_vertices(const SignMap& signs,
                                            const std::vector<SubdivisionEdge>& edges) {
    std::map<Point, std::size_t> vertices;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const SubdivisionEdge& e = edges[i];
        if (signs.at(e.a) != signs.at(e.b)) vertices.emplace(e.midpoint(), i);
    }
    return vertices;
}

std::vector<Segment> connect_box(const BivariatePolynomial& p, const Partition& part,
                                 const SignMap& signs, const BoxKey& box) {
    IBox g = part.box_geometry(box);

    // Boundary walk: corner points (including T-junction corners on split
    // sides) in counterclockwise order, one subdivision edge between each
    // consecutive pair.
    std::vector<Point> walk;
    for (Side s : all_sides) {
        SideGeometry side = side_geometry(g, s);
        walk.push_back(side.from);
        if (side_is_split(part, box, s))
            walk.push_back(Point{Dyadic::midpoint(side.from.x, side.to.x),
                                 Dyadic::midpoint(side.from.y, side.to.y)});
    }

    const std::size_t n = walk.size();
    std::vector<Point> boundary_vertices;
    std::vector<int> arc_sign_after;  // sign of the arc following each vertex
    for (std::size_t i = 0; i < n; ++i) {
        const Point& from = walk[i];
        const Point& to = walk[(i + 1) % n];
        int sf = signs.at(from);
        if (sf != signs.at(to)) {
            boundary_vertices.push_back(
                Point{Dyadic::midpoint(from.x, to.x), Dyadic::midpoint(from.y, to.y)});
            arc_sign_after.push_back(signs.at(to));
        }
    }
    if (boundary_vertices.empty()) return {};
    if (boundary_vertices.size() % 2 != 0)
        throw Error("OddVertexCount", "approximation",
                    "odd vertex count on box " + to_string(box), box);

    // Arcs of constant sign alternate around the boundary; capping every arc
    // whose sign differs from the center sign pairs each vertex exactly once
    // and the caps cannot cross.
    int center = sign_at(p, g.midpoint());
    std::vector<Segment> out;
    for (std::size_t i = 0; i < boundary_vertices.size(); ++i) {
        if (arc_sign_after[i] == center) continue;
        out.push_back(Segment{boundary_vertices[i],
                              boundary_vertices[(i + 1) % boundary_vertices.size()], box});
    }
    return out;
}

void CurveApprox::rebuild_adjacency() {
    adjacency.clear();
    for (std::size_t i = 0; i < segments.size(); ++i) {
        adjacency[segments[i].a].push_back(i);
        adjacency[segments[i].b].push_back(i);
    }
}

CurveApprox assemble(const BivariatePolynomial& p, const Partition& part) {
    CurveApprox approx;
    SignMap signs = sign_map(p, part);
    approx.edges = collect_edges(part);
    approx.vertices = place_vertices(signs, approx.edges);
    for (const auto& [key, rule] : part.leaves()) {
        auto segs = connect_box(p, part, signs, key);
        approx.segments.insert(approx.segments.end(), segs.begin(), segs.end());
    }
    approx.rebuild_adjacency();

    // Structural degree check: 2 everywhere except 1 on the region boundary.
    for (const auto& [v, edge_idx] : approx.vertices) {
        std::size_t degree = approx.adjacency.contains(v) ? approx.adjacency.at(v).size() : 0;
        std::size_t expected = approx.edges[edge_idx].on_region_boundary() ? 1 : 2;
        if (degree != expected)
            throw Error("InternalError", "approximation",
                        "vertex degree " + std::to_string(degree) + " (expected " +
                            std::to_string(expected) + ")");
    }
    return approx;
}

std::vector<std::vector<Point>> polylines(const CurveApprox& approx) {
    std::vector<bool> used(approx.segments.size(), false);
    std::vector<std::vector<Point>> chains;

    auto walk_from = [&](const Point& start, std::size_t first_seg) {
        std::vector<Point> chain{start};
        Point cur = start;
        std::size_t seg = first_seg;
        for (;;) {
            used[seg] = true;
            const Segment& s = approx.segments[seg];
            cur = s.a == cur ? s.b : s.a;
            chain.push_back(cur);
            std::size_t next = seg;
            for (std::size_t cand : approx.adjacency.at(cur)) {
                if (!used[cand]) {
                    next = cand;
                    break;
                }
            }
            if (next == seg) break;
            seg = next;
        }
        return chain;
    };

    // Open paths first, from their smallest endpoint.
    for (const auto& [v, incident] : approx.adjacency) {
        if (incident.size() != 1 || used[incident.front()]) continue;
        chains.push_back(walk_from(v, incident.front()));
    }
    // Remaining segments form closed loops.
    for (const auto& [v, incident] : approx.adjacency) {
        for (std::size_t seg : incident) {
            if (!used[seg]) {
                chains.push_back(walk_from(v, seg));
                break;
            }
        }
    }
    return chains;
}

}  // namespace curvepair
