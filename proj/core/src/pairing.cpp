#include "curvepair/pairing.hpp"

#include <algorithm>
#include <map>

namespace curvepair {

namespace {

struct Vec {
    Dyadic x;
    Dyadic y;
};

Vec direction(const Point& from, const Point& to) { return Vec{to.x - from.x, to.y - from.y}; }

int cross_sign(const Vec& u, const Vec& v) { return (u.x * v.y - u.y * v.x).sign(); }
int dot_sign(const Vec& u, const Vec& v) { return (u.x * v.x + u.y * v.y).sign(); }

}  // namespace

int orientation_sign(const Point& a, const Point& b, const Point& c) {
    return cross_sign(direction(a, b), direction(a, c));
}

// ---------------------------------------------------------------------------
// Transversal crossings

namespace {

RationalPoint proper_intersection(const Segment& sf, const Segment& sg) {
    mpq_class ax = sf.a.x.to_rational(), ay = sf.a.y.to_rational();
    mpq_class d1x = sf.b.x.to_rational() - ax, d1y = sf.b.y.to_rational() - ay;
    mpq_class qx = sg.a.x.to_rational(), qy = sg.a.y.to_rational();
    mpq_class d2x = sg.b.x.to_rational() - qx, d2y = sg.b.y.to_rational() - qy;
    mpq_class denom = d1x * d2y - d1y * d2x;
    mpq_class t = ((qx - ax) * d2y - (qy - ay) * d2x) / denom;
    return RationalPoint{ax + t * d1x, ay + t * d1y};
}

bool properly_cross(const Segment& sf, const Segment& sg) {
    int o1 = orientation_sign(sf.a, sf.b, sg.a);
    int o2 = orientation_sign(sf.a, sf.b, sg.b);
    if (o1 * o2 >= 0) return false;
    int o3 = orientation_sign(sg.a, sg.b, sf.a);
    int o4 = orientation_sign(sg.a, sg.b, sf.b);
    return o3 * o4 < 0;
}

bool strictly_inside(const RationalPoint& p, const IBox& box) {
    return cmp(p.x, box.x.lo.to_rational()) > 0 && cmp(p.x, box.x.hi.to_rational()) < 0 &&
           cmp(p.y, box.y.lo.to_rational()) > 0 && cmp(p.y, box.y.hi.to_rational()) < 0;
}

std::map<BoxKey, std::vector<std::size_t>> segments_by_box(const CurveApprox& a) {
    std::map<BoxKey, std::vector<std::size_t>> by_box;
    for (std::size_t i = 0; i < a.segments.size(); ++i) by_box[a.segments[i].box].push_back(i);
    return by_box;
}

}  // namespace

std::vector<TransversalCrossing> find_transversal(const CurveApprox& af, const CurveApprox& ag,
                                                  const Partition& part) {
    std::vector<TransversalCrossing> out;
    auto f_by_box = segments_by_box(af);
    auto g_by_box = segments_by_box(ag);
    for (const auto& [box, f_indices] : f_by_box) {
        auto git = g_by_box.find(box);
        if (git == g_by_box.end()) continue;
        IBox geometry = part.box_geometry(box);
        for (std::size_t fi : f_indices) {
            for (std::size_t gi : git->second) {
                const Segment& sf = af.segments[fi];
                const Segment& sg = ag.segments[gi];
                if (!properly_cross(sf, sg)) continue;
                RationalPoint p = proper_intersection(sf, sg);
                if (!strictly_inside(p, geometry)) continue;
                out.push_back(TransversalCrossing{box, p, neighborhood(part, box, 1).hull});
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Snake detection

std::set<BoxKey> Snake::chain_boxes() const {
    std::set<BoxKey> boxes;
    for (const Segment& s : shared_segments) boxes.insert(s.box);
    return boxes;
}

namespace {

struct SegKey {
    Point a;
    Point b;
    BoxKey box;
    friend bool operator<(const SegKey& l, const SegKey& r) {
        if (l.a != r.a) return l.a < r.a;
        if (l.b != r.b) return l.b < r.b;
        return l.box < r.box;
    }
};

SegKey canonical_key(const Segment& s) {
    return s.b < s.a ? SegKey{s.b, s.a, s.box} : SegKey{s.a, s.b, s.box};
}

// Index of the unique non-shared segment of `approx` at vertex v, or nullopt.
std::optional<std::size_t> continuation_at(const CurveApprox& approx, const Point& v,
                                           const std::set<std::size_t>& shared_indices) {
    auto it = approx.adjacency.find(v);
    if (it == approx.adjacency.end()) return std::nullopt;
    std::optional<std::size_t> found;
    for (std::size_t idx : it->second) {
        if (shared_indices.contains(idx)) continue;
        if (found) throw Error("InternalError", "pairing", "ambiguous snake continuation");
        found = idx;
    }
    return found;
}

Point other_endpoint(const Segment& s, const Point& v) { return s.a == v ? s.b : s.a; }

}  // namespace

std::vector<Snake> find_snakes(const CurveApprox& af, const CurveApprox& ag,
                               const Partition& part) {
    (void)part;
    // Shared segments: identical endpoint pair within the same box.
    std::map<SegKey, std::size_t> g_index;
    for (std::size_t i = 0; i < ag.segments.size(); ++i)
        g_index.emplace(canonical_key(ag.segments[i]), i);

    std::set<std::size_t> shared_f;  // indices into af.segments
    std::set<std::size_t> shared_g;
    std::map<Point, std::vector<std::size_t>> chain_adjacency;  // over af indices
    for (std::size_t i = 0; i < af.segments.size(); ++i) {
        auto it = g_index.find(canonical_key(af.segments[i]));
        if (it == g_index.end()) continue;
        shared_f.insert(i);
        shared_g.insert(it->second);
        chain_adjacency[af.segments[i].a].push_back(i);
        chain_adjacency[af.segments[i].b].push_back(i);
    }

    // Shared vertices: sign changes of both curves on the same edge.
    std::set<Point> shared_vertices;
    for (const auto& [v, e] : af.vertices)
        if (ag.vertices.contains(v)) shared_vertices.insert(v);

    std::vector<Snake> snakes;
    std::set<std::size_t> visited;

    auto finish_ends = [&](Snake& snake) {
        for (int end = 0; end < 2; ++end) {
            const Point& v = end == 0 ? snake.shared_vertices.front() : snake.shared_vertices.back();
            auto f_cont = continuation_at(af, v, shared_f);
            auto g_cont = continuation_at(ag, v, shared_g);
            if (!f_cont || !g_cont)
                throw Error("OpenSnake", "pairing",
                            "snake reaches the region boundary without separating");
            const Segment& fs = af.segments[*f_cont];
            const Segment& gs = ag.segments[*g_cont];
            if (fs.box != gs.box)
                throw Error("InternalError", "pairing", "snake continuations disagree on the head box");
            snake.heads[end] = fs.box;
            snake.f_continuation[end] = other_endpoint(fs, v);
            snake.g_continuation[end] = other_endpoint(gs, v);
        }
    };

    // Chains of shared segments, walked from their smallest endpoint.
    for (const auto& [start, incident] : chain_adjacency) {
        if (incident.size() > 2)
            throw Error("InternalError", "pairing", "shared-segment branching");
        if (incident.size() != 1) continue;
        if (visited.contains(incident.front())) continue;
        Snake snake;
        snake.shared_vertices.push_back(start);
        Point cur = start;
        std::size_t seg = incident.front();
        for (;;) {
            visited.insert(seg);
            snake.shared_segments.push_back(af.segments[seg]);
            cur = other_endpoint(af.segments[seg], cur);
            snake.shared_vertices.push_back(cur);
            std::size_t next = seg;
            for (std::size_t cand : chain_adjacency.at(cur))
                if (cand != seg && !visited.contains(cand)) next = cand;
            if (next == seg) break;
            seg = next;
        }
        finish_ends(snake);
        snakes.push_back(std::move(snake));
    }
    for (std::size_t idx : shared_f)
        if (!visited.contains(idx))
            throw Error("ClosedSnakeLoop", "pairing",
                        "shared segments form a closed loop; cannot identify heads");

    // Degenerate snakes: a shared vertex with no shared segments.
    for (const Point& v : shared_vertices) {
        if (chain_adjacency.contains(v)) continue;
        Snake snake;
        snake.shared_vertices.push_back(v);
        const SubdivisionEdge& edge = af.edges[af.vertices.at(v)];
        if (edge.owner_count < 2)
            throw Error("OpenSnake", "pairing",
                        "shared vertex on the region boundary without separating");
        std::array<BoxKey, 2> owners{edge.owners[0], edge.owners[1]};
        if (owners[1] < owners[0]) std::swap(owners[0], owners[1]);
        for (int end = 0; end < 2; ++end) {
            snake.heads[end] = owners[end];
            bool found_f = false, found_g = false;
            for (std::size_t idx : af.adjacency.at(v)) {
                if (af.segments[idx].box == owners[end]) {
                    snake.f_continuation[end] = other_endpoint(af.segments[idx], v);
                    found_f = true;
                }
            }
            for (std::size_t idx : ag.adjacency.at(v)) {
                if (ag.segments[idx].box == owners[end]) {
                    snake.g_continuation[end] = other_endpoint(ag.segments[idx], v);
                    found_g = true;
                }
            }
            if (!found_f || !found_g)
                throw Error("InternalError", "pairing", "degenerate snake lacks a continuation");
        }
        snakes.push_back(std::move(snake));
    }

    std::sort(snakes.begin(), snakes.end(), [](const Snake& a, const Snake& b) {
        return a.shared_vertices.front() < b.shared_vertices.front();
    });
    return snakes;
}

std::set<BoxKey> snake_region(const Partition& part, const Snake& s) {
    std::set<BoxKey> seed = s.chain_boxes();
    seed.insert(s.heads[0]);
    seed.insert(s.heads[1]);
    return neighborhood_of_set(part, seed, 1).members;
}

// ---------------------------------------------------------------------------
// Orientation: boundary circuit of the snake neighborhood, approximation
// traces to their first exit, and the interleaving of the four exits.

namespace {

struct CircuitPiece {
    Point from;
    Point to;
};

Vec piece_direction(const CircuitPiece& p) { return direction(p.from, p.to); }

// Directed boundary of the box set, region kept on the left. At pinch
// corners the walk prefers the sharpest right turn, which keeps the circuit
// simple. Throws if the boundary has several components.
std::vector<CircuitPiece> boundary_circuit(const Partition& part, const std::set<BoxKey>& region) {
    std::vector<CircuitPiece> pieces;
    for (const BoxKey& box : region) {
        IBox g = part.box_geometry(box);
        for (Side side : all_sides) {
            auto nbrs = part.neighbors(box, side);
            auto emit = [&](const Interval& span_x, const Interval& span_y) {
                switch (side) {
                    case Side::south:
                        pieces.push_back({{span_x.lo, g.y.lo}, {span_x.hi, g.y.lo}});
                        break;
                    case Side::east:
                        pieces.push_back({{g.x.hi, span_y.lo}, {g.x.hi, span_y.hi}});
                        break;
                    case Side::north:
                        pieces.push_back({{span_x.hi, g.y.hi}, {span_x.lo, g.y.hi}});
                        break;
                    case Side::west:
                        pieces.push_back({{g.x.lo, span_y.hi}, {g.x.lo, span_y.lo}});
                        break;
                }
            };
            if (nbrs.empty()) {
                emit(g.x, g.y);
                continue;
            }
            for (const BoxKey& n : nbrs) {
                if (region.contains(n)) continue;
                IBox ng = part.box_geometry(n);
                Interval sx(std::max(g.x.lo, ng.x.lo), std::min(g.x.hi, ng.x.hi));
                Interval sy(std::max(g.y.lo, ng.y.lo), std::min(g.y.hi, ng.y.hi));
                emit(sx, sy);
            }
        }
    }

    std::map<Point, std::vector<std::size_t>> by_start;
    for (std::size_t i = 0; i < pieces.size(); ++i) by_start[pieces[i].from].push_back(i);

    std::vector<CircuitPiece> circuit;
    std::vector<bool> used(pieces.size(), false);
    circuit.push_back(pieces[0]);
    used[0] = true;
    const Point start = pieces[0].from;
    for (;;) {
        const Point& at = circuit.back().to;
        Vec in_dir = piece_direction(circuit.back());
        auto it = by_start.find(at);
        std::size_t best = pieces.size();
        int best_rank = 4;
        if (it != by_start.end()) {
            for (std::size_t cand : it->second) {
                if (used[cand]) continue;
                Vec d = piece_direction(pieces[cand]);
                int cz = cross_sign(in_dir, d);
                int rank = cz < 0 ? 0 : (cz == 0 && dot_sign(in_dir, d) > 0 ? 1 : (cz > 0 ? 2 : 3));
                if (rank < best_rank) {
                    best_rank = rank;
                    best = cand;
                }
            }
        }
        if (best == pieces.size()) {
            if (at == start) break;  // closed
            throw Error("InternalError", "pairing", "snake neighborhood boundary breaks");
        }
        used[best] = true;
        circuit.push_back(pieces[best]);
        if (circuit.size() > pieces.size())
            throw Error("InternalError", "pairing", "snake neighborhood boundary does not close");
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (!used[i])
            throw Error("InternalError", "pairing",
                        "snake neighborhood boundary has several components");
    return circuit;
}

// Cyclic position along the circuit; nullopt when the point is not on it.
std::optional<std::pair<std::size_t, Dyadic>> locate_on_circuit(
    const std::vector<CircuitPiece>& circuit, const Point& p) {
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        const CircuitPiece& piece = circuit[i];
        if (piece.from.x == piece.to.x) {
            if (p.x != piece.from.x) continue;
            Dyadic lo = std::min(piece.from.y, piece.to.y);
            Dyadic hi = std::max(piece.from.y, piece.to.y);
            if (p.y < lo || hi < p.y) continue;
            return std::make_pair(i, (p.y - piece.from.y).abs());
        }
        if (p.y != piece.from.y) continue;
        Dyadic lo = std::min(piece.from.x, piece.to.x);
        Dyadic hi = std::max(piece.from.x, piece.to.x);
        if (p.x < lo || hi < p.x) continue;
        return std::make_pair(i, (p.x - piece.from.x).abs());
    }
    return std::nullopt;
}

using CircuitPos = std::pair<std::size_t, Dyadic>;

bool pos_before(const CircuitPos& a, const CircuitPos& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
}

// Walk the approximation from the snake end into the given head box until it
// first reaches a vertex on the boundary of the region set.
Point trace_exit(const CurveApprox& approx, const Point& start, const BoxKey& into,
                 const std::set<BoxKey>& region) {
    auto inc = approx.adjacency.find(start);
    if (inc == approx.adjacency.end())
        throw Error("InternalError", "pairing", "snake trace start has no segments");
    std::size_t seg = approx.segments.size();
    for (std::size_t idx : inc->second)
        if (approx.segments[idx].box == into) seg = idx;
    if (seg == approx.segments.size())
        throw Error("InternalError", "pairing", "snake trace start segment missing");

    Point cur = start;
    std::size_t steps = 0;
    for (;;) {
        cur = other_endpoint(approx.segments[seg], cur);
        auto vit = approx.vertices.find(cur);
        if (vit == approx.vertices.end())
            throw Error("InternalError", "pairing", "snake trace left the vertex set");
        const SubdivisionEdge& edge = approx.edges[vit->second];
        bool interior = edge.owner_count == 2 && region.contains(edge.owners[0]) &&
                        region.contains(edge.owners[1]);
        if (!interior) return cur;
        std::size_t next = seg;
        for (std::size_t idx : approx.adjacency.at(cur))
            if (idx != seg) next = idx;
        if (next == seg) throw Error("InternalError", "pairing", "snake trace dead end");
        seg = next;
        if (++steps > approx.segments.size())
            throw Error("InternalError", "pairing", "snake trace loops inside the neighborhood");
    }
}

}  // namespace

SnakeVerdict snake_orientation(const Snake& s, const CurveApprox& af, const CurveApprox& ag,
                               const Partition& part) {
    std::set<BoxKey> region = snake_region(part, s);

    std::array<Point, 2> f_exit;
    std::array<Point, 2> g_exit;
    for (int end = 0; end < 2; ++end) {
        const Point& v = end == 0 ? s.shared_vertices.front() : s.shared_vertices.back();
        f_exit[end] = trace_exit(af, v, s.heads[end], region);
        g_exit[end] = trace_exit(ag, v, s.heads[end], region);
    }
    const std::array<Point, 4> exits{f_exit[0], f_exit[1], g_exit[0], g_exit[1]};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (exits[i] == exits[j]) throw SnakeTieError(s.heads);

    auto circuit = boundary_circuit(part, region);
    auto locate = [&](const Point& p) {
        auto pos = locate_on_circuit(circuit, p);
        if (!pos)
            throw Error("InternalError", "pairing", "snake exit missed the neighborhood boundary");
        return *pos;
    };
    CircuitPos pf0 = locate(f_exit[0]), pf1 = locate(f_exit[1]);
    CircuitPos pg0 = locate(g_exit[0]), pg1 = locate(g_exit[1]);

    // Orientation of one head: walking the circuit from this head's f exit,
    // does its own g exit come up before the other f exit?
    auto head_orientation = [&](const CircuitPos& own_f, const CircuitPos& own_g,
                                const CircuitPos& other_f) {
        bool g_first;
        if (pos_before(own_f, own_g) != pos_before(own_f, other_f)) {
            // Exactly one of them wrapped around the circuit start.
            g_first = pos_before(own_f, own_g);
        } else {
            g_first = pos_before(own_g, other_f);
        }
        return g_first ? HeadOrientation::ccw : HeadOrientation::cw;
    };
    HeadOrientation h0 = head_orientation(pf0, pg0, pf1);
    HeadOrientation h1 = head_orientation(pf1, pg1, pf0);
    return verdict_from_orientations(h0, h1);
}

// ---------------------------------------------------------------------------
// Resolution

namespace {

struct ResolutionPlan {
    std::map<Point, Point> move_f;
    std::map<Point, Point> move_g;
    struct Split {
        Point f_a, f_b, g_a, g_b;  // displaced endpoints of the middle segment
        Point via;
        BoxKey box;
    };
    std::vector<Split> splits;
    std::vector<SnakeCrossing> crossings;
};

Vec scaled(const Vec& v, const Dyadic& k) { return Vec{v.x * k, v.y * k}; }
Point offset(const Point& p, const Vec& v) { return Point{p.x + v.x, p.y + v.y}; }

// Unit direction along the vertex's subdivision edge and the displacement
// magnitude edge_length / 8.
std::pair<Vec, Dyadic> edge_direction_and_delta(const CurveApprox& approx, const Point& v) {
    const SubdivisionEdge& e = approx.edges[approx.vertices.at(v)];
    Vec u = e.vertical ? Vec{Dyadic(0), Dyadic(1)} : Vec{Dyadic(1), Dyadic(0)};
    Dyadic delta = e.length().halved().halved().halved();
    return {u, delta};
}

// Sweep order around a vertex: position class of w rotating counterclockwise
// from direction d (0 = along d, 1 = left half, 2 = opposite, 3 = right half).
int sweep_class(const Vec& d, const Vec& w) {
    int cz = cross_sign(d, w);
    if (cz > 0) return 1;
    if (cz < 0) return 3;
    return dot_sign(d, w) > 0 ? 0 : 2;
}

// Strictly-before comparison in the sweep; ties raise a tie error.
bool sweep_before(const Vec& d, const Vec& a, const Vec& b, const std::array<BoxKey, 2>& heads) {
    int ca = sweep_class(d, a);
    int cb = sweep_class(d, b);
    if (ca != cb) return ca < cb;
    int cz = cross_sign(a, b);
    if (cz == 0) throw SnakeTieError(heads);
    return cz > 0;
}

void plan_degenerate(const Snake& s, SnakeVerdict verdict, const CurveApprox& af,
                     const IBox& hull_box, ResolutionPlan& plan) {
    const Point& v = s.shared_vertices.front();
    if (verdict == SnakeVerdict::crossing) {
        // The shared vertex itself is the crossing point.
        plan.crossings.push_back(SnakeCrossing{v, hull_box});
        return;
    }
    auto [u, delta] = edge_direction_and_delta(af, v);
    // Sliding direction from the local wedge order: f moves toward +u when
    // its continuation is angularly closer to +u than g's, measured inside
    // each head box; the two boxes must agree for a non-crossing snake.
    auto side = [&](const Point& f_next, const Point& g_next) {
        Vec df = direction(v, f_next);
        Vec dg = direction(v, g_next);
        int order = cross_sign(df, dg);
        int half = cross_sign(u, df);
        if (order == 0 || half == 0) throw SnakeTieError(s.heads);
        return order * half;
    };
    int e0 = side(s.f_continuation[0], s.g_continuation[0]);
    int e1 = side(s.f_continuation[1], s.g_continuation[1]);
    if (e0 != e1)
        throw Error("InternalError", "pairing",
                    "non-crossing snake with incompatible local separation");
    Vec w = scaled(u, delta * Dyadic(e0));
    plan.move_f.emplace(v, offset(v, w));
    plan.move_g.emplace(v, offset(v, scaled(w, Dyadic(-1))));
}

void plan_chain(const Snake& s, SnakeVerdict verdict, const CurveApprox& af, const IBox& hull_box,
                ResolutionPlan& plan) {
    const auto& vs = s.shared_vertices;
    const std::size_t m = s.shared_segments.size();

    // Which side of the oriented chain does f take at each head: f is "first"
    // when sweeping counterclockwise from the chain direction meets f's
    // continuation before g's.
    auto f_first = [&](int end) {
        const Point& v = end == 0 ? vs.front() : vs.back();
        const Point& chain_next = end == 0 ? vs[1] : vs[m - 1];
        Vec dc = direction(v, chain_next);
        Vec df = direction(v, s.f_continuation[end]);
        Vec dg = direction(v, s.g_continuation[end]);
        return sweep_before(dc, df, dg, s.heads);
    };
    bool first0 = f_first(0);
    bool first1 = f_first(1);
    bool crossing = verdict == SnakeVerdict::crossing;
    if (crossing != (first0 == first1))
        throw Error("InternalError", "pairing",
                    "snake verdict inconsistent with local separation geometry");

    int side0 = first0 ? 1 : -1;  // f's side (left = +1) of the chain at head 0
    const std::size_t middle = crossing ? m / 2 : m;

    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point& v = vs[i];
        // Local chain direction; prefer the chord across the vertex.
        Vec d = i == 0 ? direction(vs[0], vs[1])
                       : (i == vs.size() - 1 ? direction(vs[i - 1], vs[i])
                                             : direction(vs[i - 1], vs[i + 1]));
        auto [u, delta] = edge_direction_and_delta(af, v);
        int transversal = cross_sign(d, u);
        if (transversal == 0 && i > 0 && i < vs.size() - 1) {
            d = direction(vs[i], vs[i + 1]);
            transversal = cross_sign(d, u);
        }
        if (transversal == 0) throw SnakeTieError(s.heads);
        int f_side = (crossing && i > middle) ? -side0 : side0;
        int eps = f_side * transversal;
        Vec w = scaled(u, delta * Dyadic(eps));
        plan.move_f.emplace(v, offset(v, w));
        plan.move_g.emplace(v, offset(v, scaled(w, Dyadic(-1))));
    }

    if (crossing) {
        const Segment& mid = s.shared_segments[middle];
        Point via{Dyadic::midpoint(vs[middle].x, vs[middle + 1].x),
                  Dyadic::midpoint(vs[middle].y, vs[middle + 1].y)};
        plan.splits.push_back(ResolutionPlan::Split{
            plan.move_f.at(vs[middle]), plan.move_f.at(vs[middle + 1]),
            plan.move_g.at(vs[middle]), plan.move_g.at(vs[middle + 1]), via, mid.box});
        plan.crossings.push_back(SnakeCrossing{via, hull_box});
    }
}

CurveApprox apply_plan(const CurveApprox& approx, const std::map<Point, Point>& moves,
                       const std::vector<ResolutionPlan::Split>& splits, bool is_f) {
    CurveApprox out;
    out.edges = approx.edges;
    for (const auto& [v, edge_idx] : approx.vertices) {
        auto mv = moves.find(v);
        out.vertices.emplace(mv == moves.end() ? v : mv->second, edge_idx);
    }
    out.segments.reserve(approx.segments.size() + splits.size());
    for (const Segment& s : approx.segments) {
        auto ma = moves.find(s.a);
        auto mb = moves.find(s.b);
        out.segments.push_back(Segment{ma == moves.end() ? s.a : ma->second,
                                       mb == moves.end() ? s.b : mb->second, s.box});
    }
    for (const auto& split : splits) {
        const Point& a = is_f ? split.f_a : split.g_a;
        const Point& b = is_f ? split.f_b : split.g_b;
        bool found = false;
        for (std::size_t i = 0; i < out.segments.size(); ++i) {
            const Segment& seg = out.segments[i];
            if (seg.box != split.box) continue;
            if (!((seg.a == a && seg.b == b) || (seg.a == b && seg.b == a))) continue;
            out.segments[i] = Segment{a, split.via, split.box};
            out.segments.push_back(Segment{split.via, b, split.box});
            found = true;
            break;
        }
        if (!found)
            throw Error("InternalError", "pairing", "middle snake segment missing during split");
    }
    out.rebuild_adjacency();
    return out;
}

}  // namespace

ResolvedPair resolve_snakes(const CurveApprox& af, const CurveApprox& ag,
                            const std::vector<Snake>& snakes,
                            const std::vector<SnakeVerdict>& verdicts, const Partition& part) {
    if (snakes.size() != verdicts.size())
        throw std::invalid_argument("one verdict per snake required");
    ResolutionPlan plan;
    for (std::size_t i = 0; i < snakes.size(); ++i) {
        IBox hull_box = neighborhood_of_set(part, [&] {
            std::set<BoxKey> seed = snakes[i].chain_boxes();
            seed.insert(snakes[i].heads[0]);
            seed.insert(snakes[i].heads[1]);
            return seed;
        }(), 1).hull;
        if (snakes[i].degenerate())
            plan_degenerate(snakes[i], verdicts[i], af, hull_box, plan);
        else
            plan_chain(snakes[i], verdicts[i], af, hull_box, plan);
    }
    ResolvedPair out;
    out.f = apply_plan(af, plan.move_f, plan.splits, true);
    out.g = apply_plan(ag, plan.move_g, plan.splits, false);
    out.crossings = std::move(plan.crossings);
    return out;
}

CrossingReport build_report(const CurveApprox& af, const CurveApprox& ag, const Partition& part) {
    auto snakes = find_snakes(af, ag, part);
    std::vector<SnakeVerdict> verdicts;
    verdicts.reserve(snakes.size());
    for (const Snake& s : snakes) verdicts.push_back(snake_orientation(s, af, ag, part));
    ResolvedPair resolved = resolve_snakes(af, ag, snakes, verdicts, part);

    CrossingReport report;
    report.transversal = find_transversal(resolved.f, resolved.g, part);
    report.snake_crossings = std::move(resolved.crossings);
    report.resolved_f = std::move(resolved.f);
    report.resolved_g = std::move(resolved.g);
    report.snake_count = snakes.size();
    return report;
}

// ---------------------------------------------------------------------------
// Exhaustive exact intersection of two segment sets.

namespace {

struct SegScratch {
    mpq_class ax, ay, bx, by;
    Dyadic lox, hix, loy, hiy;
};

SegScratch scratch_of(const Segment& s) {
    SegScratch out;
    out.ax = s.a.x.to_rational();
    out.ay = s.a.y.to_rational();
    out.bx = s.b.x.to_rational();
    out.by = s.b.y.to_rational();
    out.lox = std::min(s.a.x, s.b.x);
    out.hix = std::max(s.a.x, s.b.x);
    out.loy = std::min(s.a.y, s.b.y);
    out.hiy = std::max(s.a.y, s.b.y);
    return out;
}

void intersect_pair(const SegScratch& f, const SegScratch& g, IntersectionSummary& out) {
    mpq_class d1x = f.bx - f.ax, d1y = f.by - f.ay;
    mpq_class d2x = g.bx - g.ax, d2y = g.by - g.ay;
    mpq_class denom = d1x * d2y - d1y * d2x;
    mpq_class rx = g.ax - f.ax, ry = g.ay - f.ay;
    if (sgn(denom) != 0) {
        mpq_class t = (rx * d2y - ry * d2x) / denom;
        mpq_class u = (rx * d1y - ry * d1x) / denom;
        if (sgn(t) < 0 || cmp(t, 1) > 0 || sgn(u) < 0 || cmp(u, 1) > 0) return;
        out.points.push_back(RationalPoint{f.ax + t * d1x, f.ay + t * d1y});
        return;
    }
    // Parallel: collinear only when the offset is parallel too.
    if (sgn(rx * d1y - ry * d1x) != 0) return;
    // Overlap extent along the dominant axis.
    bool use_x = sgn(d1x) != 0;
    mpq_class flo = use_x ? std::min(f.ax, f.bx) : std::min(f.ay, f.by);
    mpq_class fhi = use_x ? std::max(f.ax, f.bx) : std::max(f.ay, f.by);
    mpq_class glo = use_x ? std::min(g.ax, g.bx) : std::min(g.ay, g.by);
    mpq_class ghi = use_x ? std::max(g.ax, g.bx) : std::max(g.ay, g.by);
    mpq_class lo = std::max(flo, glo);
    mpq_class hi = std::min(fhi, ghi);
    int c = cmp(lo, hi);
    if (c > 0) return;
    if (c < 0) {
        out.has_shared_segment = true;
        return;
    }
    // Single touching point.
    mpq_class t = use_x ? (lo - f.ax) / d1x : (lo - f.ay) / d1y;
    out.points.push_back(RationalPoint{f.ax + t * d1x, f.ay + t * d1y});
}

}  // namespace

IntersectionSummary intersect_all(const CurveApprox& af, const CurveApprox& ag) {
    std::vector<SegScratch> fs, gs;
    fs.reserve(af.segments.size());
    gs.reserve(ag.segments.size());
    for (const Segment& s : af.segments) fs.push_back(scratch_of(s));
    for (const Segment& s : ag.segments) gs.push_back(scratch_of(s));

    IntersectionSummary out;
    for (const SegScratch& f : fs) {
        for (const SegScratch& g : gs) {
            if (f.hix < g.lox || g.hix < f.lox || f.hiy < g.loy || g.hiy < f.loy) continue;
            intersect_pair(f, g, out);
        }
    }
    std::sort(out.points.begin(), out.points.end());
    out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
    return out;
}

}  // namespace curvepair
