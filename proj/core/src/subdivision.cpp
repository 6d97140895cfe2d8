#include "curvepair/subdivision.hpp"

#include <deque>
#include <optional>

namespace curvepair {

AcceptRule try_accept(const Partition& part, const CurvePair& pair, const BoxKey& key) {
    IBox box = part.box_geometry(key);
    bool c0f = c0(pair.f, box).value;
    bool c0g = c0(pair.g, box).value;
    if (c0f && c0g) return AcceptRule::C0C0;

    std::optional<bool> c1f, c1g;
    auto c1_of = [&](CurveId id) {
        auto& slot = id == CurveId::F ? c1f : c1g;
        if (!slot) slot = c1(pair, id, box).value;
        return *slot;
    };

    if (c0f && c1_of(CurveId::G)) return AcceptRule::C0C1;
    if (c0g && c1_of(CurveId::F)) return AcceptRule::C1C0;
    if (c1_of(CurveId::F) && c1_of(CurveId::G)) {
        IBox hull = neighborhood(part, key, 2).hull;
        if (c1_cross(pair, hull).value)
            return part.touches_region_boundary(key) ? AcceptRule::boundary : AcceptRule::C1C1X;
    }
    return AcceptRule::unset;
}

namespace {

void accept_or_split(Partition& part, const CurvePair& pair, std::deque<BoxKey>& queue,
                     const SubdivisionLimits& limits, const std::string& stage) {
    while (!queue.empty()) {
        BoxKey b = queue.front();
        queue.pop_front();
        if (b.depth >= limits.min_depth) {
            AcceptRule rule = try_accept(part, pair, b);
            if (rule != AcceptRule::unset) {
                part.set_rule(b, rule);
                continue;
            }
        }
        if (b.depth >= limits.max_depth) throw max_depth_exceeded(stage, b);
        for (const BoxKey& child : part.split(b)) queue.push_back(child);
    }
}

// Rules 1-3 re-checked on a child box; rule-4 cross checks are deferred to
// verify_rule4, whose fixpoint is authoritative for final neighborhoods.
void assert_inherited_rule(const Partition& part, const CurvePair& pair, const BoxKey& child,
                           AcceptRule rule) {
    IBox box = part.box_geometry(child);
    bool ok = true;
    switch (rule) {
        case AcceptRule::C0C0: ok = c0(pair.f, box).value && c0(pair.g, box).value; break;
        case AcceptRule::C0C1: ok = c0(pair.f, box).value && c1(pair, CurveId::G, box).value; break;
        case AcceptRule::C1C0: ok = c0(pair.g, box).value && c1(pair, CurveId::F, box).value; break;
        case AcceptRule::C1C1X:
        case AcceptRule::boundary:
            ok = c1(pair, CurveId::F, box).value && c1(pair, CurveId::G, box).value;
            break;
        case AcceptRule::unset: break;
    }
    if (!ok)
        throw Error("InternalError", "balance",
                    "inclusion monotonicity violated at " + to_string(child), child);
}

std::array<BoxKey, 4> split_inheriting(Partition& part, const CurvePair& pair, const BoxKey& leaf) {
    AcceptRule parent_rule = part.rule(leaf);
    auto kids = part.split(leaf, parent_rule);
    for (const BoxKey& child : kids) {
        if (parent_rule == AcceptRule::boundary && !part.touches_region_boundary(child))
            part.set_rule(child, AcceptRule::C1C1X);
        if (parent_rule != AcceptRule::unset)
            assert_inherited_rule(part, pair, child, part.rule(child));
    }
    return kids;
}

}  // namespace

Partition subdivide(const CurvePair& pair, SquareRegion region, const SubdivisionLimits& limits) {
    Partition part(region);
    std::deque<BoxKey> queue{BoxKey{0, 0, 0}};
    accept_or_split(part, pair, queue, limits, "subdivide");
    return part;
}

void balance(Partition& part, const CurvePair& pair, const SubdivisionLimits& limits) {
    (void)limits;  // balancing never exceeds the current maximum depth
    std::deque<BoxKey> pending;
    for (const auto& [key, rule] : part.leaves()) pending.push_back(key);
    while (!pending.empty()) {
        BoxKey b = pending.front();
        pending.pop_front();
        if (!part.is_leaf(b)) continue;
        bool needs_split = false;
        for (Side s : all_sides) {
            for (const BoxKey& n : part.neighbors(b, s)) {
                if (n.depth > b.depth + 1) {
                    needs_split = true;
                    break;
                }
            }
            if (needs_split) break;
        }
        if (!needs_split) continue;
        // Splitting b can unbalance its coarser neighbors; requeue them.
        for (const BoxKey& n : part.all_neighbors(b))
            if (n.depth < b.depth) pending.push_back(n);
        for (const BoxKey& child : split_inheriting(part, pair, b)) pending.push_back(child);
    }
}

void resubdivide_leaf(Partition& part, const CurvePair& pair, const BoxKey& leaf,
                      const SubdivisionLimits& limits, const std::string& stage) {
    if (leaf.depth >= limits.max_depth) throw max_depth_exceeded(stage, leaf);
    std::deque<BoxKey> queue;
    for (const BoxKey& child : part.split(leaf)) queue.push_back(child);
    accept_or_split(part, pair, queue, limits, stage);
}

void verify_rule4(Partition& part, const CurvePair& pair, const SubdivisionLimits& limits) {
    for (int round = 0; round < limits.rule4_rounds; ++round) {
        std::vector<BoxKey> failures;
        for (const auto& [key, rule] : part.leaves()) {
            if (rule != AcceptRule::C1C1X && rule != AcceptRule::boundary) continue;
            IBox hull = neighborhood(part, key, 2).hull;
            if (!c1_cross(pair, hull).value) failures.push_back(key);
        }
        if (failures.empty()) return;
        for (const BoxKey& b : failures)
            if (part.is_leaf(b)) resubdivide_leaf(part, pair, b, limits, "verify_rule4");
        balance(part, pair, limits);
    }
    throw iteration_cap_exceeded("verify_rule4", limits.rule4_rounds);
}

}  // namespace curvepair
