// The accept/reject subdivision loop, 2:1 balancing, and the final
// neighborhood re-verification pass for boxes accepted by the cross test.
#pragma once

#include "curvepair/partition.hpp"
#include "curvepair/predicates.hpp"

namespace curvepair {

struct SubdivisionLimits {
    int max_depth = 24;       // hitting it raises MaxDepthExceeded, never accepts
    int min_depth = 0;        // uniform pre-subdivision before the rules apply
    int rule4_rounds = 64;    // fixpoint cap for verify_rule4
    int snake_retries = 32;   // head re-subdivision attempts on orientation ties
};

// Breadth-first accept/reject loop. Every returned leaf is accepted by one of
// the four rules; rule-4 cross tests run on the hull of the two-fold
// neighborhood in the partition as it stood when the box was popped.
Partition subdivide(const CurvePair& pair, SquareRegion region, const SubdivisionLimits& limits);

// Refines until edge-adjacent leaves differ in depth by at most one. New
// leaves inherit the parent rule; inherited rules are re-checked (the
// predicates are inclusion-monotone, so a failure is an internal error).
void balance(Partition& part, const CurvePair& pair, const SubdivisionLimits& limits);

// Re-evaluates the cross test for every rule-4 leaf against its neighborhood
// hull in the final partition; failing leaves are re-subdivided and the
// partition re-balanced, to a fixpoint.
void verify_rule4(Partition& part, const CurvePair& pair, const SubdivisionLimits& limits);

// Splits one leaf and re-runs the accept loop on the pieces (used by
// verify_rule4 and by snake-orientation tie handling).
void resubdivide_leaf(Partition& part, const CurvePair& pair, const BoxKey& leaf,
                      const SubdivisionLimits& limits, const std::string& stage);

// Internal helper shared by subdivide/resubdivide: the rule, if any, under
// which the box is accepted right now.
AcceptRule try_accept(const Partition& part, const CurvePair& pair, const BoxKey& key);

}  // namespace curvepair
