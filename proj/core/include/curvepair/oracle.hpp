// Independent ground truth for tests and the `verify` subcommand: certified
// root isolation for the system (f, g) on a uniform grid with a
// Krawczyk-operator existence/uniqueness test, plus smoothness and
// transversality validation of inputs. Entirely disjoint from the
// subdivision pipeline's acceptance machinery.
#pragma once

#include "curvepair/predicates.hpp"

#include <vector>

namespace curvepair {

struct CertifiedRoot {
    IBox box;               // the operator maps this box strictly into itself
    Point midpoint_estimate;
};

struct OracleOptions {
    int split_cap = 12;      // recursive splits per grid cell
    int shrink_rounds = 40;  // post-certification contraction passes
};

// Grid cells (inflated so gridline roots fall strictly inside some cell) are
// discarded when either curve's range excludes zero, otherwise decided by the
// Krawczyk test with recursive splitting. Throws Error("Inconclusive") when
// any cell stays undecided at the cap; never silently passes.
std::vector<CertifiedRoot> certify_intersections(const CurvePair& pair, const RectRegion& region,
                                                 int grid_depth,
                                                 const OracleOptions& options = {});

// True iff the oracle certifies both curves smooth in the region and the
// gradients non-parallel at every certified intersection. False only on a
// certified violation (an exact singular or tangential point); otherwise
// inconclusive cases throw.
bool check_smooth_transversal(const CurvePair& pair, const RectRegion& region, int grid_depth,
                              const OracleOptions& options = {});

}  // namespace curvepair
