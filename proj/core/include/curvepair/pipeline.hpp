// End-to-end orchestration: parse, rescale a rectangular region onto a
// square, subdivide/balance/verify, approximate both curves, resolve snakes,
// and report crossings in the original coordinates.
#pragma once

#include "curvepair/oracle.hpp"
#include "curvepair/pairing.hpp"
#include "curvepair/subdivision.hpp"

#include <json.hpp>

#include <string>

namespace curvepair {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string f_text;
    std::string g_text;
    RectRegion region;
    int max_depth = 24;
    int min_depth = 0;  // uniform pre-subdivision depth
    bool emit_partition = false;
};

struct RunOutput {
    RunConfig config;
    CurvePair pair;       // polynomials after rescaling; the pipeline inputs
    SquareRegion square;  // subdivision domain
    Dyadic scale_x;       // square -> original scale factors (dyadic, exact)
    Dyadic scale_y;
    Partition partition;
    CurveApprox approx_f;  // pre-resolution approximations, square coordinates
    CurveApprox approx_g;
    CrossingReport report;  // resolved approximations and crossings, square coordinates

    bool rescaled() const { return scale_x != Dyadic(1) || scale_y != Dyadic(1); }
    Point to_original(const Point& p) const;
    RationalPoint to_original(const RationalPoint& p) const;
    IBox to_original(const IBox& b) const;
};

// Runs the full pipeline; throws ParseError / Error on failure. Snake
// orientation ties are retried with subdivided heads up to the configured cap.
RunOutput run(const RunConfig& config);

// The versioned machine-readable report in original coordinates.
ordered_json report_json(const RunOutput& output);

// Oracle run for the verify subcommand.
ordered_json verify_json(const std::string& f_text, const std::string& g_text,
                         const RectRegion& region, int grid_depth);

// Machine-readable error object mirrored on failures.
ordered_json error_json(const Error& e);
ordered_json error_json(const ParseError& e);

// Stage logging controlled by the CURVEPAIR_LOG environment variable.
bool log_enabled();
void log_stage(const std::string& stage, const std::string& message);

// Helpers shared with the render path.
ordered_json coordinate_json(const Dyadic& value);
Dyadic coordinate_from_json(const ordered_json& value);

}  // namespace curvepair
