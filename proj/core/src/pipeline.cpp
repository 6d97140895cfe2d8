#include "curvepair/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>

namespace curvepair {

bool log_enabled() {
    static const bool enabled = std::getenv("CURVEPAIR_LOG") != nullptr;
    return enabled;
}

void log_stage(const std::string& stage, const std::string& message) {
    if (log_enabled()) std::cerr << "[" << stage << "] " << message << "\n";
}

namespace {

std::int64_t next_power_of_two(std::int64_t v) {
    std::int64_t p = 1;
    while (p < v) p <<= 1;
    return p;
}

}  // namespace

Point RunOutput::to_original(const Point& p) const {
    Dyadic ox = Dyadic::from_int(config.region.x0);
    Dyadic oy = Dyadic::from_int(config.region.y0);
    return Point{ox + (p.x - Dyadic::from_int(square.x0)) * scale_x,
                 oy + (p.y - Dyadic::from_int(square.y0)) * scale_y};
}

RationalPoint RunOutput::to_original(const RationalPoint& p) const {
    mpq_class ox(config.region.x0), oy(config.region.y0);
    return RationalPoint{
        ox + (p.x - mpq_class(square.x0)) * scale_x.to_rational(),
        oy + (p.y - mpq_class(square.y0)) * scale_y.to_rational()};
}

IBox RunOutput::to_original(const IBox& b) const {
    Point lo = to_original(Point{b.x.lo, b.y.lo});
    Point hi = to_original(Point{b.x.hi, b.y.hi});
    return IBox{Interval(lo.x, hi.x), Interval(lo.y, hi.y)};
}

RunOutput run(const RunConfig& config) {
    if (config.region.x1 <= config.region.x0 || config.region.y1 <= config.region.y0)
        throw Error("InvalidRegion", "configure", "region must satisfy x0 < x1 and y0 < y1");
    if (config.max_depth < 1)
        throw Error("InvalidConfig", "configure", "max depth must be at least 1");

    log_stage("parse", config.f_text + " ; " + config.g_text);
    BivariatePolynomial f = parse_polynomial(config.f_text);
    BivariatePolynomial g = parse_polynomial(config.g_text);

    // A non-square region is mapped onto a square with a power-of-two side so
    // the inverse map is exact on dyadic coordinates.
    SquareRegion square{config.region.x0, config.region.y0,
                        std::max(config.region.width(), config.region.height())};
    Dyadic scale_x(1), scale_y(1);
    if (!config.region.is_square()) {
        square.size = next_power_of_two(std::max(config.region.width(), config.region.height()));
        RectRegion sq_rect = square.to_rect();
        f = rescale_to_square(f, config.region, sq_rect);
        g = rescale_to_square(g, config.region, sq_rect);
        std::int64_t log2_size = 0;
        while ((std::int64_t{1} << log2_size) < square.size) ++log2_size;
        scale_x = Dyadic(mpz_class(config.region.width()), -log2_size);
        scale_y = Dyadic(mpz_class(config.region.height()), -log2_size);
    }

    CurvePair pair(std::move(f), std::move(g));
    SubdivisionLimits limits;
    limits.max_depth = config.max_depth;
    limits.min_depth = config.min_depth;

    auto t0 = std::chrono::steady_clock::now();
    Partition part = subdivide(pair, square, limits);
    log_stage("subdivide", std::to_string(part.leaf_count()) + " leaves, depth " +
                               std::to_string(part.max_depth_used()));
    balance(part, pair, limits);
    log_stage("balance", std::to_string(part.leaf_count()) + " leaves");
    verify_rule4(part, pair, limits);
    log_stage("verify_rule4", std::to_string(part.leaf_count()) + " leaves, depth " +
                                  std::to_string(part.max_depth_used()));

    for (int attempt = 0;; ++attempt) {
        CurveApprox af = assemble(pair.f, part);
        CurveApprox ag = assemble(pair.g, part);
        try {
            CrossingReport report = build_report(af, ag, part);
            auto t1 = std::chrono::steady_clock::now();
            log_stage("report",
                      std::to_string(report.total_crossings()) + " crossings, " +
                          std::to_string(report.snake_count) + " snakes, " +
                          std::to_string(std::chrono::duration_cast<std::chrono::milliseconds>(
                                             t1 - t0)
                                             .count()) +
                          " ms");
            return RunOutput{config,
                             std::move(pair),
                             square,
                             scale_x,
                             scale_y,
                             std::move(part),
                             std::move(af),
                             std::move(ag),
                             std::move(report)};
        } catch (const SnakeTieError& tie) {
            if (attempt >= limits.snake_retries)
                throw Error("IterationCapExceeded", "pairing",
                            "snake orientation ties persist after " +
                                std::to_string(limits.snake_retries) + " head subdivisions");
            log_stage("pairing", "orientation tie; subdividing heads " +
                                     to_string(tie.heads()[0]) + " " + to_string(tie.heads()[1]));
            for (const BoxKey& head : tie.heads())
                if (part.is_leaf(head)) resubdivide_leaf(part, pair, head, limits, "pairing");
            balance(part, pair, limits);
            verify_rule4(part, pair, limits);
        }
    }
}

// ---------------------------------------------------------------------------
// JSON report

ordered_json coordinate_json(const Dyadic& value) {
    return ordered_json::array({value.str(), value.to_double()});
}

Dyadic coordinate_from_json(const ordered_json& value) {
    if (value.is_array() && !value.empty() && value[0].is_string())
        return Dyadic::parse(value[0].get<std::string>());
    throw std::invalid_argument("malformed coordinate in report");
}

namespace {

ordered_json point_json(const Point& p) {
    return ordered_json::array({coordinate_json(p.x), coordinate_json(p.y)});
}

ordered_json rational_point_json(const RationalPoint& p) {
    // Informational dyadic estimate; the hull is the certificate.
    Point approx = p.dyadic_floor(48);
    return ordered_json::array({coordinate_json(approx.x), coordinate_json(approx.y)});
}

ordered_json hull_json(const IBox& b) {
    return ordered_json::array({coordinate_json(b.x.lo), coordinate_json(b.y.lo),
                                coordinate_json(b.x.hi), coordinate_json(b.y.hi)});
}

ordered_json curve_json(const RunOutput& out, const CurveApprox& approx) {
    ordered_json chains = ordered_json::array();
    for (const auto& chain : polylines(approx)) {
        ordered_json points = ordered_json::array();
        for (const Point& p : chain) points.push_back(point_json(out.to_original(p)));
        chains.push_back(std::move(points));
    }
    return chains;
}

}  // namespace

ordered_json report_json(const RunOutput& out) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["region"] = {out.config.region.x0, out.config.region.y0, out.config.region.x1,
                     out.config.region.y1};
    if (out.config.emit_partition) {
        ordered_json boxes = ordered_json::array();
        for (const auto& [key, rule] : out.partition.leaves()) {
            ordered_json box;
            box["depth"] = key.depth;
            box["ix"] = key.ix;
            box["iy"] = key.iy;
            box["rule"] = to_string(rule);
            boxes.push_back(std::move(box));
        }
        doc["boxes"] = std::move(boxes);
    }
    doc["curves"] = {{"f", curve_json(out, out.report.resolved_f)},
                     {"g", curve_json(out, out.report.resolved_g)}};

    ordered_json crossings = ordered_json::array();
    for (const TransversalCrossing& c : out.report.transversal) {
        ordered_json entry;
        entry["type"] = "transversal";
        entry["hull"] = hull_json(out.to_original(c.isolating_hull));
        entry["point"] = rational_point_json(out.to_original(c.point));
        crossings.push_back(std::move(entry));
    }
    for (const SnakeCrossing& c : out.report.snake_crossings) {
        ordered_json entry;
        entry["type"] = "snake";
        entry["hull"] = hull_json(out.to_original(c.isolating_hull));
        entry["point"] = point_json(out.to_original(c.point));
        crossings.push_back(std::move(entry));
    }
    doc["crossings"] = std::move(crossings);

    doc["stats"] = {{"leaves", out.partition.leaf_count()},
                    {"max_depth_used", out.partition.max_depth_used()},
                    {"snakes", out.report.snake_count}};
    return doc;
}

ordered_json verify_json(const std::string& f_text, const std::string& g_text,
                         const RectRegion& region, int grid_depth) {
    CurvePair pair(parse_polynomial(f_text), parse_polynomial(g_text));
    ordered_json doc;
    doc["schema"] = 1;
    doc["region"] = {region.x0, region.y0, region.x1, region.y1};
    bool smooth = check_smooth_transversal(pair, region, grid_depth);
    doc["smooth_transversal"] = smooth;
    ordered_json roots = ordered_json::array();
    if (smooth) {
        for (const CertifiedRoot& r : certify_intersections(pair, region, grid_depth)) {
            ordered_json entry;
            entry["box"] = hull_json(r.box);
            entry["point"] = point_json(r.midpoint_estimate);
            roots.push_back(std::move(entry));
        }
    }
    doc["roots"] = std::move(roots);
    return doc;
}

ordered_json error_json(const Error& e) {
    ordered_json doc;
    doc["error"] = {{"code", e.code()}, {"stage", e.stage()}, {"message", e.what()}};
    if (e.box()) {
        doc["error"]["box"] = {{"depth", e.box()->depth}, {"ix", e.box()->ix},
                               {"iy", e.box()->iy}};
    }
    return doc;
}

ordered_json error_json(const ParseError& e) {
    ordered_json doc;
    doc["error"] = {{"code", "ParseError"}, {"stage", "parse"}, {"message", e.what()},
                    {"position", e.position()}};
    return doc;
}

}  // namespace curvepair
