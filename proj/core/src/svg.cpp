#include "curvepair/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace curvepair {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 20.0;

struct Mapper {
    double x0, y0, x1, y1, scale;

    double sx(double x) const { return kMargin + (x - x0) * scale; }
    double sy(double y) const { return kMargin + (y1 - y) * scale; }  // flip y
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

double coord_float(const nlohmann::ordered_json& coordinate) {
    // Coordinates are [dyadic-string, float]; prefer the float for drawing.
    if (coordinate.is_array() && coordinate.size() == 2) return coordinate[1].get<double>();
    return coordinate.get<double>();
}

void draw_rect(std::ostringstream& out, const Mapper& m, double x0, double y0, double x1,
               double y1, const std::string& style) {
    out << "  <rect x=\"" << fmt(m.sx(x0)) << "\" y=\"" << fmt(m.sy(y1)) << "\" width=\""
        << fmt((x1 - x0) * m.scale) << "\" height=\"" << fmt((y1 - y0) * m.scale) << "\" "
        << style << "/>\n";
}

}  // namespace

std::string render_svg(const nlohmann::ordered_json& report) {
    if (!report.contains("region")) throw std::invalid_argument("report lacks a region");
    const auto& region = report["region"];
    Mapper m;
    m.x0 = region[0].get<double>();
    m.y0 = region[1].get<double>();
    m.x1 = region[2].get<double>();
    m.y1 = region[3].get<double>();
    m.scale = (kCanvas - 2 * kMargin) / std::max(m.x1 - m.x0, m.y1 - m.y0);

    double width = 2 * kMargin + (m.x1 - m.x0) * m.scale;
    double height = 2 * kMargin + (m.y1 - m.y0) * m.scale;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
        << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " " << fmt(height) << "\">\n";
    out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    if (report.contains("boxes")) {
        double wx = m.x1 - m.x0;
        double wy = m.y1 - m.y0;
        for (const auto& box : report["boxes"]) {
            double n = std::pow(2.0, box["depth"].get<int>());
            double ix = box["ix"].get<double>();
            double iy = box["iy"].get<double>();
            draw_rect(out, m, m.x0 + ix * wx / n, m.y0 + iy * wy / n, m.x0 + (ix + 1) * wx / n,
                      m.y0 + (iy + 1) * wy / n,
                      "fill=\"none\" stroke=\"#dddddd\" stroke-width=\"0.6\"");
        }
    }

    draw_rect(out, m, m.x0, m.y0, m.x1, m.y1,
              "fill=\"none\" stroke=\"#888888\" stroke-width=\"1.2\"");

    auto draw_curve = [&](const nlohmann::ordered_json& chains, const char* color) {
        for (const auto& chain : chains) {
            out << "  <polyline fill=\"none\" stroke=\"" << color
                << "\" stroke-width=\"3\" stroke-linejoin=\"round\" points=\"";
            for (const auto& pt : chain)
                out << fmt(m.sx(coord_float(pt[0]))) << "," << fmt(m.sy(coord_float(pt[1])))
                    << " ";
            out << "\"/>\n";
        }
    };
    if (report.contains("curves")) {
        draw_curve(report["curves"]["f"], "#cc3344");
        draw_curve(report["curves"]["g"], "#3366cc");
    }

    if (report.contains("crossings")) {
        for (const auto& crossing : report["crossings"]) {
            const auto& hull = crossing["hull"];
            bool snake = crossing["type"].get<std::string>() == "snake";
            draw_rect(out, m, coord_float(hull[0]), coord_float(hull[1]), coord_float(hull[2]),
                      coord_float(hull[3]),
                      snake ? std::string("fill=\"none\" stroke=\"#11aa88\" stroke-width=\"1.5\" "
                                          "stroke-dasharray=\"6,3\"")
                            : std::string("fill=\"none\" stroke=\"#ee8800\" stroke-width=\"1.5\" "
                                          "stroke-dasharray=\"6,3\""));
            const auto& pt = crossing["point"];
            out << "  <circle cx=\"" << fmt(m.sx(coord_float(pt[0]))) << "\" cy=\""
                << fmt(m.sy(coord_float(pt[1]))) << "\" r=\"4\" fill=\"#222222\"/>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace curvepair
