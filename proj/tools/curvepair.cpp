// Command-line front end: approx (full pipeline), verify (oracle only),
// render (JSON report -> SVG).
#include "curvepair/pipeline.hpp"
#include "curvepair/svg.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

using curvepair::ordered_json;

int exit_code_for(const std::string& code) {
    if (code == "ParseError" || code == "InvalidRegion" || code == "InvalidConfig") return 2;
    if (code == "MaxDepthExceeded") return 3;
    if (code == "OpenSnake" || code == "ClosedSnakeLoop") return 4;
    if (code == "Inconclusive") return 5;
    return 6;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw curvepair::Error("IoError", "output", "cannot open " + path);
    out << content;
}

// PATH or PATH.{json,svg} targets for --format both.
std::string with_extension(const std::string& path, const std::string& ext) {
    auto dot = path.find_last_of('.');
    auto slash = path.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
        return path.substr(0, dot) + ext;
    return path + ext;
}

struct RegionArgs {
    std::vector<std::int64_t> values;  // x0 y0 x1 y1
    curvepair::RectRegion rect() const {
        return curvepair::RectRegion{values[0], values[1], values[2], values[3]};
    }
};

int run_approx(const curvepair::RunConfig& config, const std::string& format,
               const std::string& out_path) {
    curvepair::RunOutput output = curvepair::run(config);
    ordered_json report = curvepair::report_json(output);
    std::string json_text = report.dump(2) + "\n";

    if (format == "json") {
        if (out_path.empty())
            std::cout << json_text;
        else
            write_file(out_path, json_text);
        return 0;
    }
    std::string svg_text = curvepair::render_svg(report);
    if (format == "svg") {
        if (out_path.empty())
            std::cout << svg_text;
        else
            write_file(out_path, svg_text);
        return 0;
    }
    if (out_path.empty())
        throw curvepair::Error("InvalidConfig", "output", "--format both requires --out");
    write_file(with_extension(out_path, ".json"), json_text);
    write_file(with_extension(out_path, ".svg"), svg_text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified piecewise-linear approximation of a pair of plane curves"};
    app.require_subcommand(1);

    std::string f_text, g_text, format = "json", out_path, render_input;
    RegionArgs region;
    int max_depth = 24, min_depth = 0, grid_depth = 6;
    bool emit_partition = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--f", f_text, "first polynomial, e.g. \"x^2 + y^2 - 4\"")->required();
        cmd->add_option("--g", g_text, "second polynomial")->required();
        cmd->add_option("--region", region.values, "integer corners x0 y0 x1 y1")
            ->expected(4)
            ->required();
    };

    CLI::App* approx = app.add_subcommand("approx", "run the full approximation pipeline");
    add_common(approx);
    approx->add_option("--max-depth", max_depth, "subdivision depth cap")->capture_default_str();
    approx->add_option("--min-depth", min_depth, "uniform pre-subdivision depth")
        ->capture_default_str();
    approx->add_option("--format", format, "json | svg | both")
        ->check(CLI::IsMember({"json", "svg", "both"}))
        ->capture_default_str();
    approx->add_flag("--emit-partition", emit_partition, "include the leaf boxes in the report");
    approx->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* verify = app.add_subcommand("verify", "certify intersections with the oracle only");
    add_common(verify);
    verify->add_option("--grid-depth", grid_depth, "oracle grid depth")->capture_default_str();
    verify->add_option("--out", out_path, "output path (default stdout)");

    CLI::App* render = app.add_subcommand("render", "turn a JSON report into an SVG");
    render->add_option("input", render_input, "report JSON path")->required();
    render->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (approx->parsed()) {
            curvepair::RunConfig config{f_text,    g_text,    region.rect(),
                                        max_depth, min_depth, emit_partition};
            return run_approx(config, format, out_path);
        }
        if (verify->parsed()) {
            ordered_json doc = curvepair::verify_json(f_text, g_text, region.rect(), grid_depth);
            std::string text = doc.dump(2) + "\n";
            if (out_path.empty())
                std::cout << text;
            else
                write_file(out_path, text);
            return 0;
        }
        std::ifstream in(render_input);
        if (!in) throw curvepair::Error("IoError", "render", "cannot open " + render_input);
        ordered_json report = ordered_json::parse(in);
        std::string svg_text = curvepair::render_svg(report);
        if (out_path.empty())
            std::cout << svg_text;
        else
            write_file(out_path, svg_text);
        return 0;
    } catch (const curvepair::ParseError& e) {
        std::cout << curvepair::error_json(e).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const curvepair::Error& e) {
        std::cout << curvepair::error_json(e).dump(2) << "\n";
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 6;
    }
}
