// kisslab command line tool: shape classification, family validation,
// touching-family search, proof-chain audit, and SVG rendering.
//
// Machine-readable JSON goes to stdout; diagnostics go to stderr.
// Exit codes: 0 = valid/pass, 1 = invalid/fail/error, 2 = usage error.

#include "CLI11.hpp"

#include "kisslab/documents.hpp"
#include "kisslab/errors.hpp"
#include "kisslab/shape_analysis.hpp"
#include "kisslab/svg.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace kisslab;

// Arguments that carry JSON may be inline text or a file path; inline input
// is recognized by its leading brace or bracket.
std::string read_text_or_inline(const std::string& arg) {
    const std::size_t first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return arg;
    std::ifstream in(arg, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int default_threads() {
    if (const char* env = std::getenv("KISSLAB_THREADS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

// Hull of every defining point of the shape; segment stars use center and
// arm tips.
ConvexPolygon shape_hull(const ShapeBase& shape) {
    if (const auto* poly = std::get_if<SimplePolygon>(&shape))
        return convex_hull(poly->vertices());
    const auto& star = std::get<SegmentStar>(shape);
    std::vector<Point> pts{star.center()};
    for (const Point& e : star.endpoints()) pts.push_back(e);
    return convex_hull(pts);
}

int run_classify(const std::string& shape_arg) {
    emit(classify_document(parse_shape_file(read_text_or_inline(shape_arg))));
    return 0;
}

int run_validate(const std::string& shape_arg, const std::string& vectors_arg) {
    const ShapeFile file = parse_shape_file(read_text_or_inline(shape_arg));
    const std::vector<Vector> vectors = parse_vector_list(read_text_or_inline(vectors_arg));
    const ValidationReport report = validate(TranslateFamily(file.shape, vectors));
    emit(validation_json(report));
    return report.valid ? 0 : 1;
}

int run_search(const std::string& shape_arg, const SearchParams& params) {
    emit(search_document(parse_shape_file(read_text_or_inline(shape_arg)), params));
    return 0;
}

int run_audit(const std::string& shape_arg, const std::string& vectors_arg,
              const std::optional<std::string>& center_arg) {
    const ShapeFile file = parse_shape_file(read_text_or_inline(shape_arg));
    const std::vector<Vector> vectors = parse_vector_list(read_text_or_inline(vectors_arg));
    std::optional<Point> center;
    if (center_arg) center = parse_point_text(*center_arg);
    const AuditOutcome outcome = audit_document(file, vectors, center);
    emit(outcome.document);
    return outcome.passed ? 0 : 1;
}

int run_render(const std::string& shape_arg, const std::string& vectors_arg,
               const std::string& out_path, bool allow_invalid, bool draw_vectors) {
    const ShapeFile file = parse_shape_file(read_text_or_inline(shape_arg));
    const std::vector<Vector> vectors = parse_vector_list(read_text_or_inline(vectors_arg));
    const ValidationReport report = validate(TranslateFamily(file.shape, vectors));

    RenderOptions options;
    options.draw_vectors = draw_vectors;
    if (!report.valid) {
        if (!allow_invalid)
            throw ValidationError("family does not validate; pass --allow-invalid to render "
                                  "violations");
        for (const Violation& v : report.violations) {
            options.violating.push_back(v.i);
            if (v.j) options.violating.push_back(*v.j);
        }
    }

    const std::string svg = render_svg(file.shape, vectors, options);
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + out_path);
    out << svg;
    std::cerr << "wrote " << out_path << "\n";
    return 0;
}

int run_symmetral(const std::string& shape_arg) {
    const ShapeFile file = parse_shape_file(read_text_or_inline(shape_arg));
    const ConvexPolygon sym = central_symmetral(shape_hull(file.shape));
    Json doc = Json::object();
    doc["vertices"] = ring_json(sym.vertices());
    emit(doc);
    return 0;
}

int run_relnorm(const std::string& shape_arg, const std::string& p_arg,
                const std::string& q_arg) {
    const ShapeFile file = parse_shape_file(read_text_or_inline(shape_arg));
    const Point p = parse_point_text(p_arg);
    const Point q = parse_point_text(q_arg);
    const Scalar d = relative_distance(shape_hull(file.shape), p, q);
    Json doc = Json::object();
    doc["distance"] = scalar_text(d);
    emit(doc);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact geometry of touching translate families"};
    app.require_subcommand(1);

    std::string shape_arg, vectors_arg, out_path, p_arg, q_arg;
    std::optional<std::string> center_arg;
    bool allow_invalid = false, draw_vectors = false;
    SearchParams params;
    params.threads = default_threads();

    auto* classify = app.add_subcommand("classify", "pockets, kernel, and neighbour bounds");
    classify->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();

    auto* validate_cmd = app.add_subcommand("validate", "check a translate family");
    validate_cmd->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();
    validate_cmd->add_option("vectors", vectors_arg, "vector list JSON (file or inline)")
        ->required();

    auto* search = app.add_subcommand("search", "search for a maximal touching family");
    search->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();
    search->add_option("--samples", params.samples_per_family, "samples per contact family");
    search->add_option("--seed", params.seed, "exploration-order seed (0 = natural order)");
    search->add_option("--beam", params.beam_width, "branching cap per search node");
    search->add_option("--nodes", params.max_backtrack_nodes, "backtracking node budget");
    search->add_option("--threads", params.threads, "worker threads for the pairwise phase");

    auto* audit = app.add_subcommand("audit", "re-check the bound proof chain on a family");
    audit->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();
    audit->add_option("vectors", vectors_arg, "vector list JSON (file or inline)")->required();
    std::string center_text;
    auto* center_opt = audit->add_option("--center", center_text, "star center as \"x,y\"");

    auto* render = app.add_subcommand("render", "draw the configuration as SVG");
    render->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();
    render->add_option("vectors", vectors_arg, "vector list JSON (file or inline)")->required();
    render->add_option("-o,--output", out_path, "output SVG path")->required();
    render->add_flag("--allow-invalid", allow_invalid, "render violations instead of failing");
    render->add_flag("--draw-vectors", draw_vectors, "draw the translation vectors");

    auto* symmetral = app.add_subcommand("symmetral", "central symmetral of the shape's hull");
    symmetral->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();

    auto* relnorm = app.add_subcommand("relnorm", "relative distance in the shape's hull norm");
    relnorm->add_option("shape", shape_arg, "shape JSON (file or inline)")->required();
    relnorm->add_option("p", p_arg, "first point as \"x,y\"")->required();
    relnorm->add_option("q", q_arg, "second point as \"x,y\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*classify) return run_classify(shape_arg);
        if (*validate_cmd) return run_validate(shape_arg, vectors_arg);
        if (*search) return run_search(shape_arg, params);
        if (*audit) {
            if (center_opt->count() > 0) center_arg = center_text;
            return run_audit(shape_arg, vectors_arg, center_arg);
        }
        if (*render)
            return run_render(shape_arg, vectors_arg, out_path, allow_invalid, draw_vectors);
        if (*symmetral) return run_symmetral(shape_arg);
        if (*relnorm) return run_relnorm(shape_arg, p_arg, q_arg);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
