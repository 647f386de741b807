#include "tiledim/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "tiledim/errors.hpp"
#include "tiledim/generate.hpp"
#include "tiledim/io.hpp"
#include "tiledim/order.hpp"
#include "tiledim/properness.hpp"
#include "tiledim/separations.hpp"
#include "tiledim/svg.hpp"

namespace tiledim::cli {

namespace {

using io::Json;

struct Context {
    std::istream& in;
    std::ostream& out;
    std::string output = "-";

    std::string slurp(const std::string& path) const {
        if (path == "-") {
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
        std::ifstream f(path);
        if (!f) throw InputError("cannot open '" + path + "'");
        std::ostringstream ss;
        ss << f.rdbuf();
        return ss.str();
    }

    void emit(const std::string& text) const {
        if (output == "-") {
            out << text;
            return;
        }
        std::ofstream f(output, std::ios::binary);
        if (!f) throw InputError("cannot write '" + output + "'");
        f << text;
    }

    void emit(const Json& j) const { emit(j.dump() + "\n"); }
};

Axis parse_axis(std::size_t one_based, const Tiling& t) {
    if (one_based < 1 || one_based > t.d()) {
        throw UsageError("axis " + std::to_string(one_based) + " out of range 1.." + std::to_string(t.d()));
    }
    return one_based - 1;
}

Sign parse_sign(const std::string& s) {
    if (s == "-" || s == "minus") return Sign::Minus;
    if (s == "+" || s == "plus") return Sign::Plus;
    throw UsageError("side must be '-' or '+', got '" + s + "'");
}

Json derived_to_json(const DerivedTiling& dt) {
    Json j = io::tiling_to_json(dt.tiling);
    j["origin"] = dt.origin;
    return j;
}

SimplicialComplex complex_from_any(const Json& j) {
    if (j.is_object() && j.contains("maximal_faces")) return io::complex_from_json(j);
    Tiling t = io::tiling_from_json(j);
    require_valid(t);
    return build_complex(t);
}

Json violations_to_json(const ValidationReport& report) {
    static const char* kinds[] = {"degenerate", "outside_frame", "overlap", "volume_mismatch"};
    Json out = Json::array();
    for (const auto& v : report.violations) {
        Json jv;
        jv["kind"] = kinds[static_cast<int>(v.kind)];
        Json ids = Json::array();
        for (BoxId id : v.boxes) ids.push_back(id);
        jv["boxes"] = std::move(ids);
        if (v.witness) jv["witness"] = io::box_to_json(*v.witness);
        jv["message"] = v.message;
        out.push_back(std::move(jv));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Proper box tilings of [-1,+1]^d, their separations, digraphs and realizers.", "tiledim"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Context ctx{in, out};
    app.add_option("-o,--output", ctx.output, "Write the result here instead of stdout");

    std::string input = "-";
    int code = kOk;
    std::function<void()> action;

    auto with_input = [&](CLI::App* sub) {
        sub->add_option("input", input, "Input JSON file, - for stdin");
        return sub;
    };
    auto load = [&] { return io::read_tiling(ctx.slurp(input)); };
    auto load_valid = [&] {
        Tiling t = load();
        require_valid(t);
        return t;
    };

    // validate
    auto* validate_cmd = with_input(app.add_subcommand("validate", "Check that the boxes tile [-1,+1]^d"));
    validate_cmd->callback([&] {
        action = [&] {
            auto report = validate(load());
            Json j;
            j["valid"] = report.valid();
            j["violations"] = violations_to_json(report);
            ctx.emit(j);
            code = report.valid() ? kOk : kCheckedFalse;
        };
    });

    // proper
    std::string method = "pairwise";
    auto* proper_cmd = with_input(app.add_subcommand("proper", "Decide properness, printing a witness if improper"));
    proper_cmd->add_option("--method", method, "depth, pairwise, families or all")
        ->check(CLI::IsMember({"depth", "pairwise", "families", "all"}));
    proper_cmd->callback([&] {
        action = [&] {
            ExtendedTiling ext(load_valid());
            auto depth_json = [&] {
                auto d = max_depth(ext);
                Json j = io::report_to_json(ext, check_depth(ext));
                j["max_depth"] = d.depth;
                j["at"] = io::point_to_json(d.point);
                return j;
            };
            Json j;
            bool proper;
            if (method == "all") {
                Json depth = depth_json();
                Json pairwise = io::report_to_json(ext, check_pairwise(ext));
                Json families = io::report_to_json(ext, check_families(ext));
                proper = depth["proper"].get<bool>();
                bool agree = pairwise["proper"].get<bool>() == proper && families["proper"].get<bool>() == proper;
                j["proper"] = proper;
                j["methods"] = {{"depth", depth}, {"pairwise", pairwise}, {"families", families}};
                if (!agree) {
                    ctx.emit(j);
                    throw IntegrityError("properness characterizations disagree");
                }
            } else if (method == "depth") {
                j = depth_json();
                proper = j["proper"].get<bool>();
            } else {
                j = io::report_to_json(
                    ext, check_proper(ext, method == "pairwise" ? ProperMethod::Pairwise : ProperMethod::Families));
                proper = j["proper"].get<bool>();
            }
            ctx.emit(j);
            code = proper ? kOk : kCheckedFalse;
        };
    });

    // slice / cut
    std::size_t axis = 1;
    std::string at;
    std::string side = "-";
    auto* slice_cmd = with_input(app.add_subcommand("slice", "Intersect with the hyperplane x_axis = at"));
    slice_cmd->add_option("--axis", axis, "1-based axis")->required();
    slice_cmd->add_option("--at", at, "Rational level, e.g. 1/3")->required();
    slice_cmd->callback([&] {
        action = [&] {
            Tiling t = load_valid();
            ctx.emit(derived_to_json(slice(t, parse_axis(axis, t), parse_rational(at))));
        };
    });
    auto* cut_cmd = with_input(app.add_subcommand("cut", "Keep one side of the hyperplane x_axis = at"));
    cut_cmd->add_option("--axis", axis, "1-based axis")->required();
    cut_cmd->add_option("--at", at, "Rational level")->required();
    cut_cmd->add_option("--side", side, "- keeps the lower part, + the upper part");
    cut_cmd->callback([&] {
        action = [&] {
            Tiling t = load_valid();
            ctx.emit(derived_to_json(cut(t, parse_axis(axis, t), parse_rational(at), parse_sign(side))));
        };
    });

    // separations
    auto* seps_cmd = with_input(app.add_subcommand("separations", "List the separations of T u T_ext"));
    seps_cmd->callback([&] {
        action = [&] {
            ExtendedTiling ext(load_valid());
            auto seps = compute_separations(ext);
            Json list = Json::array();
            for (const auto& s : seps) list.push_back(io::separation_to_json(ext, s));
            Json pairs = Json::array();
            for (auto [a, b] : coplanar_pairs(seps)) pairs.push_back({a, b});
            ctx.emit(Json{{"separations", list}, {"coplanar_pairs", pairs}});
        };
    });

    // perturb
    auto* perturb_cmd = with_input(app.add_subcommand("perturb", "Move coplanar separations apart"));
    perturb_cmd->callback([&] {
        action = [&] {
            auto r = perturb_general_position(load_valid());
            Json j = io::tiling_to_json(r.tiling);
            j["correspondence"] = r.correspondence;
            Json moves = Json::array();
            for (const auto& m : r.moves) {
                moves.push_back({{"axis", m.axis + 1},
                                 {"from", format_rational(m.from)},
                                 {"epsilon", format_rational(m.epsilon)}});
            }
            j["moves"] = std::move(moves);
            ctx.emit(j);
        };
    });

    // graph
    auto* graph_cmd = with_input(app.add_subcommand("graph", "Print the digraph G(T) in DOT"));
    graph_cmd->callback([&] {
        action = [&] {
            Tiling t = load_valid();
            Digraph g = build_digraph(t);
            std::ostringstream dot;
            dot << "digraph G {\n";
            for (BoxId v = 0; v < g.size(); ++v) dot << "  " << v << " [label=\"B" << v + 1 << "\"];\n";
            for (auto [a, b] : g.arcs()) dot << "  " << a << " -> " << b << ";\n";
            dot << "}\n";
            ctx.emit(dot.str());
        };
    });

    // realizer
    auto* realizer_cmd = with_input(app.add_subcommand("realizer", "Construct the d+1 orders of a proper tiling"));
    realizer_cmd->callback([&] {
        action = [&] { ctx.emit(io::realizer_to_json(construct_realizer(load_valid()))); };
    });

    // complex
    bool exterior = false;
    auto* complex_cmd = with_input(app.add_subcommand("complex", "Maximal faces of the induced complex"));
    complex_cmd->add_flag("--exterior", exterior, "Also include the exterior boxes as vertices");
    complex_cmd->callback([&] {
        action = [&] { ctx.emit(io::complex_to_json(build_complex(load_valid(), exterior))); };
    });

    // verify
    std::string realizer_path;
    auto* verify_cmd = with_input(app.add_subcommand("verify", "Check a realizer against a complex or tiling"));
    verify_cmd->add_option("realizer", realizer_path, "Realizer JSON file")->required();
    verify_cmd->callback([&] {
        action = [&] {
            auto c = complex_from_any(io::parse(ctx.slurp(input)));
            auto r = io::realizer_from_json(io::parse(ctx.slurp(realizer_path)));
            auto violation = verify_realizer(c, r);
            Json j;
            j["realizer"] = !violation.has_value();
            if (violation) j["violation"] = {{"face", violation->face}, {"vertex", violation->vertex}};
            ctx.emit(j);
            code = violation ? kCheckedFalse : kOk;
        };
    });

    // dmdim
    std::size_t kmax = 4;
    std::size_t max_vertices = 7;
    bool force = false;
    auto* dmdim_cmd = with_input(app.add_subcommand("dmdim", "Exact Dushnik-Miller dimension by exhaustive search"));
    dmdim_cmd->add_option("--kmax", kmax, "Largest realizer size to try");
    dmdim_cmd->add_option("--max-vertices", max_vertices, "Refuse larger complexes");
    dmdim_cmd->add_flag("--force", force, "Search even above --max-vertices");
    dmdim_cmd->callback([&] {
        action = [&] {
            auto c = complex_from_any(io::parse(ctx.slurp(input)));
            auto r = dm_dimension(c, kmax, max_vertices, force);
            if (r.dimension) {
                ctx.emit(std::to_string(*r.dimension) + "\n");
            } else {
                ctx.emit("exceeds kmax " + std::to_string(kmax) + "\n");
                code = kCheckedFalse;
            }
        };
    });

    // generate
    GenSpec spec;
    bool general_position = false;
    auto* gen_cmd = app.add_subcommand("generate", "Random proper tiling");
    gen_cmd->add_option("--d", spec.d, "Dimension")->required();
    gen_cmd->add_option("--boxes", spec.target_boxes, "Target number of boxes")->required();
    gen_cmd->add_option("--seed", spec.seed, "Random seed")->required();
    gen_cmd->add_option("--max-retries", spec.max_retries, "Restarts before giving up");
    gen_cmd->add_option("--pinwheel-rate", spec.pinwheel_rate, "Chance of a pinwheel instead of a cut")
        ->check(CLI::Range(0.0, 1.0));
    gen_cmd->add_flag("--coarse", spec.coarse, "Cut on a coarse grid (coplanar separations likely)");
    gen_cmd->add_flag("--general-position", general_position, "Perturb the result into general position");
    gen_cmd->callback([&] {
        action = [&] {
            Tiling t = random_proper(spec);
            if (general_position) t = perturb_general_position(t).tiling;
            ctx.emit(io::write_tiling(t));
        };
    });

    // collapse
    auto* collapse_cmd = with_input(app.add_subcommand("collapse", "Remove the corner box at (-1,...,-1)"));
    collapse_cmd->callback([&] {
        action = [&] {
            auto c = collapse_corner(load_valid());
            Json j = derived_to_json(c.result);
            j["removed"] = c.removed;
            j["partner"] = c.partner;
            j["axis"] = c.axis + 1;
            ctx.emit(j);
        };
    });

    // render-svg
    SvgOptions svg;
    bool no_labels = false;
    auto* svg_cmd = with_input(app.add_subcommand("render-svg", "Draw a 2-tiling as SVG"));
    svg_cmd->add_flag("--separations", svg.separations, "Overlay interior separations");
    svg_cmd->add_flag("--no-labels", no_labels, "Omit box labels");
    svg_cmd->callback([&] {
        action = [&] {
            svg.labels = !no_labels;
            ctx.emit(render_svg(load_valid(), svg));
        };
    });

    // fixture
    std::string fixture_name;
    auto* fixture_cmd = app.add_subcommand("fixture", "Print a named fixture tiling");
    fixture_cmd->add_option("name", fixture_name, "One of: pinwheel, grid2x2, single2, ...")->required();
    fixture_cmd->callback([&] { action = [&] { ctx.emit(io::write_tiling(fixture(fixture_name))); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kOk;
        }
        app.exit(e, err, err);
        return kBadInput;
    }

    try {
        if (action) action();
        return code;
    } catch (const InputError& e) {
        err << "tiledim: invalid input: " << e.what() << "\n";
        return kBadInput;
    } catch (const UsageError& e) {
        err << "tiledim: " << e.what() << "\n";
        return kBadInput;
    } catch (const PreconditionError& e) {
        err << "tiledim: " << e.what() << "\n";
        return kBadInput;
    } catch (const IntegrityError& e) {
        err << "tiledim: integrity error: " << e.what() << "\n";
        return kIntegrity;
    } catch (const GenerationError& e) {
        err << "tiledim: " << e.what() << "\n";
        return kIntegrity;
    }
}

}  // namespace tiledim::cli
