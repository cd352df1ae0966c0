#include "nlpc/cli.hpp"

#include "nlpc/emitter.hpp"
#include "nlpc/errors.hpp"
#include "nlpc/graph.hpp"
#include "nlpc/layout.hpp"
#include "nlpc/metrics.hpp"
#include "nlpc/timeline.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

namespace nlpc {

namespace fs = std::filesystem;

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string graph_path;
    std::string spec_path;
    std::string preset_name;
    std::string out;
    double fps = 50.0;
    std::uint64_t seed = 42;
    std::string pattern = "negative";
    std::size_t axes = 2;
    double width = 1600.0;
    double height = 900.0;
    std::string stagger;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    out << content;
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

fs::path prepare_directory(const std::string& dir)
{
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) throw IoError("cannot create output directory '" + dir + "'");
    return fs::path(dir);
}

MultivariateGraph load_with_attributes(const Options& o)
{
    MultivariateGraph graph = load_graph(read_file(o.graph_path));
    if (graph.attributes.empty()) {
        graph.attributes = generate_attributes(graph, std::max<std::size_t>(o.axes, 2), PatternKind::parse(o.pattern), o.seed);
    }
    return graph;
}

TransitionSpec resolve_spec(const Options& o)
{
    TransitionSpec spec = o.spec_path.empty() ? preset(o.preset_name) : parse_spec(read_file(o.spec_path));
    if (o.stagger == "on" && !spec.stagger) spec.stagger = default_stagger();
    if (o.stagger == "off") spec.stagger.reset();
    return spec;
}

/// Scenes, mapping and timeline of one transition, kept alive together.
struct Compiled {
    MultivariateGraph graph;
    Viewport viewport;
    NlScene nl;
    PcScene pc;
    ElementMapping mapping;
    TransitionSpec spec;
    Timeline timeline;

    TransitionInputs inputs() const { return {graph, nl, pc, mapping, timeline, spec}; }
};

Compiled compile(const Options& o)
{
    Compiled c;
    c.graph = load_with_attributes(o);
    c.viewport = Viewport{o.width, o.height, 50.0};
    if (!c.viewport.valid()) throw std::invalid_argument("viewport too small for its 50 px margin");
    NlLayoutOptions layout;
    layout.seed = o.seed;
    c.nl = compute_nl_layout(c.graph, c.viewport, layout);
    c.pc = compute_pc_scene(c.graph, default_axis_order(c.graph, 2), c.viewport);
    c.mapping = map_elements(c.nl, c.pc);
    c.spec = resolve_spec(o);
    c.timeline = build_timeline(c.spec, c.mapping, c.graph);
    return c;
}

int cmd_gen_data(const Options& o, std::ostream& out)
{
    MultivariateGraph graph = load_graph(read_file(o.graph_path));
    graph.attributes = generate_attributes(graph, o.axes, PatternKind::parse(o.pattern), o.seed);
    const fs::path path(o.out);
    if (path.has_parent_path()) prepare_directory(path.parent_path().string());
    write_file(path, serialize_graph(graph));
    out << "wrote " << path.string() << " (" << graph.node_count() << " nodes, " << o.axes << " attributes)\n";
    return kExitOk;
}

int cmd_compile(const Options& o, std::ostream& out)
{
    const Compiled c = compile(o);
    const fs::path dir = prepare_directory(o.out);
    const TransitionReport report = compute_report(c.inputs());
    write_file(dir / "timeline.json", serialize_timeline(c.timeline));
    write_file(dir / "report.json", report_to_json(report));
    write_file(dir / "report.txt", report_to_text(report));
    out << report_to_text(report);
    return kExitOk;
}

int cmd_render(const Options& o, std::ostream& out)
{
    const Compiled c = compile(o);
    const fs::path dir = prepare_directory(o.out);
    const KeyframeDocument doc = emit_keyframes(c.inputs(), c.viewport, o.fps);
    write_file(dir / "keyframes.json", serialize_keyframes(doc));
    for (std::size_t i = 0; i < doc.frames.size(); ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "frame_%05zu.svg", i);
        write_file(dir / name, emit_svg(doc.frames[i], c.viewport));
    }
    out << "wrote " << doc.frames.size() << " frames (" << format_fixed3(doc.total_duration) << " s at "
        << format_fixed3(o.fps) << " fps) to " << dir.string() << "\n";
    return kExitOk;
}

int report_error(std::ostream& err, int code, std::string_view kind, const std::string& message,
                 const std::string& path = {})
{
    err << "error: " << message << "\n";
    nlohmann::ordered_json j;
    j["error"]["exitCode"] = code;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    if (!path.empty()) j["error"]["path"] = path;
    err << j.dump() << "\n";
    return code;
}

void add_graph(CLI::App* cmd, Options& o)
{
    cmd->add_option("--graph", o.graph_path, "Graph JSON file")->required();
}

void add_transition(CLI::App* cmd, Options& o)
{
    auto* spec = cmd->add_option("--spec", o.spec_path, "TransitionSpec JSON file");
    auto* pre = cmd->add_option("--preset", o.preset_name, "Named preset (v_basic, v_adv)");
    spec->excludes(pre);
    pre->excludes(spec);
    cmd->add_option("--seed", o.seed, "Seed for layout and attribute synthesis")->capture_default_str();
    cmd->add_option("--pattern", o.pattern, "Pattern used when the graph has no attributes")->capture_default_str();
    cmd->add_option("--axes", o.axes, "Attribute count used when the graph has no attributes")
        ->check(CLI::Range(std::size_t{2}, std::size_t{64}))
        ->capture_default_str();
    cmd->add_option("--width", o.width, "Viewport width in px")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--height", o.height, "Viewport height in px")->check(CLI::PositiveNumber)->capture_default_str();
    cmd->add_option("--stagger", o.stagger, "Force staggering on or off")->check(CLI::IsMember({"on", "off"}));
    cmd->add_option("--out", o.out, "Output directory")->required();
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Compile and render animated node-link / parallel-coordinates transitions", "nlpc"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen-data", "Add synthetic attributes to a graph");
    add_graph(gen, o);
    gen->add_option("--pattern", o.pattern, "negative, positive, uniform or outliers:K")->capture_default_str();
    gen->add_option("--axes", o.axes, "Number of attributes (>= 2)")->capture_default_str();
    gen->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
    gen->add_option("--out", o.out, "Output graph JSON file")->required();

    auto* comp = app.add_subcommand("compile", "Compile a transition to a timeline and a metrics report");
    add_graph(comp, o);
    add_transition(comp, o);

    auto* render = app.add_subcommand("render", "Render a transition to keyframes.json and SVG frames");
    add_graph(render, o);
    add_transition(render, o);
    render->add_option("--fps", o.fps, "Frames per second")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        return report_error(err, kExitValidation, "usage", e.what());
    }

    try {
        if (*gen) {
            if (o.axes < 2) throw std::invalid_argument("--axes must be at least 2");
            return cmd_gen_data(o, out);
        }
        if (o.spec_path.empty() && o.preset_name.empty()) {
            return report_error(err, kExitValidation, "usage", "one of --spec or --preset is required");
        }
        if (*comp) return cmd_compile(o, out);
        return cmd_render(o, out);
    } catch (const ParseError& e) {
        return report_error(err, kExitValidation, "parse", e.what(), e.path());
    } catch (const ValidationError& e) {
        return report_error(err, kExitValidation, "validation", e.what());
    } catch (const ConsistencyError& e) {
        return report_error(err, kExitValidation, "consistency", e.what());
    } catch (const std::invalid_argument& e) {
        return report_error(err, kExitValidation, "argument", e.what());
    } catch (const IoError& e) {
        return report_error(err, kExitIo, "io", e.what());
    } catch (const fs::filesystem_error& e) {
        return report_error(err, kExitIo, "io", e.what());
    }
}

} // namespace nlpc
