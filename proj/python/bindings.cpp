#include "nlpc/emitter.hpp"
#include "nlpc/errors.hpp"
#include "nlpc/graph.hpp"
#include "nlpc/layout.hpp"
#include "nlpc/metrics.hpp"
#include "nlpc/timeline.hpp"
#include "nlpc/transition.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace nlpc;

namespace {

using PyPoint = std::pair<double, double>;

Point2 to_point(const PyPoint& p)
{
    return {p.first, p.second};
}

py::list points(const std::vector<Point2>& pts)
{
    py::list out;
    for (Point2 p : pts) out.append(py::make_tuple(p.x, p.y));
    return out;
}

py::dict glyph_dict(const TransGlyph& g)
{
    py::dict d;
    d["vertices"] = points(g.vertices);
    d["stroke_width"] = g.stroke_width;
    return d;
}

ElementPair make_pair(PyPoint center, double radius, PyPoint start, PyPoint end, double width)
{
    ElementPair p;
    p.node_id = "e";
    p.dot = {"e", to_point(center), radius, 0};
    p.line_start = to_point(start);
    p.line_end = to_point(end);
    p.line_width = width;
    return p;
}

/// A compiled transition over one graph, keeping scenes and timeline together.
class Transition {
public:
    Transition(const MultivariateGraph& graph, const std::string& spec_json, std::optional<std::string> preset_name,
               std::uint64_t seed, double width, double height)
        : graph_(graph), viewport_{width, height, 50.0}
    {
        if (!viewport_.valid()) throw std::invalid_argument("viewport too small for its 50 px margin");
        if (graph_.attributes.empty()) {
            graph_.attributes = generate_attributes(graph_, 2, PatternKind::negative_correlation(), seed);
        }
        spec_ = preset_name ? preset(*preset_name) : parse_spec(spec_json);
        NlLayoutOptions opts;
        opts.seed = seed;
        nl_ = compute_nl_layout(graph_, viewport_, opts);
        pc_ = compute_pc_scene(graph_, default_axis_order(graph_, 2), viewport_);
        mapping_ = map_elements(nl_, pc_);
        timeline_ = build_timeline(spec_, mapping_, graph_);
    }

    double total_duration() const { return timeline_.total_duration; }
    std::string spec_json() const { return serialize_spec(spec_); }
    std::string timeline_json() const { return serialize_timeline(timeline_); }
    std::string report_json(double dt) const { return report_to_json(compute_report(inputs(), dt)); }
    double total_travel(double dt) const { return nlpc::total_travel(inputs(), dt).total; }
    std::string keyframes_json(double fps) const
    {
        return serialize_keyframes(emit_keyframes(inputs(), viewport_, fps));
    }
    std::string svg(double t) const { return emit_svg(render_frame(inputs(), t), viewport_); }

    py::dict sample_at(double t) const
    {
        const TimelineSample s = sample(timeline_, t);
        py::dict stages;
        for (std::size_t i = 0; i < s.stage_times.size(); ++i) {
            const StageTimes& st = s.stage_times[i];
            stages[py::str(timeline_.tracks[i].node_id)] = py::make_tuple(st.shape, st.pos, st.size);
        }
        py::dict d;
        d["time"] = s.time;
        d["clamped"] = s.clamped;
        d["link_opacity"] = s.link_opacity;
        d["axis_opacity"] = s.axis_opacity;
        d["label_opacity"] = s.label_opacity;
        d["stage_times"] = stages;
        return d;
    }

    py::list frame(double t) const
    {
        py::list out;
        for (const Primitive& p : render_frame(inputs(), t).primitives) {
            py::dict d;
            d["kind"] = std::string(to_string(p.kind));
            d["id"] = p.element_id;
            d["points"] = points(p.points);
            d["stroke_width"] = p.stroke_width;
            d["radius"] = p.radius;
            d["opacity"] = p.opacity;
            d["color"] = p.color_index;
            if (p.kind == PrimitiveKind::Label) d["text"] = p.text;
            out.append(std::move(d));
        }
        return out;
    }

private:
    TransitionInputs inputs() const { return {graph_, nl_, pc_, mapping_, timeline_, spec_}; }

    MultivariateGraph graph_;
    Viewport viewport_;
    TransitionSpec spec_;
    NlScene nl_;
    PcScene pc_;
    ElementMapping mapping_;
    Timeline timeline_;
};

} // namespace

PYBIND11_MODULE(_nlpc, m)
{
    m.doc() = "Animated node-link / parallel-coordinates transitions";

    static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
    static py::exception<ValidationError> validation_error(m, "ValidationError", PyExc_ValueError);
    static py::exception<ConsistencyError> consistency_error(m, "ConsistencyError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const ParseError& e) {
            py::set_error(parse_error, e.what());
        } catch (const ValidationError& e) {
            py::set_error(validation_error, e.what());
        } catch (const ConsistencyError& e) {
            py::set_error(consistency_error, e.what());
        }
    });

    py::class_<MultivariateGraph>(m, "Graph")
        .def_property_readonly("node_count", &MultivariateGraph::node_count)
        .def_property_readonly("edge_count", &MultivariateGraph::edge_count)
        .def_readonly("cluster_count", &MultivariateGraph::cluster_count)
        .def_property_readonly("node_ids",
                               [](const MultivariateGraph& g) {
                                   std::vector<std::string> ids;
                                   for (const Node& n : g.nodes) ids.push_back(n.id);
                                   return ids;
                               })
        .def_property_readonly("attribute_names", [](const MultivariateGraph& g) { return g.attributes.names; })
        .def_property_readonly("attributes", [](const MultivariateGraph& g) { return g.attributes.values; })
        .def("validate", [](const MultivariateGraph& g) { return validate(g); })
        .def("to_json", [](const MultivariateGraph& g) { return serialize_graph(g); });

    m.def("load_graph", [](const std::string& text) { return load_graph(text); }, py::arg("document"));
    m.def(
        "with_attributes",
        [](MultivariateGraph g, std::size_t n, const std::string& pattern, std::uint64_t seed) {
            g.attributes = generate_attributes(g, n, PatternKind::parse(pattern), seed);
            return g;
        },
        py::arg("graph"), py::arg("attribute_count") = 2, py::arg("pattern") = "negative", py::arg("seed") = 42,
        "Copy of the graph with a synthetic attribute table.");

    m.def("preset_json", [](const std::string& name, bool stagger) { return serialize_spec(preset(name, stagger)); },
          py::arg("name"), py::arg("stagger") = false);
    m.def(
        "ease",
        [](double s, const std::string& kind) {
            if (kind == "linear") return ease(s, EasingKind::Linear);
            if (kind == "cubic_in_out") return ease(s, EasingKind::CubicInOut);
            throw std::invalid_argument("unknown easing '" + kind + "'");
        },
        py::arg("s"), py::arg("kind") = "cubic_in_out");
    m.def(
        "stagger_delay",
        [](std::size_t rank, std::size_t cluster_rank, double per_node, double per_cluster) {
            StaggerConfig cfg = default_stagger();
            cfg.per_node_delay = per_node;
            cfg.per_cluster_delay = per_cluster;
            return stagger_delay(rank, cluster_rank, cfg);
        },
        py::arg("rank"), py::arg("cluster_rank"), py::arg("per_node") = 0.02, py::arg("per_cluster") = 0.4);
    m.def(
        "interpolate_geometric",
        [](PyPoint center, double radius, PyPoint start, PyPoint end, double width, double t) {
            return glyph_dict(interpolate_geometric(make_pair(center, radius, start, end, width), t));
        },
        py::arg("center"), py::arg("radius"), py::arg("start"), py::arg("end"), py::arg("width"), py::arg("t"));
    m.def(
        "interpolate_bent",
        [](PyPoint center, double radius, PyPoint start, PyPoint end, double width, std::tuple<double, double, double> st,
           bool vertical_only, double arm_fraction) {
            const auto [shape, pos, size] = st;
            return glyph_dict(interpolate_bent(make_pair(center, radius, start, end, width), {shape, pos, size},
                                               vertical_only ? PathStrategy::VerticalOnly : PathStrategy::ShortestPath,
                                               arm_fraction));
        },
        py::arg("center"), py::arg("radius"), py::arg("start"), py::arg("end"), py::arg("width"),
        py::arg("stage_times"), py::arg("vertical_only") = false, py::arg("arm_fraction") = 0.15);

    py::class_<Transition>(m, "Transition")
        .def(py::init<const MultivariateGraph&, const std::string&, std::optional<std::string>, std::uint64_t, double,
                      double>(),
             py::arg("graph"), py::arg("spec_json") = "", py::arg("preset") = py::none(), py::arg("seed") = 42,
             py::arg("width") = 1600.0, py::arg("height") = 900.0)
        .def_property_readonly("total_duration", &Transition::total_duration)
        .def("spec_json", &Transition::spec_json)
        .def("timeline_json", &Transition::timeline_json)
        .def("report_json", &Transition::report_json, py::arg("dt") = kDefaultMetricStep)
        .def("total_travel", &Transition::total_travel, py::arg("dt") = kDefaultMetricStep)
        .def("keyframes_json", &Transition::keyframes_json, py::arg("fps") = 50.0)
        .def("svg", &Transition::svg, py::arg("t"))
        .def("sample", &Transition::sample_at, py::arg("t"))
        .def("frame", &Transition::frame, py::arg("t"));
}
