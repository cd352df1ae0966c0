#pragma once

#include "nlpc/emitter.hpp"
#include "nlpc/graph.hpp"
#include "nlpc/layout.hpp"
#include "nlpc/timeline.hpp"
#include "nlpc/transition.hpp"

#include <cstdint>
#include <fstream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline std::string data_path(const std::string& name)
{
    return std::string(NLPC_DATA_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline nlpc::MultivariateGraph les_miserables()
{
    return nlpc::load_graph(read_text(data_path("les_miserables.json")));
}

inline nlpc::MultivariateGraph make_graph(const std::vector<std::pair<std::string, int>>& nodes,
                                          const std::vector<std::pair<std::string, std::string>>& edges,
                                          int cluster_count)
{
    nlpc::MultivariateGraph g;
    for (const auto& [id, cluster] : nodes) g.nodes.push_back({id, id, cluster, std::nullopt});
    for (const auto& [a, b] : edges) g.edges.push_back({a, b});
    g.cluster_count = cluster_count;
    return g;
}

/// Random simple graph, built with a plain std::mt19937_64 so it does not depend on library code.
inline nlpc::MultivariateGraph random_graph(std::size_t n, std::uint64_t seed, int clusters = 4)
{
    std::mt19937_64 rng(seed);
    nlpc::MultivariateGraph g;
    g.cluster_count = clusters;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string id = "n" + std::to_string(i);
        g.nodes.push_back({id, id, static_cast<int>(rng() % static_cast<std::uint64_t>(clusters)), std::nullopt});
    }
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t i = 1; i < n; ++i) {
        const std::size_t j = rng() % i;
        seen.insert({j, i});
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        seen.insert({a, b});
    }
    for (const auto& [a, b] : seen) g.edges.push_back({g.nodes[a].id, g.nodes[b].id});
    return g;
}

/// A graph with attributes, its scenes, mapping and one compiled spec.
struct Bundle {
    nlpc::MultivariateGraph graph;
    nlpc::Viewport viewport;
    nlpc::NlScene nl;
    nlpc::PcScene pc;
    nlpc::ElementMapping mapping;
    nlpc::TransitionSpec spec;
    nlpc::Timeline timeline;

    nlpc::TransitionInputs inputs() const { return {graph, nl, pc, mapping, timeline, spec}; }

    void recompile(const nlpc::TransitionSpec& s)
    {
        spec = s;
        timeline = nlpc::build_timeline(spec, mapping, graph);
    }
};

inline std::unique_ptr<Bundle> make_bundle(nlpc::MultivariateGraph graph, const nlpc::TransitionSpec& spec,
                                           std::uint64_t seed = 42,
                                           nlpc::PatternKind pattern = nlpc::PatternKind::negative_correlation())
{
    auto b = std::make_unique<Bundle>();
    b->graph = std::move(graph);
    if (b->graph.attributes.empty()) b->graph.attributes = nlpc::generate_attributes(b->graph, 2, pattern, seed);
    nlpc::NlLayoutOptions opts;
    opts.seed = seed;
    b->nl = nlpc::compute_nl_layout(b->graph, b->viewport, opts);
    b->pc = nlpc::compute_pc_scene(b->graph, nlpc::default_axis_order(b->graph, 2), b->viewport);
    b->mapping = nlpc::map_elements(b->nl, b->pc);
    b->recompile(spec);
    return b;
}

inline nlpc::TransitionSpec linear(nlpc::TransitionSpec spec)
{
    spec.easing_motion = nlpc::EasingKind::Linear;
    spec.easing_opacity = nlpc::EasingKind::Linear;
    return spec;
}

} // namespace fixtures
