#include "nlpc/graph.hpp"

#include "random.hpp"

#include <numeric>
#include <stdexcept>

namespace nlpc {

namespace {

// Strictly increasing values, one per stratum of [lo, hi). The jitter stays
// below 0.9 of a stratum so neighbouring values can never collide.
std::vector<double> stratified(std::size_t count, double lo, double hi, detail::Rng& rng)
{
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double u = 0.9 * rng.uniform01();
        out[k] = lo + (hi - lo) * (static_cast<double>(k) + u) / static_cast<double>(count);
    }
    return out;
}

std::vector<std::size_t> shuffled_indices(std::size_t count, detail::Rng& rng)
{
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    rng.shuffle(idx);
    return idx;
}

} // namespace

AttributeTable generate_attributes(const MultivariateGraph& graph, std::size_t attribute_count,
                                   PatternKind pattern, std::uint64_t seed)
{
    if (attribute_count < 2) throw std::invalid_argument("attribute count must be at least 2");
    const std::size_t n = graph.node_count();
    if (n == 0) throw std::invalid_argument("cannot generate attributes for an empty graph");
    if (pattern.kind == PatternKind::Kind::Outliers &&
        (pattern.outlier_count < 1 || pattern.outlier_count > n / 4)) {
        throw std::invalid_argument("outlier count must lie in [1, " + std::to_string(n / 4) + "]");
    }

    detail::Rng rng(seed);
    AttributeTable table;
    for (std::size_t a = 0; a < attribute_count; ++a) table.names.push_back("attr_" + std::to_string(a + 1));
    table.values.assign(n, std::vector<double>(attribute_count, 0.0));

    switch (pattern.kind) {
    case PatternKind::Kind::NegativeCorrelation:
    case PatternKind::Kind::PositiveCorrelation: {
        // Node order[k] takes rank k on attribute 1 and rank k (or N-1-k) on attribute 2.
        const auto order = shuffled_indices(n, rng);
        const auto first = stratified(n, kAttributeMin, kAttributeMax, rng);
        const auto second = stratified(n, kAttributeMin, kAttributeMax, rng);
        const bool negative = pattern.kind == PatternKind::Kind::NegativeCorrelation;
        for (std::size_t k = 0; k < n; ++k) {
            table.values[order[k]][0] = first[k];
            table.values[order[k]][1] = negative ? second[n - 1 - k] : second[k];
        }
        break;
    }
    case PatternKind::Kind::Outliers: {
        const std::size_t k = pattern.outlier_count;
        const auto order = shuffled_indices(n, rng);
        // Inliers are spread over [40, 60]; outliers sit in [0, 5) or [95, 100),
        // at least 35 units from any inlier mean.
        const auto inliers = stratified(n - k, 40.0, 60.0, rng);
        for (std::size_t i = 0; i < n - k; ++i) table.values[order[k + i]][0] = inliers[i];
        for (std::size_t i = 0; i < k; ++i) {
            const double offset = rng.uniform(0.0, 5.0);
            table.values[order[i]][0] = i % 2 == 0 ? kAttributeMin + offset : kAttributeMax - offset;
        }
        for (std::size_t node = 0; node < n; ++node) table.values[node][1] = rng.uniform(kAttributeMin, kAttributeMax);
        break;
    }
    case PatternKind::Kind::UniformRandom:
        for (std::size_t node = 0; node < n; ++node) {
            table.values[node][0] = rng.uniform(kAttributeMin, kAttributeMax);
            table.values[node][1] = rng.uniform(kAttributeMin, kAttributeMax);
        }
        break;
    }

    for (std::size_t a = 2; a < attribute_count; ++a) {
        for (std::size_t node = 0; node < n; ++node) table.values[node][a] = rng.uniform(kAttributeMin, kAttributeMax);
    }
    return table;
}

} // namespace nlpc
