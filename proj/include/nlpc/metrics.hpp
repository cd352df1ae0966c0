#pragma once

#include "nlpc/emitter.hpp"

#include <map>
#include <string>
#include <vector>

namespace nlpc {

inline constexpr double kDefaultMetricStep = 1.0 / 120.0;
inline constexpr double kDefaultOcclusionThreshold = 4.0;

/// Engineering proxies for swiftness (duration) and traceability (the rest).
/// They are never folded into a single score.
struct TransitionReport {
    std::string variant_name;
    double total_duration = 0.0;
    double total_travel = 0.0;
    std::size_t max_simultaneous_moving = 0;
    std::size_t occlusion_events = 0;
    std::size_t max_crossings = 0;
    double step = kDefaultMetricStep;
    double occlusion_threshold = kDefaultOcclusionThreshold;
    std::map<std::string, double> per_element_travel;
};

struct TravelResult {
    std::map<std::string, double> per_element;
    double total = 0.0;
};

/// Sample times 0, dt, 2dt, ... plus the exact end.
std::vector<double> sample_times(double total_duration, double dt);

/// Sum of glyph-centroid displacements between consecutive samples at step dt.
/// Throws std::invalid_argument unless dt > 0.
TravelResult total_travel(const TransitionInputs& inputs, double dt = kDefaultMetricStep);

/// Pairs of element glyphs (per frame) whose bounding boxes overlap by more than threshold^2.
std::size_t occlusion_events(const std::vector<Frame>& frames, double threshold = kDefaultOcclusionThreshold);
std::size_t occlusion_events(const Frame& frame, double threshold = kDefaultOcclusionThreshold);

/// Properly intersecting segment pairs between different glyphs; touching endpoints do not count.
std::size_t crossings(const Frame& frame);

/// Largest number of elements with some stage strictly in progress at one sample.
std::size_t max_simultaneous_moving(const Timeline& timeline, double dt = kDefaultMetricStep);

TransitionReport compute_report(const TransitionInputs& inputs, double dt = kDefaultMetricStep,
                                double occlusion_threshold = kDefaultOcclusionThreshold);

std::string report_to_json(const TransitionReport& report);
std::string report_to_text(const TransitionReport& report);

} // namespace nlpc
