#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rocaware/interval.hpp"
#include "rocaware/roc.hpp"
#include "rocaware/threshold_profile.hpp"

namespace rocaware {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
    friend bool operator==(const Point2&, const Point2&) = default;
};

// Threshold marker for t = 0.1 ... 0.9. On the curve it sits on the vertex
// whose threshold set contains t (never interpolated); on the bisector it
// sits at the random model's operating point (1-t, 1-t).
struct ThresholdMarker {
    double threshold = 0.0;
    const char* glyph = "";
    std::optional<Point2> on_curve;
    Interval curve_interval = Interval::empty();
    Point2 on_bisector;
};

std::vector<ThresholdMarker> threshold_markers(const RocCurve& curve);

// Indices i such that the segment from vertex i to vertex i+1 is drawn as
// part of the better-than-random arc.
std::vector<std::size_t> highlighted_segments(const RocCurve& curve, const IntervalSet& ok_ranges);

std::string render_decorated_roc(const RocCurve& curve, const IntervalSet& ok_ranges);
std::string render_decorated_roc(const RocCurve& curve, const ThresholdProfile& profile);

std::string render_classification_plot(const ThresholdProfile& profile);

} // namespace rocaware
