#include "doctest.h"

#include <string>

#include "rocaware/plot.hpp"

using namespace rocaware;

namespace {

ScoredDataset make(std::vector<double> s, std::vector<std::uint8_t> l) {
    return ScoredDataset(std::move(s), std::move(l));
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("markers of the random baseline sit on the bisector markers") {
    auto markers = threshold_markers(random_baseline_curve(10));
    REQUIRE(markers.size() == 9);
    for (const auto& m : markers) {
        REQUIRE(m.on_curve);
        CHECK(m.on_curve->x == doctest::Approx(m.on_bisector.x));
        CHECK(m.on_curve->y == doctest::Approx(m.on_bisector.y));
        CHECK(m.on_bisector.x == doctest::Approx(1 - m.threshold));
    }
    CHECK(std::string(markers[0].glyph) == "○");
    CHECK(std::string(markers[8].glyph) == "⊞");
}

TEST_CASE("markers sit on the vertex whose interval holds the threshold") {
    auto c = build_roc(make({0.9, 0.8, 0.3, 0.2}, {1, 1, 0, 0}));
    auto markers = threshold_markers(c);
    // t = 0.5 lies in [0.3, 0.8): vertex (0, 1)
    REQUIRE(markers[4].on_curve);
    CHECK(*markers[4].on_curve == Point2{0, 1});
    CHECK(markers[4].curve_interval == Interval::closed_open(0.3, 0.8));
    CHECK(*markers[8].on_curve == Point2{0, 0});
}

TEST_CASE("perfect model highlights both axis segments") {
    auto ds = make({1, 1, 0, 0}, {1, 1, 0, 0});
    auto c = build_roc(ds);
    auto segs = highlighted_segments(c, check_better_than_random(profile(ds)).ok_ranges);
    CHECK(segs == std::vector<std::size_t>{0, 1});

    auto flat = make({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0});
    CHECK(highlighted_segments(build_roc(flat), check_better_than_random(profile(flat)).ok_ranges).empty());
}

TEST_CASE("rendering is deterministic and complete") {
    auto ds = make({0.9, 0.7, 0.6, 0.4, 0.35, 0.2, 0.1}, {1, 1, 0, 1, 0, 0, 0});
    auto c = build_roc(ds);
    auto p = profile(ds);
    auto a = render_decorated_roc(c, p);
    CHECK(a == render_decorated_roc(c, p));
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("</svg>") != std::string::npos);
    CHECK(count(a, "class=\"marker random\"") == 9);
    CHECK(count(a, "<text") >= 9);

    auto b = render_classification_plot(p);
    CHECK(b == render_classification_plot(p));
    CHECK(b.find("</svg>") != std::string::npos);
}
