#include "doctest.h"

#include "rocaware/interval.hpp"

using namespace rocaware;

TEST_CASE("interval emptiness and degenerate points") {
    CHECK(Interval::empty().is_empty());
    CHECK(Interval::closed_open(0.5, 0.5).is_empty());
    CHECK(Interval::open(0.5, 0.5).is_empty());
    CHECK_FALSE(Interval::point(0.5).is_empty());
    CHECK(Interval::point(0.5).is_degenerate());
    CHECK(Interval::point(0.5).width() == 0.0);
    CHECK(Interval::closed_open(0.3, 0.45).width() == doctest::Approx(0.15));
}

TEST_CASE("interval containment respects closure") {
    const auto iv = Interval::closed_open(0.3, 0.45);
    CHECK(iv.contains(0.3));
    CHECK(iv.contains(0.4));
    CHECK_FALSE(iv.contains(0.45));
    CHECK_FALSE(Interval::open(0.0, 1.0).contains(0.0));
    CHECK(Interval::below(0.7, true).contains(0.7));
    CHECK_FALSE(Interval::above(0.7, false).contains(0.7));
}

TEST_CASE("intersection takes the tighter endpoint") {
    auto r = intersect(Interval::closed_open(0.0, 0.5), Interval::unit_interior());
    CHECK(r == Interval::open(0.0, 0.5));
    r = intersect(Interval::closed(0.2, 0.6), Interval::open(0.2, 0.6));
    CHECK(r == Interval::open(0.2, 0.6));
    CHECK(intersect(Interval::closed_open(0.0, 0.3), Interval::closed(0.3, 1.0)).is_empty());
    CHECK(intersect(Interval::closed(0.0, 0.3), Interval::closed(0.3, 1.0)) == Interval::point(0.3));
}

TEST_CASE("to_string shows closure") {
    CHECK(to_string(Interval::closed_open(0.3, 0.45)) == "[0.3, 0.45)");
    CHECK(to_string(Interval::open_closed(0, 0.7)) == "(0, 0.7]");
    CHECK(to_string(Interval::empty()) == "{}");
}

TEST_CASE("interval set merges touching pieces") {
    IntervalSet s({Interval::closed_open(0.5, 0.7), Interval::closed_open(0.2, 0.5),
                   Interval::open(0.8, 0.9)});
    REQUIRE(s.size() == 2);
    CHECK(s.intervals()[0] == Interval::closed_open(0.2, 0.7));
    CHECK(s.intervals()[1] == Interval::open(0.8, 0.9));
    CHECK(s.total_width() == doctest::Approx(0.6));

    // open on both sides of 0.5: the point stays out
    IntervalSet gap({Interval::open(0.2, 0.5), Interval::open(0.5, 0.7)});
    CHECK(gap.size() == 2);
    CHECK_FALSE(gap.contains(0.5));

    IntervalSet nested({Interval::closed(0.1, 0.9), Interval::open(0.2, 0.3)});
    CHECK(nested.size() == 1);
    CHECK(nested.intervals()[0] == Interval::closed(0.1, 0.9));
}

TEST_CASE("interval set intersection and degenerate filtering") {
    IntervalSet a({Interval::open(0.2, 0.9)});
    IntervalSet b({Interval::open(0.5, 0.6), Interval::closed(0.9, 1.0)});
    auto c = a.intersect(b);
    REQUIRE(c.size() == 1);
    CHECK(c.intervals()[0] == Interval::open(0.5, 0.6));

    IntervalSet d({Interval::point(0.5), Interval::closed_open(0.6, 0.8)});
    CHECK(d.without_degenerate().size() == 1);
    CHECK(IntervalSet().empty());
    CHECK(a.intersect(IntervalSet()).empty());
}
