#include "doctest.h"

#include <random>
#include <string>

#include "oracles.hpp"
#include "rocaware/comparison.hpp"
#include "rocaware/error.hpp"

using namespace rocaware;

namespace {

ScoredDataset make(std::vector<double> s, std::vector<std::uint8_t> l) {
    return ScoredDataset(std::move(s), std::move(l));
}

RocCurve curve(std::vector<std::pair<double, double>> pts) {
    std::vector<RocPoint> v;
    for (auto [x, y] : pts) v.push_back({x, y, Interval::empty()});
    return RocCurve(std::move(v));
}

IntervalSet set_of(std::initializer_list<Interval> ivs) { return IntervalSet(std::vector<Interval>(ivs)); }

const std::vector<std::uint8_t> kLabels{1, 1, 0, 0};

} // namespace

TEST_CASE("dominance basics") {
    auto perfect = build_roc(make({1, 1, 0, 0}, kLabels));
    auto v = dominates(perfect, random_baseline_curve());
    CHECK(v.a_dominates_b);
    CHECK_FALSE(v.b_dominates_a);
    CHECK_FALSE(v.curves_cross);

    auto same = dominates(perfect, perfect);
    CHECK_FALSE(same.a_dominates_b);
    CHECK_FALSE(same.b_dominates_a);
    CHECK_FALSE(same.curves_cross);
    CHECK(same.identical);

    auto a = curve({{1, 1}, {0.5, 0.9}, {0.25, 0.3}, {0, 0}});
    auto b = curve({{1, 1}, {0.5, 0.7}, {0.25, 0.6}, {0, 0}});
    auto x = dominates(a, b);
    CHECK(x.curves_cross);
    CHECK_FALSE(x.a_dominates_b);
    CHECK_FALSE(x.b_dominates_a);
    auto y = dominates(b, a);
    CHECK(y.curves_cross);
}

TEST_CASE("dominance sees vertical segments") {
    // same vertices except A reaches (0, 0.5) while B drops straight to (0,0)
    auto a = curve({{1, 1}, {0, 1}, {0, 0.5}, {0, 0}});
    auto b = curve({{1, 1}, {0, 1}, {0, 0}});
    auto v = dominates(a, b);
    CHECK(v.identical);  // same point set in ROC space
    auto c = curve({{1, 1}, {0.5, 1}, {0, 0.5}, {0, 0}});
    auto d = curve({{1, 1}, {0.5, 1}, {0, 0}});
    CHECK(dominates(c, d).a_dominates_b);
}

TEST_CASE("perfect model is threshold-superior to an imperfect one") {
    auto pa = profile(make({0.9, 0.8, 0.2, 0.1}, kLabels));
    auto pb = profile(make({0.7, 0.3, 0.6, 0.1}, kLabels));
    auto s = threshold_superior(pa, pb);
    CHECK(s.a_superior);
    CHECK_FALSE(s.b_superior);
    CHECK(dominates(build_roc(make({0.9, 0.8, 0.2, 0.1}, kLabels)),
                    build_roc(make({0.7, 0.3, 0.6, 0.1}, kLabels)))
              .a_dominates_b);
}

TEST_CASE("crossing threshold profiles: neither superior") {
    auto pa = profile(make({0.9, 0.2, 0.3, 0.1}, kLabels));
    auto pb = profile(make({0.6, 0.5, 0.7, 0.1}, kLabels));
    auto s = threshold_superior(pa, pb);
    CHECK_FALSE(s.a_superior);
    CHECK_FALSE(s.b_superior);
    CHECK(s.tpr_curves_cross);
    CHECK_FALSE(s.disagreement_intervals.empty());
    CHECK(s.disagreement_intervals.contains(0.45));
}

TEST_CASE("dominance without threshold superiority") {
    // A separates perfectly with low scores; B is imperfect but scores its
    // top positive high, so B has the better TPR at t = 0.7
    auto da = make({0.6, 0.55, 0.2, 0.1}, kLabels);
    auto db = make({0.9, 0.3, 0.5, 0.05}, kLabels);
    CHECK(dominates(build_roc(da), build_roc(db)).a_dominates_b);
    auto s = threshold_superior(profile(da), profile(db));
    CHECK_FALSE(s.a_superior);
    CHECK(profile(db).tpr().at(0.7) > profile(da).tpr().at(0.7));
}

TEST_CASE("threshold superiority without strict dominance: identical curves") {
    // same ranking, different scale: curves coincide yet A is superior
    auto da = make({0.9, 0.9, 0.1, 0.1}, kLabels);
    auto db = make({0.6, 0.6, 0.4, 0.4}, kLabels);
    auto d = dominates(build_roc(da), build_roc(db));
    CHECK(d.identical);
    CHECK_FALSE(d.a_dominates_b);
    CHECK(threshold_superior(profile(da), profile(db)).a_superior);
}

TEST_CASE("superiority implies dominance or coincident curves on random pairs") {
    std::mt19937_64 rng(8);
    int superior = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto ga = oracle::random_grid_data(rng);
        auto gb = ga;
        std::uniform_int_distribution<int> any(0, 100);
        std::uniform_real_distribution<double> u(0, 1);
        for (auto& p : gb.pct)
            if (u(rng) < 0.5) p = any(rng);
        auto da = ga.dataset(), db = gb.dataset();
        auto s = threshold_superior(profile(da), profile(db));
        auto d = dominates(build_roc(da), build_roc(db));
        CHECK_FALSE((s.a_superior && s.b_superior));
        CHECK_FALSE((d.a_dominates_b && d.b_dominates_a));
        if (s.a_superior) {
            ++superior;
            CHECK((d.a_dominates_b || d.identical));
        }
        if (s.b_superior) CHECK((d.b_dominates_a || d.identical));
    }
    MESSAGE("superior pairs seen: " << superior);
}

TEST_CASE("acceptable ranges") {
    auto perfect = profile(make({1, 1, 0, 0}, kLabels));
    auto r = acceptable_ranges(perfect, 0.7, 0.3, "A");
    CHECK(r.intervals == set_of({Interval::open(0, 1)}));
    CHECK(r.total_width == 1.0);
    CHECK(r.model_id == "A");

    auto uniform = profile(make({0.5, 0.5, 0.5, 0.5}, {1, 0, 1, 0}));
    CHECK(acceptable_ranges(uniform, 0.7, 0.3).intervals.empty());

    ThresholdProfile hand(StepFunction({0, 0.6, 1}, {0.8, 0.4, 0.4}),
                          StepFunction({0, 0.3, 1}, {0.5, 0.2, 0.2}), 0.5);
    CHECK(acceptable_ranges(hand, 0.7, 0.3).intervals == set_of({Interval::closed_open(0.3, 0.6)}));

    CHECK(acceptable_ranges(uniform, 0.0, 1.0).intervals == set_of({Interval::open(0, 1)}));
    CHECK(acceptable_ranges(perfect, 1.0 + 1e-9, 1.0).intervals.empty());
    CHECK_THROWS_AS(acceptable_ranges(perfect, std::nan(""), 0.3), Error);
}

TEST_CASE("acceptable ranges agree with a dense grid") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = oracle::random_grid_data(rng);
        auto ds = g.dataset();
        const double tmin = u(rng), fmax = u(rng);
        auto r = acceptable_ranges(profile(ds), tmin, fmax);
        std::vector<std::pair<int, int>> runs;
        for (int k = 1; k < oracle::kGrid; ++k) {
            auto o = oracle::recount(ds, static_cast<double>(k) / oracle::kGrid);
            const bool ok = static_cast<double>(o.tp) / static_cast<double>(o.ap) >= tmin &&
                            static_cast<double>(o.fp) / static_cast<double>(o.an) <= fmax;
            if (!ok) continue;
            if (!runs.empty() && runs.back().second == k - 1)
                runs.back().second = k;
            else
                runs.emplace_back(k, k);
        }
        std::string why;
        CHECK_MESSAGE(oracle::matches_runs(r.intervals, runs, &why), why);
    }
}

TEST_CASE("comparison inside the acceptable region") {
    ThresholdProfile a(StepFunction({0, 0.9, 1}, {0.8, 0, 0}),
                       StepFunction({0, 0.2, 1}, {0.5, 0.05, 0.05}), 0.5);
    ThresholdProfile b(StepFunction({0, 0.6, 1}, {0.8, 0, 0}),
                       StepFunction({0, 0.5, 1}, {0.5, 0.1, 0.1}), 0.5);
    auto c = compare_in_acceptable_region(a, b, 0.7, 0.3);
    CHECK(c.a.intervals == set_of({Interval::closed_open(0.2, 0.9)}));
    CHECK(c.b.intervals == set_of({Interval::closed_open(0.5, 0.6)}));
    CHECK(c.by_width == Preference::model_a);
    CHECK(c.common == set_of({Interval::closed_open(0.5, 0.6)}));
    CHECK(c.by_rates_in_common == Preference::model_a);

    ThresholdProfile late(StepFunction({0, 0.95, 1}, {0.8, 0, 0}),
                          StepFunction({0, 0.92, 1}, {0.5, 0.1, 0.1}), 0.5);
    auto d = compare_in_acceptable_region(b, late, 0.7, 0.3);
    CHECK(d.common.empty());
    CHECK(d.summary == "no common acceptable threshold");
}

TEST_CASE("cost curves") {
    auto ds = make({0.45, 0.45, 0.3, 0.1}, kLabels);
    auto c = cost_curve(profile(ds), 1.0, 2.0, 2, 2);
    CHECK(c.at(0.35) == 0.0);
    CHECK(c.min_cost() == 0.0);
    CHECK(c.argmin() == set_of({Interval::closed_open(0.3, 0.45)}));
    CHECK(c.at(0.5) == doctest::Approx(2.0 * 2));   // all negative: c_fn * AP
    CHECK(c.at(0.05) == doctest::Approx(1.0 * 2));  // all positive: c_fp * AN
    CHECK_THROWS_WITH_AS(cost_curve(profile(ds), 0, 0, 2, 2), "degenerate cost model", Error);
    CHECK_THROWS_AS(cost_curve(profile(ds), -1, 1, 2, 2), Error);

    auto worse = cost_curve(profile(make({0.7, 0.3, 0.6, 0.1}, kLabels)), 1.0, 2.0, 2, 2);
    auto cmp = compare_costs(c, worse);
    CHECK(cmp.preferred == Preference::model_a);
    CHECK(compare_costs(c, c).preferred == Preference::none);
}

TEST_CASE("equal-cost minimum lies where the model beats random") {
    std::mt19937_64 rng(29);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        // positives pushed up, negatives down, so the condition often holds;
        // it needs a positive at 1 and a negative at 0
        auto g = oracle::random_grid_data(rng);
        bool top = false, bottom = false;
        for (std::size_t i = 0; i < g.pct.size(); ++i) {
            g.pct[i] = g.label[i] ? 45 + g.pct[i] * 55 / 100 : g.pct[i] * 55 / 100;
            if (g.label[i] && !top) g.pct[i] = 100, top = true;
            if (!g.label[i] && !bottom) g.pct[i] = 0, bottom = true;
        }
        auto ds = g.dataset();
        auto p = profile(ds);
        auto v = check_better_than_random(p);
        if (!v.better_than_random) continue;
        ++checked;
        auto c = cost_curve(p, 1.0, 1.0, ds.positives(), ds.negatives());
        for (const auto& iv : c.argmin()) {
            const double mid = 0.5 * (iv.lo + iv.hi);
            CHECK(v.ok_ranges.contains(mid));
        }
    }
    MESSAGE("datasets better than random: " << checked);
    CHECK(checked > 0);
}
