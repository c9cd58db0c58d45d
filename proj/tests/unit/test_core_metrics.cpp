#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "rocaware/core_metrics.hpp"
#include "rocaware/error.hpp"

using namespace rocaware;

namespace {

ScoredDataset make(std::initializer_list<LabeledScore> items) {
    std::vector<LabeledScore> v(items);
    return ScoredDataset(std::span<const LabeledScore>(v));
}

} // namespace

TEST_CASE("dataset construction validates input") {
    CHECK_THROWS_WITH_AS(ScoredDataset(std::vector<double>{}, std::vector<std::uint8_t>{}),
                         "empty dataset", Error);
    CHECK_THROWS_WITH_AS(ScoredDataset(std::vector<double>{1.2}, std::vector<std::uint8_t>{1}),
                         "score out of range [0,1]", Error);
    auto ds = make({{0.9, true}, {0.1, false}, {0.4, false}});
    CHECK(ds.size() == 3);
    CHECK(ds.positives() == 1);
    CHECK(ds.negatives() == 2);
    CHECK(ds.prevalence() == 1.0 / 3.0);
}

TEST_CASE("confusion at threshold uses the strict rule") {
    auto ds = make({{0.9, true}, {0.1, false}});
    CHECK(confusion_at_threshold(ds, 0.5) == ConfusionMatrix{1, 0, 1, 0});

    auto ties = make({{0.5, true}, {0.5, false}, {0.5, true}, {0.5, false}});
    CHECK(confusion_at_threshold(ties, 0.5) == ConfusionMatrix{0, 0, 2, 2});

    auto all_above = make({{0.2, true}, {0.7, false}, {0.01, false}});
    auto r = rates(confusion_at_threshold(all_above, 0.0));
    CHECK(r.tpr == 1.0);
    CHECK(r.fpr == 1.0);

    CHECK_THROWS_WITH_AS(confusion_at_threshold(ds, 1.5), "threshold out of range", Error);
    CHECK_THROWS_WITH_AS(confusion_at_threshold(ds, -0.1), "threshold out of range", Error);
}

TEST_CASE("rates from counts") {
    auto r = rates({8, 3, 7, 2});
    CHECK(r.tpr == doctest::Approx(0.8));
    CHECK(r.fpr == doctest::Approx(0.3));
    CHECK(r.tnr == 1.0 - r.fpr);
    REQUIRE(r.ppv);
    CHECK(*r.ppv == doctest::Approx(8.0 / 11.0));

    auto perfect = rates({5, 0, 5, 0});
    CHECK(perfect.tpr == 1.0);
    CHECK(perfect.fpr == 0.0);
    CHECK(*perfect.ppv == 1.0);

    CHECK_FALSE(rates({0, 0, 4, 3}).ppv.has_value());
    CHECK_THROWS_WITH_AS(rates({3, 0, 0, 2}), "degenerate class distribution", Error);
}

TEST_CASE("random model expectation") {
    auto e = random_expectation(0.4, 10, 90);
    CHECK(e.tp == doctest::Approx(6));
    CHECK(e.fp == doctest::Approx(54));
    CHECK(e.tpr == doctest::Approx(0.6));
    CHECK(e.fpr == e.tpr);

    auto top = random_expectation(1.0, 10, 90);
    CHECK(top.tp == 0.0);
    CHECK(top.fp == 0.0);
    CHECK(top.tn == 90.0);
    CHECK(top.fn == 10.0);
    CHECK(top.tpr == 0.0);

    CHECK(random_expectation(0.0, 3, 4).tpr == 1.0);

    for (int k = 0; k <= 1000; ++k) {
        const double t = k / 1000.0;
        auto x = random_expectation(t, 7, 13);
        CHECK(x.tpr == 1.0 - t);
        CHECK(x.fpr == 1.0 - t);
    }
    CHECK_THROWS_AS(random_expectation(1.1, 1, 1), Error);
}

TEST_CASE("confusion margins, monotonicity and duplication invariance") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = oracle::random_grid_data(rng);
        auto ds = g.dataset();
        std::vector<double> s2;
        std::vector<std::uint8_t> l2;
        for (std::size_t i = 0; i < ds.size(); ++i)
            for (int c = 0; c < 2; ++c) {
                s2.push_back(ds.score(i));
                l2.push_back(ds.labels()[i]);
            }
        ScoredDataset doubled(std::move(s2), std::move(l2));

        ConfusionMatrix prev{};
        for (int k = 0; k <= 100; ++k) {
            const double t = k / 100.0;
            auto cm = confusion_at_threshold(ds, t);
            CHECK(cm.actual_positives() == ds.positives());
            CHECK(cm.actual_negatives() == ds.negatives());
            auto o = oracle::recount(ds, t);
            CHECK(cm.tp == o.tp);
            CHECK(cm.fp == o.fp);
            if (k > 0) {
                CHECK(cm.tp <= prev.tp);
                CHECK(cm.fp <= prev.fp);
            }
            prev = cm;
            auto r1 = rates(cm);
            auto r2 = rates(confusion_at_threshold(doubled, t));
            CHECK(r1.tpr == r2.tpr);
            CHECK(r1.fpr == r2.fpr);
        }
    }
}
