#pragma once

#include "rocaware/core_metrics.hpp"
#include "rocaware/roc.hpp"
#include "rocaware/threshold_profile.hpp"

namespace rocaware {

// Everything the single-model views need, computed once per dataset.
struct ModelAnalysis {
    std::size_t items = 0;
    std::size_t positives = 0;
    std::size_t negatives = 0;
    double prevalence = 0.0;
    RocCurve curve;
    ThresholdProfile profile;
    double auc = 0.0;
    AucBand band = AucBand::random;
    bool strictly_above = false;
    bool no_points_below = false;
    RandomComparisonVerdict verdict;
    PerfectRange perfect;
    ImbalanceReport imbalance;
};

// Throws Error("degenerate class distribution") for single-class data.
ModelAnalysis analyze(const ScoredDataset& ds);

} // namespace rocaware
