#include "rocaware/analysis.hpp"

#include "rocaware/error.hpp"

namespace rocaware {

ModelAnalysis analyze(const ScoredDataset& ds) {
    if (!ds.both_classes()) throw Error("degenerate class distribution");
    RocCurve curve = build_roc(ds);
    ThresholdProfile prof = profile(ds);
    ModelAnalysis a{
        .items = ds.size(),
        .positives = ds.positives(),
        .negatives = ds.negatives(),
        .prevalence = ds.prevalence(),
        .curve = std::move(curve),
        .profile = std::move(prof),
        .auc = 0.0,
        .band = AucBand::random,
        .strictly_above = false,
        .no_points_below = false,
        .verdict = {},
        .perfect = {},
        .imbalance = {},
    };
    a.auc = a.curve.auc();
    a.band = interpret_auc(a.auc);
    a.strictly_above = strictly_above_bisector(a.curve);
    a.no_points_below = no_points_below_bisector(a.curve);
    a.verdict = check_better_than_random(a.profile);
    a.perfect = perfect_range(a.profile);
    a.imbalance = imbalance_diagnostics(a.profile);
    return a;
}

} // namespace rocaware
