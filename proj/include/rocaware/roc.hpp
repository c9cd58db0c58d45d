#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "rocaware/core_metrics.hpp"
#include "rocaware/interval.hpp"

namespace rocaware {

// One ROC vertex together with the set of thresholds that produce it.
// For a dataset with ascending distinct scores s_1 < ... < s_k the vertices
// come from [0, s_1), [s_1, s_2), ..., [s_k, 1]. The all-positive vertex
// (1,1) has an empty threshold set when s_1 = 0.
struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    Interval thresholds;
};

// Decorated ROC curve, traversed from (1,1) at the low-threshold end to
// (0,0) at the high-threshold end.
class RocCurve {
public:
    // Validates endpoints and monotonicity; throws Error otherwise.
    explicit RocCurve(std::vector<RocPoint> points);

    const std::vector<RocPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    double auc() const { return auc_; }

    // Index of the vertex whose threshold set contains t, if any.
    std::optional<std::size_t> locate(double t) const;

private:
    friend RocCurve build_roc(const ScoredDataset& ds);
    RocCurve(std::vector<RocPoint> points, double area);

    std::vector<RocPoint> points_;
    double auc_ = 0.0;
};

RocCurve build_roc(const ScoredDataset& ds);

// The random model's curve: vertices (1-t, 1-t) at t = j/steps, each
// decorated with the degenerate threshold set {t}.
RocCurve random_baseline_curve(int steps = 100);

// Trapezoidal area under the piecewise-linear curve.
double auc(const RocCurve& curve);
double auc(const std::vector<RocPoint>& points);

enum class AucBand { worse_than_random, random, poor, acceptable, excellent, outstanding };

AucBand interpret_auc(double a);
std::string_view to_string(AucBand band);

// Every interior vertex (and therefore every segment) strictly above y = x.
bool strictly_above_bisector(const RocCurve& curve);
// No vertex below y = x; segments follow from linearity.
bool no_points_below_bisector(const RocCurve& curve);

} // namespace rocaware
