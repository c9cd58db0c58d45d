#pragma once

#include <optional>
#include <string_view>

#include "rocaware/core_metrics.hpp"
#include "rocaware/interval.hpp"
#include "rocaware/step_function.hpp"

namespace rocaware {

// TPR(t) and FPR(t) as step functions over a shared breakpoint set.
class ThresholdProfile {
public:
    // Functions with different breakpoints are refined onto their union.
    ThresholdProfile(StepFunction tpr, StepFunction fpr, double prevalence);

    const StepFunction& tpr() const { return tpr_; }
    const StepFunction& fpr() const { return fpr_; }
    double prevalence() const { return prevalence_; }
    const std::vector<double>& breakpoints() const { return tpr_.breakpoints(); }

    // Thresholds strictly inside (0,1) covered by segment i.
    Interval interior_segment(std::size_t i) const;

private:
    StepFunction tpr_;
    StepFunction fpr_;
    double prevalence_;
};

ThresholdProfile profile(const ScoredDataset& ds);

struct RandomComparisonVerdict {
    bool better_than_random = false;
    // Some t in (0,1) with TPR(t) > 1-t or FPR(t) < 1-t.
    bool strict_somewhere = false;
    // The rates meet the line 1-t at isolated thresholds. A holding verdict
    // with this set relies on the non-strict reading of the condition.
    bool touches_baseline = false;
    IntervalSet tpr_violations;  // TPR(t) < 1-t
    IntervalSet fpr_violations;  // FPR(t) > 1-t
    IntervalSet ok_ranges;       // both clauses hold; single points dropped
};

// Exact evaluation of
//   for all t in (0,1): TPR(t) >= 1-t and FPR(t) <= 1-t,
//   and for some t:     TPR(t) >  1-t or  FPR(t) <  1-t.
// A constant c on a segment is compared with the decreasing line 1-t by
// solving c = 1-t once, so no sampling is involved.
RandomComparisonVerdict check_better_than_random(const ThresholdProfile& p);

IntervalSet better_than_random_ranges(const ThresholdProfile& p);

struct PerfectRange {
    Interval range = Interval::empty();
    bool empty() const { return range.is_empty(); }
};

// Maximal set of interior thresholds with TPR = 1 and FPR = 0.
PerfectRange perfect_range(const ThresholdProfile& p);

enum class QuadrantLabel { better, positive_tradeoff, negative_tradeoff, worse };

struct Quadrant {
    QuadrantLabel label = QuadrantLabel::better;
    // A rate equals 1-t; the equality was counted on the non-violating side.
    bool boundary = false;
};

// Position of (FPR(t), TPR(t)) relative to the random point (1-t, 1-t).
// Throws Error unless 0 < t < 1.
Quadrant quadrant(const ThresholdProfile& p, double t);
std::string_view to_string(QuadrantLabel label);

struct ImbalanceReport {
    double prevalence = 0.0;
    std::size_t score_breakpoints = 0;  // thresholds where TPR or FPR drops
    std::size_t low_breakpoints = 0;    // in [0, 0.1)
    std::size_t high_breakpoints = 0;   // in (0.9, 1]
    // Share of the ROC polyline's length contributed by drops at such thresholds.
    double arc_fraction_low = 0.0;
    double arc_fraction_high = 0.0;
    bool concentrated_at_extremes = false;
};

ImbalanceReport imbalance_diagnostics(const ThresholdProfile& p);

} // namespace rocaware
