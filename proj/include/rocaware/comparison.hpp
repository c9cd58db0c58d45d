#pragma once

#include <string>
#include <string_view>

#include "rocaware/interval.hpp"
#include "rocaware/roc.hpp"
#include "rocaware/threshold_profile.hpp"

namespace rocaware {

// Dominance in ROC space: threshold-free, curves compared as functions of FPR.
struct DominanceVerdict {
    bool a_dominates_b = false;
    bool b_dominates_a = false;
    bool curves_cross = false;
    bool identical = false;  // neither curve is above the other anywhere
};

// Vertical segments are handled by comparing both one-sided limits at every
// abscissa of either curve; between abscissae both curves are linear.
// Differences within 1e-12 count as ties.
DominanceVerdict dominates(const RocCurve& a, const RocCurve& b);

// Threshold superiority: for all t in (0,1), TPR_A(t) >= TPR_B(t) and
// FPR_A(t) <= FPR_B(t), with a strict improvement somewhere.
struct SuperiorityVerdict {
    bool a_superior = false;
    bool b_superior = false;
    bool tpr_curves_cross = false;
    bool fpr_curves_cross = false;
    // Thresholds where one model is better on one rate and worse on the other.
    IntervalSet disagreement_intervals;
};

SuperiorityVerdict threshold_superior(const ThresholdProfile& pa, const ThresholdProfile& pb);

struct AcceptableRange {
    std::string model_id;
    IntervalSet intervals;  // TPR(t) >= tpr_min and FPR(t) <= fpr_max, t in (0,1)
    double total_width = 0.0;
};

AcceptableRange acceptable_ranges(const ThresholdProfile& p, double tpr_min, double fpr_max,
                                  std::string model_id = {});

enum class Preference { model_a, model_b, none };
std::string_view to_string(Preference p);

struct AcceptableComparison {
    AcceptableRange a;
    AcceptableRange b;
    IntervalSet common;
    // Wider acceptable range is preferred.
    Preference by_width = Preference::none;
    // Better on both rates throughout the common range (strictly somewhere).
    Preference by_rates_in_common = Preference::none;
    std::string summary;
};

AcceptableComparison compare_in_acceptable_region(const ThresholdProfile& pa,
                                                  const ThresholdProfile& pb, double tpr_min,
                                                  double fpr_max);

// Expected misclassification cost as a function of the threshold:
//   cost(t) = c_fp * FPR(t) * AN + c_fn * (1 - TPR(t)) * AP
class CostCurve {
public:
    const std::vector<double>& breakpoints() const { return breakpoints_; }
    const std::vector<double>& values() const { return values_; }
    double at(double t) const;

    double cost_fp() const { return c_fp_; }
    double cost_fn() const { return c_fn_; }
    double min_cost() const { return min_cost_; }
    // Interior thresholds attaining the minimum (ties within 1e-12 relative).
    const IntervalSet& argmin() const { return argmin_; }

private:
    friend CostCurve cost_curve(const ThresholdProfile&, double, double, std::size_t,
                                std::size_t);

    std::vector<double> breakpoints_;
    std::vector<double> values_;
    double c_fp_ = 0.0;
    double c_fn_ = 0.0;
    double min_cost_ = 0.0;
    IntervalSet argmin_;
};

CostCurve cost_curve(const ThresholdProfile& p, double cost_fp, double cost_fn,
                     std::size_t actual_positives, std::size_t actual_negatives);

struct CostComparison {
    double min_cost_a = 0.0;
    double min_cost_b = 0.0;
    double argmin_width_a = 0.0;
    double argmin_width_b = 0.0;
    // Lower minimum cost wins; a tie goes to the wider minimizing range.
    Preference preferred = Preference::none;
};

CostComparison compare_costs(const CostCurve& a, const CostCurve& b);

} // namespace rocaware
