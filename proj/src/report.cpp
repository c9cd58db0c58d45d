#include "rocaware/report.hpp"

namespace rocaware {

using nlohmann::json;

json to_json(const Interval& iv) {
    if (iv.is_empty()) return nullptr;
    return {{"lo", iv.lo}, {"hi", iv.hi}, {"lo_closed", iv.lo_closed}, {"hi_closed", iv.hi_closed}};
}

json to_json(const IntervalSet& set) {
    json arr = json::array();
    for (const auto& iv : set) arr.push_back(to_json(iv));
    return arr;
}

json to_json(const RandomComparisonVerdict& v) {
    return {{"holds", v.better_than_random},
            {"strict_somewhere", v.strict_somewhere},
            {"touches_baseline", v.touches_baseline},
            {"tpr_violations", to_json(v.tpr_violations)},
            {"fpr_violations", to_json(v.fpr_violations)},
            {"ok_ranges", to_json(v.ok_ranges)}};
}

json to_json(const ImbalanceReport& r) {
    return {{"prevalence", r.prevalence},
            {"score_breakpoints", r.score_breakpoints},
            {"low_breakpoints", r.low_breakpoints},
            {"high_breakpoints", r.high_breakpoints},
            {"arc_fraction_low", r.arc_fraction_low},
            {"arc_fraction_high", r.arc_fraction_high},
            {"concentrated_at_extremes", r.concentrated_at_extremes}};
}

json to_json(const DominanceVerdict& v) {
    return {{"a_dominates_b", v.a_dominates_b},
            {"b_dominates_a", v.b_dominates_a},
            {"curves_cross", v.curves_cross},
            {"identical", v.identical}};
}

json to_json(const SuperiorityVerdict& v) {
    return {{"a_superior", v.a_superior},
            {"b_superior", v.b_superior},
            {"tpr_curves_cross", v.tpr_curves_cross},
            {"fpr_curves_cross", v.fpr_curves_cross},
            {"disagreement_intervals", to_json(v.disagreement_intervals)}};
}

namespace {

json to_json(const AcceptableRange& r) {
    return {{"model", r.model_id}, {"intervals", to_json(r.intervals)}, {"total_width", r.total_width}};
}

json profile_json(const ThresholdProfile& p) {
    return {{"breakpoints", p.breakpoints()}, {"tpr", p.tpr().values()}, {"fpr", p.fpr().values()}};
}

json roc_json(const RocCurve& c) {
    json pts = json::array();
    for (const auto& p : c.points())
        pts.push_back({{"fpr", p.fpr}, {"tpr", p.tpr}, {"thresholds", to_json(p.thresholds)}});
    return pts;
}

json quadrants_json(const ThresholdProfile& p) {
    json arr = json::array();
    for (int m = 1; m <= 9; ++m) {
        const double t = m / 10.0;
        const Quadrant q = quadrant(p, t);
        arr.push_back({{"threshold", t}, {"label", to_string(q.label)}, {"boundary", q.boundary}});
    }
    return arr;
}

json summary_json(const ModelAnalysis& m) {
    return {{"auc", m.auc},
            {"auc_band", to_string(m.band)},
            {"strictly_above_bisector", m.strictly_above},
            {"no_points_below_bisector", m.no_points_below},
            {"better_than_random", m.verdict.better_than_random}};
}

} // namespace

json to_json(const AcceptableComparison& c) {
    return {{"a", to_json(c.a)},
            {"b", to_json(c.b)},
            {"common", to_json(c.common)},
            {"preferred_by_width", to_string(c.by_width)},
            {"preferred_by_rates_in_common", to_string(c.by_rates_in_common)},
            {"summary", c.summary}};
}

json to_json(const CostCurve& c) {
    return {{"cost_fp", c.cost_fp()},
            {"cost_fn", c.cost_fn()},
            {"breakpoints", c.breakpoints()},
            {"values", c.values()},
            {"min_cost", c.min_cost()},
            {"argmin", to_json(c.argmin())}};
}

json evaluation_report(const ModelAnalysis& m, const std::string& input,
                       const std::optional<AcceptanceBounds>& bounds,
                       const std::optional<CostModel>& costs) {
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "evaluation";
    j["input"] = input;
    j["dataset"] = {{"items", m.items},
                    {"positives", m.positives},
                    {"negatives", m.negatives},
                    {"prevalence", m.prevalence}};
    j["auc"] = m.auc;
    j["auc_band"] = to_string(m.band);
    j["bisector"] = {{"strictly_above", m.strictly_above}, {"no_points_below", m.no_points_below}};
    j["better_than_random"] = to_json(m.verdict);
    j["perfect_range"] = to_json(m.perfect.range);
    j["roc"] = roc_json(m.curve);
    j["threshold_profile"] = profile_json(m.profile);
    j["quadrants"] = quadrants_json(m.profile);
    j["imbalance"] = to_json(m.imbalance);
    if (bounds) {
        const auto r = acceptable_ranges(m.profile, bounds->tpr_min, bounds->fpr_max, "model");
        j["acceptable"] = {{"tpr_min", bounds->tpr_min},
                           {"fpr_max", bounds->fpr_max},
                           {"intervals", to_json(r.intervals)},
                           {"total_width", r.total_width}};
    }
    if (costs)
        j["cost"] = to_json(cost_curve(m.profile, costs->cost_fp, costs->cost_fn, m.positives,
                                       m.negatives));
    return j;
}

PairAnalysis analyze_pair(const ModelAnalysis& a, const ModelAnalysis& b) {
    return {dominates(a.curve, b.curve), threshold_superior(a.profile, b.profile)};
}

std::string comparison_statement(const PairAnalysis& p) {
    std::string dom;
    const char* dominant = nullptr;
    if (p.dominance.a_dominates_b) {
        dom = "A dominates B";
        dominant = "A";
    } else if (p.dominance.b_dominates_a) {
        dom = "B dominates A";
        dominant = "B";
    } else if (p.dominance.curves_cross) {
        dom = "the ROC curves cross";
    } else {
        dom = "the ROC curves coincide";
    }

    std::string sup;
    if (p.superiority.a_superior)
        sup = "A is threshold-superior";
    else if (p.superiority.b_superior)
        sup = "B is threshold-superior";
    else if (dominant)
        sup = std::string(dominant) + " is NOT threshold-superior";
    else
        sup = "neither model is threshold-superior";
    return dom + "; " + sup;
}

json comparison_report(const ModelAnalysis& a, const ModelAnalysis& b, const std::string& input_a,
                       const std::string& input_b, const std::optional<AcceptanceBounds>& bounds,
                       const std::optional<CostModel>& costs) {
    const PairAnalysis pa = analyze_pair(a, b);
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "comparison";
    j["inputs"] = {{"a", input_a}, {"b", input_b}};
    j["models"] = {{"a", summary_json(a)}, {"b", summary_json(b)}};
    j["dominance"] = to_json(pa.dominance);
    j["superiority"] = to_json(pa.superiority);
    j["statement"] = comparison_statement(pa);
    if (bounds) {
        auto c = compare_in_acceptable_region(a.profile, b.profile, bounds->tpr_min, bounds->fpr_max);
        json acc = to_json(c);
        acc["tpr_min"] = bounds->tpr_min;
        acc["fpr_max"] = bounds->fpr_max;
        j["acceptable"] = std::move(acc);
    }
    if (costs) {
        const auto ca = cost_curve(a.profile, costs->cost_fp, costs->cost_fn, a.positives, a.negatives);
        const auto cb = cost_curve(b.profile, costs->cost_fp, costs->cost_fn, b.positives, b.negatives);
        const auto cmp = compare_costs(ca, cb);
        j["cost"] = {{"a", to_json(ca)},
                     {"b", to_json(cb)},
                     {"preferred", to_string(cmp.preferred)}};
    }
    return j;
}

} // namespace rocaware
