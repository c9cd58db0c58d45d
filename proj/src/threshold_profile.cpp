#include "rocaware/threshold_profile.hpp"

#include <algorithm>
#include <cmath>

#include "rocaware/error.hpp"

namespace rocaware {

namespace {

StepFunction refine_to(const StepFunction& f, const std::vector<double>& bps) {
    return f.breakpoints() == bps ? f : f.refined(bps);
}

} // namespace

ThresholdProfile::ThresholdProfile(StepFunction tpr, StepFunction fpr, double prevalence)
    : tpr_(std::move(tpr)), fpr_(std::move(fpr)), prevalence_(prevalence) {
    if (tpr_.breakpoints() != fpr_.breakpoints()) {
        auto bps = merge_breakpoints(tpr_, fpr_);
        tpr_ = refine_to(tpr_, bps);
        fpr_ = refine_to(fpr_, bps);
    }
    if (!(prevalence_ >= 0.0 && prevalence_ <= 1.0)) throw Error("prevalence outside [0,1]");
}

Interval ThresholdProfile::interior_segment(std::size_t i) const {
    const auto& b = breakpoints();
    if (i + 1 >= b.size()) return Interval::empty();
    return intersect(Interval::closed_open(b[i], b[i + 1]), Interval::unit_interior());
}

ThresholdProfile profile(const ScoredDataset& ds) {
    if (!ds.both_classes()) throw Error("degenerate class distribution");
    const std::size_t ap = ds.positives();
    const std::size_t an = ds.negatives();

    std::vector<double> bps{0.0};
    for (double s : ds.distinct_scores())
        if (s > bps.back()) bps.push_back(s);
    if (bps.back() != 1.0) bps.push_back(1.0);

    std::vector<std::pair<double, bool>> sorted;
    sorted.reserve(ds.size());
    for (std::size_t i = 0; i < ds.size(); ++i) sorted.emplace_back(ds.score(i), ds.positive(i));
    std::sort(sorted.begin(), sorted.end());

    // Items at or below the current breakpoint are estimated negative.
    std::vector<double> tpr, fpr, tpr_c, fpr_c;
    std::size_t fn = 0, tn = 0, k = 0;
    for (double b : bps) {
        while (k < sorted.size() && sorted[k].first <= b) {
            if (sorted[k].second)
                ++fn;
            else
                ++tn;
            ++k;
        }
        const auto dap = static_cast<double>(ap);
        const auto dan = static_cast<double>(an);
        tpr.push_back(static_cast<double>(ap - fn) / dap);
        tpr_c.push_back(static_cast<double>(fn) / dap);
        fpr.push_back(static_cast<double>(an - tn) / dan);
        fpr_c.push_back(static_cast<double>(tn) / dan);
    }
    StepFunction ft(bps, std::move(tpr), std::move(tpr_c));
    StepFunction ff(std::move(bps), std::move(fpr), std::move(fpr_c));
    return ThresholdProfile(std::move(ft), std::move(ff), ds.prevalence());
}

RandomComparisonVerdict check_better_than_random(const ThresholdProfile& p) {
    RandomComparisonVerdict v;
    std::vector<Interval> tpr_bad, fpr_bad, ok;
    const auto& tq = p.tpr().complements();
    const auto& fq = p.fpr().complements();
    for (std::size_t i = 0; i + 1 < p.breakpoints().size(); ++i) {
        const Interval seg = p.interior_segment(i);
        if (seg.is_empty()) continue;
        // TPR >= 1-t  <=>  t >= 1-TPR;   FPR <= 1-t  <=>  t <= 1-FPR
        const double qt = tq[i];
        const double qf = fq[i];
        tpr_bad.push_back(intersect(seg, Interval::below(qt, false)));
        fpr_bad.push_back(intersect(seg, Interval::above(qf, false)));
        ok.push_back(intersect(intersect(seg, Interval::above(qt, true)), Interval::below(qf, true)));
        if (!intersect(seg, Interval::above(qt, false)).is_empty() ||
            !intersect(seg, Interval::below(qf, false)).is_empty())
            v.strict_somewhere = true;
        if (seg.contains(qt) || seg.contains(qf)) v.touches_baseline = true;
    }
    v.tpr_violations = IntervalSet(std::move(tpr_bad));
    v.fpr_violations = IntervalSet(std::move(fpr_bad));
    v.ok_ranges = IntervalSet(std::move(ok)).without_degenerate();
    v.better_than_random = v.tpr_violations.empty() && v.fpr_violations.empty() && v.strict_somewhere;
    return v;
}

IntervalSet better_than_random_ranges(const ThresholdProfile& p) {
    return check_better_than_random(p).ok_ranges;
}

PerfectRange perfect_range(const ThresholdProfile& p) {
    std::vector<Interval> pieces;
    const auto& tv = p.tpr().values();
    const auto& fv = p.fpr().values();
    for (std::size_t i = 0; i + 1 < p.breakpoints().size(); ++i)
        if (tv[i] == 1.0 && fv[i] == 0.0) pieces.push_back(p.interior_segment(i));
    IntervalSet set(std::move(pieces));
    PerfectRange r;
    if (!set.empty()) {
        // Monotone rates make the set a single interval; take the hull otherwise.
        const auto& ivs = set.intervals();
        r.range = {ivs.front().lo, ivs.back().hi, ivs.front().lo_closed, ivs.back().hi_closed};
    }
    return r;
}

Quadrant quadrant(const ThresholdProfile& p, double t) {
    if (!(t > 0.0 && t < 1.0)) throw Error("quadrant is defined for thresholds in (0,1)");
    const double qt = p.tpr().complement_at(t);
    const double qf = p.fpr().complement_at(t);
    const bool tpr_ok = t >= qt;
    const bool fpr_ok = t <= qf;
    Quadrant q;
    q.boundary = (t == qt) || (t == qf);
    if (tpr_ok && fpr_ok)
        q.label = QuadrantLabel::better;
    else if (tpr_ok)
        q.label = QuadrantLabel::positive_tradeoff;
    else if (fpr_ok)
        q.label = QuadrantLabel::negative_tradeoff;
    else
        q.label = QuadrantLabel::worse;
    return q;
}

std::string_view to_string(QuadrantLabel label) {
    switch (label) {
    case QuadrantLabel::better: return "better";
    case QuadrantLabel::positive_tradeoff: return "positive_tradeoff";
    case QuadrantLabel::negative_tradeoff: return "negative_tradeoff";
    case QuadrantLabel::worse: return "worse";
    }
    return "unknown";
}

ImbalanceReport imbalance_diagnostics(const ThresholdProfile& p) {
    ImbalanceReport r;
    r.prevalence = p.prevalence();
    const auto& b = p.breakpoints();
    const auto& tv = p.tpr().values();
    const auto& fv = p.fpr().values();
    double arc = 0.0, arc_low = 0.0, arc_high = 0.0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        const double dt = (i == 0 ? 1.0 : tv[i - 1]) - tv[i];
        const double df = (i == 0 ? 1.0 : fv[i - 1]) - fv[i];
        if (dt <= 0.0 && df <= 0.0) continue;
        const double len = std::hypot(dt, df);
        ++r.score_breakpoints;
        arc += len;
        if (b[i] < 0.1) {
            ++r.low_breakpoints;
            arc_low += len;
        } else if (b[i] > 0.9) {
            ++r.high_breakpoints;
            arc_high += len;
        }
    }
    if (arc > 0.0) {
        r.arc_fraction_low = arc_low / arc;
        r.arc_fraction_high = arc_high / arc;
    }
    r.concentrated_at_extremes = 2 * (r.low_breakpoints + r.high_breakpoints) > r.score_breakpoints;
    return r;
}

} // namespace rocaware
