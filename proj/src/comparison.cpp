#include "rocaware/comparison.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

#include "rocaware/error.hpp"

namespace rocaware {

namespace {

constexpr double kCurveTolerance = 1e-12;

// A curve as a function of FPR: at each abscissa the lowest and highest TPR
// reached there (they differ on vertical segments).
struct Column {
    double x;
    double lo;
    double hi;
};

std::vector<Column> columns(const RocCurve& c) {
    std::vector<Column> cols;
    const auto& pts = c.points();
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        if (!cols.empty() && cols.back().x == it->fpr) {
            cols.back().lo = std::min(cols.back().lo, it->tpr);
            cols.back().hi = std::max(cols.back().hi, it->tpr);
        } else {
            cols.push_back({it->fpr, it->tpr, it->tpr});
        }
    }
    return cols;
}

// Left and right limits of the curve's TPR at x.
std::pair<double, double> limits_at(const std::vector<Column>& cols, double x) {
    auto it = std::lower_bound(cols.begin(), cols.end(), x,
                               [](const Column& c, double v) { return c.x < v; });
    if (it != cols.end() && it->x == x) return {it->lo, it->hi};
    const auto& right = *it;
    const auto& left = *std::prev(it);
    const double y = left.hi + (right.lo - left.hi) * (x - left.x) / (right.x - left.x);
    return {y, y};
}

int sign_with_tolerance(double d) {
    if (d > kCurveTolerance) return 1;
    if (d < -kCurveTolerance) return -1;
    return 0;
}

int sign_exact(double d) { return (d > 0.0) - (d < 0.0); }

std::pair<ThresholdProfile, ThresholdProfile> aligned(const ThresholdProfile& pa,
                                                      const ThresholdProfile& pb) {
    if (pa.breakpoints() == pb.breakpoints()) return {pa, pb};
    std::vector<double> bps;
    std::set_union(pa.breakpoints().begin(), pa.breakpoints().end(), pb.breakpoints().begin(),
                   pb.breakpoints().end(), std::back_inserter(bps));
    ThresholdProfile ra(pa.tpr().refined(bps), pa.fpr().refined(bps), pa.prevalence());
    ThresholdProfile rb(pb.tpr().refined(bps), pb.fpr().refined(bps), pb.prevalence());
    return {std::move(ra), std::move(rb)};
}

} // namespace

DominanceVerdict dominates(const RocCurve& a, const RocCurve& b) {
    const auto ca = columns(a);
    const auto cb = columns(b);
    std::vector<double> xs;
    for (const auto& c : ca) xs.push_back(c.x);
    for (const auto& c : cb) xs.push_back(c.x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    bool a_above = false, b_above = false;
    for (double x : xs) {
        auto [alo, ahi] = limits_at(ca, x);
        auto [blo, bhi] = limits_at(cb, x);
        for (int s : {sign_with_tolerance(alo - blo), sign_with_tolerance(ahi - bhi)}) {
            if (s > 0) a_above = true;
            if (s < 0) b_above = true;
        }
    }
    DominanceVerdict v;
    v.a_dominates_b = a_above && !b_above;
    v.b_dominates_a = b_above && !a_above;
    v.curves_cross = a_above && b_above;
    v.identical = !a_above && !b_above;
    return v;
}

SuperiorityVerdict threshold_superior(const ThresholdProfile& pa, const ThresholdProfile& pb) {
    const auto [ra, rb] = aligned(pa, pb);
    SuperiorityVerdict v;
    bool a_ok = true, b_ok = true, a_strict = false, b_strict = false;
    bool tpr_a_higher = false, tpr_b_higher = false, fpr_a_lower = false, fpr_b_lower = false;
    std::vector<Interval> disagree;
    for (std::size_t i = 0; i + 1 < ra.breakpoints().size(); ++i) {
        const Interval seg = ra.interior_segment(i);
        if (seg.is_empty()) continue;
        // positive: model A better on that rate
        const int dt = sign_exact(ra.tpr().values()[i] - rb.tpr().values()[i]);
        const int df = sign_exact(rb.fpr().values()[i] - ra.fpr().values()[i]);
        if (dt < 0 || df < 0) a_ok = false;
        if (dt > 0 || df > 0) b_ok = false;
        if (dt > 0 || df > 0) a_strict = true;
        if (dt < 0 || df < 0) b_strict = true;
        tpr_a_higher |= dt > 0;
        tpr_b_higher |= dt < 0;
        fpr_a_lower |= df > 0;
        fpr_b_lower |= df < 0;
        if (dt * df < 0) disagree.push_back(seg);
    }
    v.a_superior = a_ok && a_strict;
    v.b_superior = b_ok && b_strict;
    v.tpr_curves_cross = tpr_a_higher && tpr_b_higher;
    v.fpr_curves_cross = fpr_a_lower && fpr_b_lower;
    v.disagreement_intervals = IntervalSet(std::move(disagree));
    return v;
}

AcceptableRange acceptable_ranges(const ThresholdProfile& p, double tpr_min, double fpr_max,
                                  std::string model_id) {
    if (std::isnan(tpr_min) || std::isnan(fpr_max)) throw Error("acceptance bounds must be numbers");
    std::vector<Interval> pieces;
    const auto& tv = p.tpr().values();
    const auto& fv = p.fpr().values();
    for (std::size_t i = 0; i + 1 < p.breakpoints().size(); ++i)
        if (tv[i] >= tpr_min && fv[i] <= fpr_max) pieces.push_back(p.interior_segment(i));
    AcceptableRange r;
    r.model_id = std::move(model_id);
    r.intervals = IntervalSet(std::move(pieces));
    r.total_width = r.intervals.total_width();
    return r;
}

std::string_view to_string(Preference p) {
    switch (p) {
    case Preference::model_a: return "A";
    case Preference::model_b: return "B";
    case Preference::none: return "none";
    }
    return "none";
}

AcceptableComparison compare_in_acceptable_region(const ThresholdProfile& pa,
                                                  const ThresholdProfile& pb, double tpr_min,
                                                  double fpr_max) {
    AcceptableComparison c;
    c.a = acceptable_ranges(pa, tpr_min, fpr_max, "A");
    c.b = acceptable_ranges(pb, tpr_min, fpr_max, "B");
    c.common = c.a.intervals.intersect(c.b.intervals);

    if (c.a.total_width > c.b.total_width)
        c.by_width = Preference::model_a;
    else if (c.b.total_width > c.a.total_width)
        c.by_width = Preference::model_b;

    if (c.common.empty()) {
        c.summary = "no common acceptable threshold";
        return c;
    }

    const auto [ra, rb] = aligned(pa, pb);
    bool a_ok = true, b_ok = true, a_strict = false, b_strict = false;
    for (std::size_t i = 0; i + 1 < ra.breakpoints().size(); ++i) {
        const auto overlap = c.common.intersect(ra.interior_segment(i));
        if (overlap.total_width() <= 0.0) continue;
        const int dt = sign_exact(ra.tpr().values()[i] - rb.tpr().values()[i]);
        const int df = sign_exact(rb.fpr().values()[i] - ra.fpr().values()[i]);
        if (dt < 0 || df < 0) a_ok = false;
        if (dt > 0 || df > 0) b_ok = false;
        if (dt > 0 || df > 0) a_strict = true;
        if (dt < 0 || df < 0) b_strict = true;
    }
    if (a_ok && a_strict)
        c.by_rates_in_common = Preference::model_a;
    else if (b_ok && b_strict)
        c.by_rates_in_common = Preference::model_b;

    c.summary = "width criterion prefers " + std::string(to_string(c.by_width)) +
                "; in-range rate criterion prefers " + std::string(to_string(c.by_rates_in_common));
    return c;
}

double CostCurve::at(double t) const {
    require_threshold(t);
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    return values_[static_cast<std::size_t>(std::distance(breakpoints_.begin(), it)) - 1];
}

CostCurve cost_curve(const ThresholdProfile& p, double cost_fp, double cost_fn,
                     std::size_t actual_positives, std::size_t actual_negatives) {
    if (!(cost_fp >= 0.0) || !(cost_fn >= 0.0)) throw Error("costs must be non-negative");
    if (cost_fp == 0.0 && cost_fn == 0.0) throw Error("degenerate cost model");
    if (actual_positives == 0 || actual_negatives == 0)
        throw Error("degenerate class distribution");

    const double ap = static_cast<double>(actual_positives);
    const double an = static_cast<double>(actual_negatives);
    CostCurve c;
    c.c_fp_ = cost_fp;
    c.c_fn_ = cost_fn;
    c.breakpoints_ = p.breakpoints();
    const auto& fv = p.fpr().values();
    const auto& tq = p.tpr().complements();
    for (std::size_t i = 0; i < c.breakpoints_.size(); ++i)
        c.values_.push_back(cost_fp * fv[i] * an + cost_fn * tq[i] * ap);

    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < c.breakpoints_.size(); ++i)
        if (!p.interior_segment(i).is_empty()) best = std::min(best, c.values_[i]);
    c.min_cost_ = best;
    const double slack = 1e-12 * std::max(1.0, std::abs(best));
    std::vector<Interval> pieces;
    for (std::size_t i = 0; i + 1 < c.breakpoints_.size(); ++i)
        if (c.values_[i] <= best + slack) pieces.push_back(p.interior_segment(i));
    c.argmin_ = IntervalSet(std::move(pieces));
    return c;
}

CostComparison compare_costs(const CostCurve& a, const CostCurve& b) {
    CostComparison r;
    r.min_cost_a = a.min_cost();
    r.min_cost_b = b.min_cost();
    r.argmin_width_a = a.argmin().total_width();
    r.argmin_width_b = b.argmin().total_width();
    const double slack = 1e-12 * std::max({1.0, std::abs(r.min_cost_a), std::abs(r.min_cost_b)});
    if (r.min_cost_a < r.min_cost_b - slack)
        r.preferred = Preference::model_a;
    else if (r.min_cost_b < r.min_cost_a - slack)
        r.preferred = Preference::model_b;
    else if (r.argmin_width_a > r.argmin_width_b)
        r.preferred = Preference::model_a;
    else if (r.argmin_width_b > r.argmin_width_a)
        r.preferred = Preference::model_b;
    return r;
}

} // namespace rocaware
