#include "rocaware/roc.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "rocaware/error.hpp"

namespace rocaware {

RocCurve::RocCurve(std::vector<RocPoint> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw Error("ROC curve needs at least two points");
    const auto& first = points_.front();
    const auto& last = points_.back();
    if (first.fpr != 1.0 || first.tpr != 1.0) throw Error("ROC curve must start at (1,1)");
    if (last.fpr != 0.0 || last.tpr != 0.0) throw Error("ROC curve must end at (0,0)");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const auto& a = points_[i - 1];
        const auto& b = points_[i];
        if (b.fpr > a.fpr || b.tpr > a.tpr) throw Error("ROC curve is not monotone");
        if (b.fpr < 0.0 || b.tpr < 0.0) throw Error("ROC coordinate out of range");
    }
    for (const auto& p : points_) {
        const auto& iv = p.thresholds;
        if (!iv.is_empty() && (iv.lo < 0.0 || iv.hi > 1.0 || iv.lo > iv.hi))
            throw Error("ROC threshold annotation out of range");
    }
    auc_ = rocaware::auc(points_);
}

RocCurve::RocCurve(std::vector<RocPoint> points, double area) : RocCurve(std::move(points)) {
    auc_ = area;
}

std::optional<std::size_t> RocCurve::locate(double t) const {
    for (std::size_t i = 0; i < points_.size(); ++i)
        if (points_[i].thresholds.contains(t)) return i;
    return std::nullopt;
}

RocCurve build_roc(const ScoredDataset& ds) {
    if (!ds.both_classes()) throw Error("degenerate class distribution");
    const double ap = static_cast<double>(ds.positives());
    const double an = static_cast<double>(ds.negatives());

    std::vector<std::size_t> order(ds.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return ds.score(a) < ds.score(b); });

    std::size_t tp = ds.positives();
    std::size_t fp = ds.negatives();
    std::vector<RocPoint> pts;
    // Twice the area in count units; one final division keeps AUC = 1 exact.
    std::uint64_t area2 = 0;

    // Walk the distinct scores upward; raising t past a score group moves
    // that whole group to the estimated-negative side.
    double lower = 0.0;
    bool lower_closed = true;
    std::size_t i = 0;
    while (i < order.size()) {
        const double s = ds.score(order[i]);
        Interval regime = (s > lower) ? Interval{lower, s, lower_closed, false} : Interval::empty();
        pts.push_back({static_cast<double>(fp) / an, static_cast<double>(tp) / ap, regime});
        const std::size_t tp0 = tp, fp0 = fp;
        while (i < order.size() && ds.score(order[i]) == s) {
            if (ds.positive(order[i]))
                --tp;
            else
                --fp;
            ++i;
        }
        area2 += static_cast<std::uint64_t>(fp0 - fp) * (tp0 + tp);
        lower = s;
        lower_closed = true;
    }
    pts.push_back({0.0, 0.0, Interval::closed(lower, 1.0)});
    return RocCurve(std::move(pts), static_cast<double>(area2) / (2.0 * ap * an));
}

RocCurve random_baseline_curve(int steps) {
    if (steps < 1) throw Error("random baseline needs at least one step");
    std::vector<RocPoint> pts;
    pts.reserve(static_cast<std::size_t>(steps) + 1);
    for (int j = 0; j <= steps; ++j) {
        const double t = static_cast<double>(j) / static_cast<double>(steps);
        const double r = (j == steps) ? 0.0 : 1.0 - t;
        pts.push_back({r, r, Interval::point(t)});
    }
    return RocCurve(std::move(pts));
}

double auc(const std::vector<RocPoint>& points) {
    double area = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) {
        const auto& a = points[i - 1];
        const auto& b = points[i];
        area += (a.fpr - b.fpr) * (a.tpr + b.tpr) * 0.5;
    }
    return area;
}

double auc(const RocCurve& curve) { return auc(curve.points()); }

AucBand interpret_auc(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw Error("AUC out of range [0,1]");
    if (a < 0.5) return AucBand::worse_than_random;
    if (a == 0.5) return AucBand::random;
    if (a < 0.7) return AucBand::poor;
    if (a < 0.8) return AucBand::acceptable;
    if (a < 0.9) return AucBand::excellent;
    return AucBand::outstanding;
}

std::string_view to_string(AucBand band) {
    switch (band) {
    case AucBand::worse_than_random: return "worse_than_random";
    case AucBand::random: return "random";
    case AucBand::poor: return "poor";
    case AucBand::acceptable: return "acceptable";
    case AucBand::excellent: return "excellent";
    case AucBand::outstanding: return "outstanding";
    }
    return "unknown";
}

bool strictly_above_bisector(const RocCurve& curve) {
    const auto& pts = curve.points();
    if (pts.size() < 3) return false;
    return std::all_of(pts.begin() + 1, pts.end() - 1,
                       [](const RocPoint& p) { return p.tpr > p.fpr; });
}

bool no_points_below_bisector(const RocCurve& curve) {
    const auto& pts = curve.points();
    return std::all_of(pts.begin(), pts.end(), [](const RocPoint& p) { return p.tpr >= p.fpr; });
}

} // namespace rocaware
