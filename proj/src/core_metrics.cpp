#include "rocaware/core_metrics.hpp"

#include <algorithm>
#include <cmath>

#include "rocaware/error.hpp"
#include "rocaware/simd/kernels.hpp"

namespace rocaware {

ScoredDataset::ScoredDataset(std::span<const LabeledScore> items, std::vector<std::string> ids)
    : ids_(std::move(ids)) {
    scores_.reserve(items.size());
    labels_.reserve(items.size());
    for (const auto& it : items) {
        scores_.push_back(it.score);
        labels_.push_back(it.positive ? 1 : 0);
    }
    validate();
}

ScoredDataset::ScoredDataset(std::vector<double> scores, std::vector<std::uint8_t> labels,
                             std::vector<std::string> ids)
    : scores_(std::move(scores)), labels_(std::move(labels)), ids_(std::move(ids)) {
    if (scores_.size() != labels_.size()) throw Error("score/label length mismatch");
    for (auto& l : labels_) l = l ? 1 : 0;
    validate();
}

void ScoredDataset::validate() {
    if (scores_.empty()) throw Error("empty dataset");
    if (!ids_.empty() && ids_.size() != scores_.size()) throw Error("id/score length mismatch");
    for (double s : scores_)
        if (!(s >= 0.0 && s <= 1.0)) throw Error("score out of range [0,1]");
    positives_ = static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), 1));
}

std::vector<double> ScoredDataset::distinct_scores() const {
    std::vector<double> s(scores_.begin(), scores_.end());
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

void require_threshold(double t) {
    if (!(t >= 0.0 && t <= 1.0)) throw Error("threshold out of range");
}

ConfusionMatrix confusion_at_threshold(const ScoredDataset& ds, double t) {
    if (ds.size() == 0) throw Error("empty dataset");
    require_threshold(t);
    auto above = simd::count_above(ds.scores(), ds.labels(), t);
    ConfusionMatrix cm;
    cm.tp = above.positives;
    cm.fp = above.negatives;
    cm.fn = ds.positives() - cm.tp;
    cm.tn = ds.negatives() - cm.fp;
    return cm;
}

Rates rates(const ConfusionMatrix& cm) {
    const auto ap = cm.actual_positives();
    const auto an = cm.actual_negatives();
    if (ap == 0 || an == 0) throw Error("degenerate class distribution");
    Rates r;
    r.tpr = static_cast<double>(cm.tp) / static_cast<double>(ap);
    r.fpr = static_cast<double>(cm.fp) / static_cast<double>(an);
    r.tnr = 1.0 - r.fpr;
    if (cm.tp + cm.fp > 0)
        r.ppv = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
    return r;
}

RandomExpectation random_expectation(double t, std::size_t actual_positives,
                                     std::size_t actual_negatives) {
    require_threshold(t);
    const double ap = static_cast<double>(actual_positives);
    const double an = static_cast<double>(actual_negatives);
    RandomExpectation e;
    e.threshold = t;
    e.tp = (1.0 - t) * ap;
    e.fp = (1.0 - t) * an;
    e.tn = t * an;
    e.fn = t * ap;
    e.tpr = 1.0 - t;
    e.fpr = 1.0 - t;
    return e;
}

} // namespace rocaware
