#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rocaware {

/// A classifier's fault-proneness estimate for one module plus its ground truth.
struct LabeledScore {
    double score = 0.0;
    bool positive = false;
};

// Immutable collection of labeled scores. Stored as parallel arrays so the
// threshold tally can run over contiguous memory.
class ScoredDataset {
public:
    // Throws Error("empty dataset") or on a score outside [0,1].
    explicit ScoredDataset(std::span<const LabeledScore> items,
                           std::vector<std::string> ids = {});
    ScoredDataset(std::vector<double> scores, std::vector<std::uint8_t> labels,
                  std::vector<std::string> ids = {});

    std::size_t size() const { return scores_.size(); }
    std::size_t positives() const { return positives_; }
    std::size_t negatives() const { return size() - positives_; }
    double prevalence() const {
        return static_cast<double>(positives_) / static_cast<double>(size());
    }
    bool both_classes() const { return positives_ > 0 && positives_ < size(); }

    double score(std::size_t i) const { return scores_[i]; }
    bool positive(std::size_t i) const { return labels_[i] != 0; }
    LabeledScore item(std::size_t i) const { return {scores_[i], labels_[i] != 0}; }

    std::span<const double> scores() const { return scores_; }
    std::span<const std::uint8_t> labels() const { return labels_; }
    // Empty when the source carried no id column.
    const std::vector<std::string>& ids() const { return ids_; }

    // Distinct score values, ascending.
    std::vector<double> distinct_scores() const;

private:
    void validate();

    std::vector<double> scores_;
    std::vector<std::uint8_t> labels_;
    std::vector<std::string> ids_;
    std::size_t positives_ = 0;
};

struct ConfusionMatrix {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t tn = 0;
    std::size_t fn = 0;

    std::size_t actual_positives() const { return tp + fn; }
    std::size_t actual_negatives() const { return fp + tn; }

    friend bool operator==(const ConfusionMatrix&, const ConfusionMatrix&) = default;
};

struct Rates {
    double tpr = 0.0;
    double fpr = 0.0;
    double tnr = 0.0;             // always 1 - fpr
    std::optional<double> ppv;    // absent without predicted positives
};

// Expected confusion matrix of a classifier that scores uniformly at random.
struct RandomExpectation {
    double threshold = 0.0;
    double tp = 0.0;
    double fp = 0.0;
    double tn = 0.0;
    double fn = 0.0;
    double tpr = 0.0;
    double fpr = 0.0;
};

// An item is estimated positive iff score > t; ties at t are negative.
ConfusionMatrix confusion_at_threshold(const ScoredDataset& ds, double t);

// Throws Error("degenerate class distribution") unless both classes occur.
Rates rates(const ConfusionMatrix& cm);

RandomExpectation random_expectation(double t, std::size_t actual_positives,
                                     std::size_t actual_negatives);

void require_threshold(double t);

} // namespace rocaware
