#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rocaware/core_metrics.hpp"

namespace rocaware {

// Per-module feature vectors plus faultiness. Column-major so the IRLS
// accumulations stream over contiguous memory.
class FeatureDataset {
public:
    FeatureDataset(std::vector<std::string> names, std::vector<std::vector<double>> columns,
                   std::vector<std::uint8_t> labels, std::vector<std::string> ids = {});

    std::size_t rows() const { return labels_.size(); }
    std::size_t features() const { return columns_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    std::span<const double> column(std::size_t j) const { return columns_[j]; }
    std::span<const std::uint8_t> labels() const { return labels_; }
    const std::vector<std::string>& ids() const { return ids_; }
    std::size_t positives() const;

    std::size_t index_of(const std::string& name) const;
    FeatureDataset select(std::span<const std::string> names) const;
    FeatureDataset select(std::span<const std::size_t> indices) const;
    FeatureDataset without_row(std::size_t row) const;
    FeatureDataset with_label(std::size_t row, bool positive) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<double>> columns_;
    std::vector<std::uint8_t> labels_;
    std::vector<std::string> ids_;
};

struct FitOptions {
    int max_iterations = 100;
    double tolerance = 1e-8;         // max coefficient change, standardized scale
    double separation_bound = 20.0;  // |coefficient| on the standardized scale
    double ridge = 0.0;              // e.g. 1e-6 to stabilise separable data
};

struct LogisticModel {
    // Intercept first, then one weight per feature, on the original scale.
    std::vector<double> coefficients;
    bool converged = false;
    bool separation = false;
    int iterations = 0;
    double log_likelihood = 0.0;
    double ridge = 0.0;

    // 1 / (1 + exp(-(b0 + b.x)))
    double predict(std::span<const double> x) const;
};

// Maximum-likelihood binary logistic regression by IRLS with step-halving.
// Columns are standardized internally, which makes the fit invariant to
// affine rescaling of any feature. Throws Error on single-class data,
// too few rows (n < m + 2) or collinear features.
LogisticModel fit_logistic(const FeatureDataset& ds, const FitOptions& opts = {});

// Gradient of the (unpenalized) log-likelihood at the given coefficients.
std::vector<double> log_likelihood_gradient(const FeatureDataset& ds,
                                            std::span<const double> coefficients);

struct FoldNote {
    std::size_t row = 0;
    std::string reason;
};

struct LoocvResult {
    ScoredDataset scores;
    std::vector<FoldNote> notes;
};

// Row i is scored by a model fitted on every other row. A fold whose
// training data is single-class or collinear falls back to the training
// prevalence; both that and separation are recorded in notes.
LoocvResult loocv_scores(const FeatureDataset& ds, const FitOptions& opts = {});

} // namespace rocaware
