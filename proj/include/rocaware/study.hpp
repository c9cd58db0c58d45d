#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "rocaware/scorer.hpp"

namespace rocaware {

struct DatasetSpec {
    std::string name;
    std::filesystem::path features;  // feature CSV
};

// Precomputed scores for each (dataset, feature combination). The pattern may
// use {dataset} and {features}; the latter expands to the names joined by '+'.
struct ExternalScorer {
    std::string name;
    std::string path_pattern;
};

struct StudyConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<std::string> features;
    std::size_t k = 3;
    bool builtin_blr = true;
    std::vector<ExternalScorer> external;
    std::filesystem::path output_dir = "study-out";
    double auc_gap = 0.2;
    unsigned threads = 0;  // 0: hardware concurrency
    std::string label_column = "label";
    FitOptions fit;

    std::size_t scorer_count() const { return (builtin_blr ? 1 : 0) + external.size(); }
};

// Relative paths are resolved against the config file's directory.
StudyConfig parse_study_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
StudyConfig load_study_config(const std::filesystem::path& path);

struct ModelSpec {
    std::size_t dataset = 0;
    std::string scorer;
    std::vector<std::string> features;
    std::string feature_key() const;  // names joined by '+'
};

// Ordered by dataset, then feature combination (lexicographic in the
// configured order), then scorer. Throws Error unless 1 <= k <= m.
std::vector<ModelSpec> enumerate_models(const StudyConfig& cfg);

std::size_t binomial(std::size_t n, std::size_t k);

struct ModelRecord {
    std::string dataset;
    std::string scorer;
    std::string features;
    bool ok = false;
    std::string error;
    std::size_t items = 0;
    std::size_t positives = 0;
    double auc = 0.0;
    std::string auc_band;
    bool auc_gt_half = false;
    bool auc_ge_08 = false;
    bool no_points_below = false;
    bool strictly_above = false;
    bool condition1 = false;
    bool perfect_range = false;
    std::size_t fold_notes = 0;
};

struct PairRecord {
    std::string dataset;
    std::size_t model_a = 0;  // indices into the model record list
    std::size_t model_b = 0;
    double auc_gap = 0.0;     // |AUC_a - AUC_b|
    std::string dominance;    // "A", "B", "cross" or "identical"
    std::string superiority;  // "A", "B" or "none"
    // The dominating model is also threshold-superior.
    bool condition2 = false;
};

struct StudyFailure {
    std::string dataset;
    std::string model;  // empty for dataset-level failures
    std::string reason;
};

struct StudyAggregates {
    std::size_t models_enumerated = 0;
    std::size_t total_models = 0;  // successfully evaluated
    std::size_t count_auc_gt_half = 0;
    std::size_t count_no_points_below_bisector = 0;
    std::size_t count_strictly_above = 0;
    std::size_t count_auc_ge_08 = 0;
    std::size_t count_strictly_above_and_auc_ge_08 = 0;
    std::size_t count_condition1_holds = 0;
    std::size_t condition1_within_auc_gt_half = 0;
    std::size_t condition1_within_no_points_below = 0;
    std::size_t condition1_within_strictly_above = 0;
    std::size_t condition1_within_auc_ge_08 = 0;
    std::size_t condition1_within_strictly_above_and_auc_ge_08 = 0;

    double auc_gap_threshold = 0.2;
    std::size_t total_comparisons = 0;
    std::size_t dominance_count = 0;
    std::size_t condition2_count = 0;
    // Superior pairs whose curves coincide, so no strict dominance.
    std::size_t superiority_without_dominance = 0;
    std::size_t comparisons_with_auc_gap_gt = 0;
    std::size_t dominance_with_auc_gap_gt = 0;
    std::size_t condition2_with_auc_gap_gt = 0;
};

struct StudyResult {
    std::vector<ModelRecord> models;
    std::vector<PairRecord> pairs;
    std::vector<StudyFailure> failures;
    StudyAggregates aggregates;
};

StudyResult run_study(const StudyConfig& cfg);

StudyAggregates aggregate(const std::vector<ModelRecord>& models,
                          const std::vector<PairRecord>& pairs, double auc_gap);

nlohmann::json study_report(const StudyResult& r);
std::string models_csv(const std::vector<ModelRecord>& models);
std::string pairs_csv(const std::vector<PairRecord>& pairs);

// study_report.json, models.csv, pairs.csv
void write_study_outputs(const StudyResult& r, const std::filesystem::path& dir);

} // namespace rocaware
