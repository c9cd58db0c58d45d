#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "rocaware/core_metrics.hpp"
#include "rocaware/scorer.hpp"

namespace rocaware {

// Score files: CSV with a header naming `score` and `label` (0/1) columns and
// an optional `id` column, in any order. Other columns are ignored.
ScoredDataset parse_score_csv(std::string_view text, std::string_view source = "<input>");
ScoredDataset read_score_csv(const std::filesystem::path& path);

// Feature files: CSV with a header; the label column (default `label`) holds
// 0/1, an optional `id` column is kept, every other column is a feature.
// Missing cells are rejected.
FeatureDataset parse_feature_csv(std::string_view text, std::string_view source = "<input>",
                                 const std::string& label_column = "label");
FeatureDataset read_feature_csv(const std::filesystem::path& path,
                                const std::string& label_column = "label");

// Writes id (when present), score, label; scores use the shortest
// representation that parses back to the same double.
void write_score_csv(std::ostream& out, const ScoredDataset& ds);

std::string format_double(double v);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

} // namespace rocaware
