#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "rocaware/analysis.hpp"
#include "rocaware/comparison.hpp"
#include "rocaware/interval.hpp"

namespace rocaware {

inline constexpr const char* kSchemaVersion = "1.0";

nlohmann::json to_json(const Interval& iv);
nlohmann::json to_json(const IntervalSet& set);
nlohmann::json to_json(const RandomComparisonVerdict& v);
nlohmann::json to_json(const ImbalanceReport& r);
nlohmann::json to_json(const DominanceVerdict& v);
nlohmann::json to_json(const SuperiorityVerdict& v);
nlohmann::json to_json(const AcceptableComparison& c);
nlohmann::json to_json(const CostCurve& c);

struct AcceptanceBounds {
    double tpr_min = 0.0;
    double fpr_max = 1.0;
};

struct CostModel {
    double cost_fp = 1.0;
    double cost_fn = 1.0;
};

nlohmann::json evaluation_report(const ModelAnalysis& m, const std::string& input,
                                 const std::optional<AcceptanceBounds>& bounds = {},
                                 const std::optional<CostModel>& costs = {});

struct PairAnalysis {
    DominanceVerdict dominance;
    SuperiorityVerdict superiority;
};

PairAnalysis analyze_pair(const ModelAnalysis& a, const ModelAnalysis& b);

// e.g. "A dominates B; A is NOT threshold-superior"
std::string comparison_statement(const PairAnalysis& p);

nlohmann::json comparison_report(const ModelAnalysis& a, const ModelAnalysis& b,
                                 const std::string& input_a, const std::string& input_b,
                                 const std::optional<AcceptanceBounds>& bounds = {},
                                 const std::optional<CostModel>& costs = {});

} // namespace rocaware
