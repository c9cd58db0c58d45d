#include "rocaware/study.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "rocaware/analysis.hpp"
#include "rocaware/error.hpp"
#include "rocaware/io.hpp"
#include "rocaware/report.hpp"

namespace rocaware {

using nlohmann::json;

namespace {

constexpr double kAucTolerance = 1e-12;

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base / path;
}

template <class T>
T get_or(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw Error(std::string("config: '") + key + "' has the wrong type");
    }
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
    for (std::size_t pos = 0; (pos = s.find(from, pos)) != std::string::npos; pos += to.size())
        s.replace(pos, from.size(), to);
    return s;
}

std::string csv_cell(std::string s) { return replace_all(replace_all(s, ",", ";"), "\n", " "); }

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < n;) fn(i);
        });
}

} // namespace

StudyConfig parse_study_config(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw Error("config: expected a JSON object");
    static const std::vector<std::string> known = {"datasets", "features", "k",       "scorers",
                                                   "output_dir", "auc_gap", "threads", "label_column",
                                                   "fit"};
    for (const auto& [key, _] : j.items())
        if (std::find(known.begin(), known.end(), key) == known.end())
            throw Error("config: unknown key '" + key + "'");

    StudyConfig cfg;
    if (!j.contains("datasets") || !j["datasets"].is_array() || j["datasets"].empty())
        throw Error("config: 'datasets' must be a non-empty array");
    for (const auto& d : j["datasets"]) {
        DatasetSpec spec;
        if (d.is_string()) {
            spec.features = resolve(base_dir, d.get<std::string>());
            spec.name = spec.features.stem().string();
        } else if (d.is_object() && d.contains("features") && d["features"].is_string()) {
            spec.features = resolve(base_dir, d["features"].get<std::string>());
            spec.name = get_or<std::string>(d, "name", spec.features.stem().string());
        } else {
            throw Error("config: each dataset needs a 'features' path");
        }
        cfg.datasets.push_back(std::move(spec));
    }
    if (!j.contains("features") || !j["features"].is_array())
        throw Error("config: 'features' must list the feature columns");
    for (const auto& f : j["features"]) {
        if (!f.is_string()) throw Error("config: feature names must be strings");
        cfg.features.push_back(f.get<std::string>());
    }
    cfg.k = get_or<std::size_t>(j, "k", 3);
    cfg.auc_gap = get_or<double>(j, "auc_gap", 0.2);
    cfg.threads = get_or<unsigned>(j, "threads", 0);
    cfg.label_column = get_or<std::string>(j, "label_column", "label");
    cfg.output_dir = resolve(base_dir, get_or<std::string>(j, "output_dir", "study-out"));

    if (j.contains("scorers")) {
        cfg.builtin_blr = false;
        for (const auto& s : j["scorers"]) {
            if (s.is_string() && s.get<std::string>() == "blr") {
                cfg.builtin_blr = true;
            } else if (s.is_object() && s.contains("name") && s.contains("path")) {
                cfg.external.push_back({s["name"].get<std::string>(),
                                        resolve(base_dir, s["path"].get<std::string>()).string()});
            } else {
                throw Error("config: scorers are \"blr\" or {\"name\", \"path\"} objects");
            }
        }
    }
    if (cfg.scorer_count() == 0) throw Error("config: at least one scorer is required");

    if (j.contains("fit")) {
        const auto& f = j["fit"];
        cfg.fit.max_iterations = get_or<int>(f, "max_iterations", cfg.fit.max_iterations);
        cfg.fit.tolerance = get_or<double>(f, "tolerance", cfg.fit.tolerance);
        cfg.fit.separation_bound = get_or<double>(f, "separation_bound", cfg.fit.separation_bound);
        cfg.fit.ridge = get_or<double>(f, "ridge", cfg.fit.ridge);
    }
    return cfg;
}

StudyConfig load_study_config(const std::filesystem::path& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw Error(path.string() + ": " + e.what());
    }
    return parse_study_config(j, path.parent_path());
}

std::string ModelSpec::feature_key() const {
    std::string s;
    for (const auto& f : features) s += (s.empty() ? "" : "+") + f;
    return s;
}

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<ModelSpec> enumerate_models(const StudyConfig& cfg) {
    const std::size_t m = cfg.features.size();
    if (cfg.k < 1) throw Error("combination size k must be at least 1");
    if (cfg.k > m) throw Error("combination size k exceeds the number of features");
    if (cfg.scorer_count() == 0) throw Error("no scorer configured");

    std::vector<std::string> scorers;
    if (cfg.builtin_blr) scorers.push_back("blr");
    for (const auto& e : cfg.external) scorers.push_back(e.name);

    std::vector<ModelSpec> out;
    for (std::size_t d = 0; d < cfg.datasets.size(); ++d) {
        std::vector<std::size_t> idx(cfg.k);
        for (std::size_t i = 0; i < cfg.k; ++i) idx[i] = i;
        while (true) {
            std::vector<std::string> names;
            for (auto i : idx) names.push_back(cfg.features[i]);
            for (const auto& s : scorers) out.push_back({d, s, names});
            // next combination
            std::size_t i = cfg.k;
            while (i > 0 && idx[i - 1] == m - cfg.k + i - 1) --i;
            if (i == 0) break;
            ++idx[i - 1];
            for (std::size_t j = i; j < cfg.k; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

StudyResult run_study(const StudyConfig& cfg) {
    const auto specs = enumerate_models(cfg);
    StudyResult result;

    std::vector<std::optional<FeatureDataset>> data(cfg.datasets.size());
    std::vector<std::string> data_error(cfg.datasets.size());
    for (std::size_t d = 0; d < cfg.datasets.size(); ++d) {
        try {
            auto full = read_feature_csv(cfg.datasets[d].features, cfg.label_column);
            auto sub = full.select(cfg.features);
            const auto pos = sub.positives();
            if (pos == 0 || pos == sub.rows()) throw Error("degenerate class distribution");
            data[d] = std::move(sub);
        } catch (const std::exception& e) {
            data_error[d] = e.what();
            result.failures.push_back({cfg.datasets[d].name, "", e.what()});
        }
    }

    std::map<std::string, const ExternalScorer*> external;
    for (const auto& e : cfg.external) external[e.name] = &e;

    std::vector<ModelRecord> records(specs.size());
    std::vector<std::optional<ModelAnalysis>> analyses(specs.size());
    parallel_for(specs.size(), cfg.threads, [&](std::size_t i) {
        const ModelSpec& spec = specs[i];
        ModelRecord& rec = records[i];
        rec.dataset = cfg.datasets[spec.dataset].name;
        rec.scorer = spec.scorer;
        rec.features = spec.feature_key();
        const auto& ds = data[spec.dataset];
        if (!ds) {
            rec.error = "dataset unavailable: " + data_error[spec.dataset];
            return;
        }
        try {
            const FeatureDataset sub = ds->select(spec.features);
            std::optional<ScoredDataset> scored;
            if (spec.scorer == "blr") {
                auto r = loocv_scores(sub, cfg.fit);
                rec.fold_notes = r.notes.size();
                scored = std::move(r.scores);
            } else {
                std::string path = external.at(spec.scorer)->path_pattern;
                path = replace_all(replace_all(path, "{dataset}", rec.dataset), "{features}",
                                   rec.features);
                scored = read_score_csv(path);
                if (scored->size() != sub.rows() ||
                    !std::equal(scored->labels().begin(), scored->labels().end(),
                                sub.labels().begin()))
                    throw Error(path + ": labels do not match the dataset");
            }
            ModelAnalysis a = analyze(*scored);
            rec.ok = true;
            rec.items = a.items;
            rec.positives = a.positives;
            rec.auc = a.auc;
            rec.auc_band = std::string(to_string(a.band));
            rec.auc_gt_half = a.auc > 0.5 + kAucTolerance;
            rec.auc_ge_08 = a.auc >= 0.8 - kAucTolerance;
            rec.no_points_below = a.no_points_below;
            rec.strictly_above = a.strictly_above;
            rec.condition1 = a.verdict.better_than_random;
            rec.perfect_range = !a.perfect.empty();
            analyses[i] = std::move(a);
        } catch (const std::exception& e) {
            rec.ok = false;
            rec.error = e.what();
        }
    });
    for (const auto& rec : records)
        if (!rec.ok && rec.error.rfind("dataset unavailable", 0) != 0)
            result.failures.push_back({rec.dataset, rec.scorer + ":" + rec.features, rec.error});

    // Same-dataset pairs of evaluated models, in model order.
    std::vector<std::pair<std::size_t, std::size_t>> pair_idx;
    for (std::size_t i = 0; i < specs.size(); ++i) {
        if (!analyses[i]) continue;
        for (std::size_t j = i + 1; j < specs.size(); ++j)
            if (analyses[j] && specs[j].dataset == specs[i].dataset) pair_idx.emplace_back(i, j);
    }
    std::vector<PairRecord> pairs(pair_idx.size());
    parallel_for(pair_idx.size(), cfg.threads, [&](std::size_t k) {
        const auto [i, j] = pair_idx[k];
        const PairAnalysis pa = analyze_pair(*analyses[i], *analyses[j]);
        PairRecord& p = pairs[k];
        p.dataset = records[i].dataset;
        p.model_a = i;
        p.model_b = j;
        p.auc_gap = std::abs(records[i].auc - records[j].auc);
        p.dominance = pa.dominance.a_dominates_b   ? "A"
                      : pa.dominance.b_dominates_a ? "B"
                      : pa.dominance.curves_cross  ? "cross"
                                                   : "identical";
        p.superiority = pa.superiority.a_superior   ? "A"
                        : pa.superiority.b_superior ? "B"
                                                    : "none";
        p.condition2 = (p.dominance == "A" || p.dominance == "B") && p.dominance == p.superiority;
    });

    result.models = std::move(records);
    result.pairs = std::move(pairs);
    result.aggregates = aggregate(result.models, result.pairs, cfg.auc_gap);
    result.aggregates.models_enumerated = specs.size();
    return result;
}

StudyAggregates aggregate(const std::vector<ModelRecord>& models,
                          const std::vector<PairRecord>& pairs, double auc_gap) {
    StudyAggregates a;
    a.models_enumerated = models.size();
    a.auc_gap_threshold = auc_gap;
    for (const auto& m : models) {
        if (!m.ok) continue;
        ++a.total_models;
        const bool sa08 = m.strictly_above && m.auc_ge_08;
        a.count_auc_gt_half += m.auc_gt_half;
        a.count_no_points_below_bisector += m.no_points_below;
        a.count_strictly_above += m.strictly_above;
        a.count_auc_ge_08 += m.auc_ge_08;
        a.count_strictly_above_and_auc_ge_08 += sa08;
        if (!m.condition1) continue;
        ++a.count_condition1_holds;
        a.condition1_within_auc_gt_half += m.auc_gt_half;
        a.condition1_within_no_points_below += m.no_points_below;
        a.condition1_within_strictly_above += m.strictly_above;
        a.condition1_within_auc_ge_08 += m.auc_ge_08;
        a.condition1_within_strictly_above_and_auc_ge_08 += sa08;
    }
    for (const auto& p : pairs) {
        const bool dom = p.dominance == "A" || p.dominance == "B";
        const bool gap = p.auc_gap > auc_gap;
        ++a.total_comparisons;
        a.dominance_count += dom;
        a.condition2_count += p.condition2;
        a.superiority_without_dominance += p.superiority != "none" && !dom;
        a.comparisons_with_auc_gap_gt += gap;
        a.dominance_with_auc_gap_gt += dom && gap;
        a.condition2_with_auc_gap_gt += p.condition2 && gap;
    }
    return a;
}

json study_report(const StudyResult& r) {
    const auto& a = r.aggregates;
    json j;
    j["schema_version"] = kSchemaVersion;
    j["kind"] = "study";
    j["models"] = {
        {"enumerated", a.models_enumerated},
        {"total_models", a.total_models},
        {"count_auc_gt_half", a.count_auc_gt_half},
        {"count_no_points_below_bisector", a.count_no_points_below_bisector},
        {"count_strictly_above", a.count_strictly_above},
        {"count_auc_ge_08", a.count_auc_ge_08},
        {"count_strictly_above_and_auc_ge_08", a.count_strictly_above_and_auc_ge_08},
        {"count_condition1_holds", a.count_condition1_holds},
        {"condition1_within",
         {{"auc_gt_half", a.condition1_within_auc_gt_half},
          {"no_points_below_bisector", a.condition1_within_no_points_below},
          {"strictly_above", a.condition1_within_strictly_above},
          {"auc_ge_08", a.condition1_within_auc_ge_08},
          {"strictly_above_and_auc_ge_08", a.condition1_within_strictly_above_and_auc_ge_08}}},
    };
    j["pairs"] = {
        {"auc_gap_threshold", a.auc_gap_threshold},
        {"total_comparisons", a.total_comparisons},
        {"dominance_count", a.dominance_count},
        {"condition2_count", a.condition2_count},
        {"superiority_without_dominance", a.superiority_without_dominance},
        {"comparisons_with_auc_gap_gt", a.comparisons_with_auc_gap_gt},
        {"dominance_with_auc_gap_gt", a.dominance_with_auc_gap_gt},
        {"condition2_with_auc_gap_gt", a.condition2_with_auc_gap_gt},
    };
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"dataset", f.dataset}, {"model", f.model}, {"reason", f.reason}});
    j["failures"] = std::move(failures);
    return j;
}

std::string models_csv(const std::vector<ModelRecord>& models) {
    std::ostringstream out;
    out << "index,dataset,scorer,features,ok,items,positives,auc,auc_band,auc_gt_half,auc_ge_08,"
           "no_points_below,strictly_above,condition1,perfect_range,fold_notes,error\n";
    for (std::size_t i = 0; i < models.size(); ++i) {
        const auto& m = models[i];
        out << i << ',' << csv_cell(m.dataset) << ',' << csv_cell(m.scorer) << ','
            << csv_cell(m.features) << ',' << m.ok << ',' << m.items << ',' << m.positives << ','
            << format_double(m.auc) << ',' << m.auc_band << ',' << m.auc_gt_half << ','
            << m.auc_ge_08 << ',' << m.no_points_below << ',' << m.strictly_above << ','
            << m.condition1 << ',' << m.perfect_range << ',' << m.fold_notes << ','
            << csv_cell(m.error) << '\n';
    }
    return out.str();
}

std::string pairs_csv(const std::vector<PairRecord>& pairs) {
    std::ostringstream out;
    out << "dataset,model_a,model_b,auc_gap,dominance,superiority,condition2\n";
    for (const auto& p : pairs)
        out << csv_cell(p.dataset) << ',' << p.model_a << ',' << p.model_b << ','
            << format_double(p.auc_gap) << ',' << p.dominance << ',' << p.superiority << ','
            << p.condition2 << '\n';
    return out.str();
}

void write_study_outputs(const StudyResult& r, const std::filesystem::path& dir) {
    write_text_file(dir / "study_report.json", study_report(r).dump(2) + "\n");
    write_text_file(dir / "models.csv", models_csv(r.models));
    write_text_file(dir / "pairs.csv", pairs_csv(r.pairs));
}

} // namespace rocaware
