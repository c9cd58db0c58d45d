// rocaware command-line front end.
//
//   rocaware evaluate scores.csv
//   rocaware compare a.csv b.csv --tpr-min 0.7 --fpr-max 0.3
//   rocaware score features.csv --features loc,wmc,cbo --output scores.csv
//   rocaware study config.json
//
// Exit status: 0 ok, 1 input or usage error, 2 internal error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "rocaware/analysis.hpp"
#include "rocaware/error.hpp"
#include "rocaware/io.hpp"
#include "rocaware/plot.hpp"
#include "rocaware/report.hpp"
#include "rocaware/scorer.hpp"
#include "rocaware/study.hpp"

namespace fs = std::filesystem;
using namespace rocaware;

namespace {

struct Global {
    std::string out;
    bool out_given = false;
    bool json_only = false;
};

struct Thresholds {
    std::optional<double> tpr_min, fpr_max, cost_fp, cost_fn;

    std::optional<AcceptanceBounds> bounds() const {
        if (!tpr_min && !fpr_max) return std::nullopt;
        return AcceptanceBounds{tpr_min.value_or(0.0), fpr_max.value_or(1.0)};
    }
    std::optional<CostModel> costs() const {
        if (!cost_fp && !cost_fn) return std::nullopt;
        return CostModel{cost_fp.value_or(1.0), cost_fn.value_or(1.0)};
    }
};

void add_threshold_flags(CLI::App* cmd, Thresholds& th) {
    cmd->add_option("--tpr-min", th.tpr_min, "minimum acceptable TPR");
    cmd->add_option("--fpr-max", th.fpr_max, "maximum acceptable FPR");
    cmd->add_option("--cost-fp", th.cost_fp, "cost of one false positive");
    cmd->add_option("--cost-fn", th.cost_fn, "cost of one false negative");
}

std::string stem(const std::string& path) { return fs::path(path).stem().string(); }

std::string interval_list(const IntervalSet& s) {
    if (s.empty()) return "none";
    std::string out;
    for (const auto& iv : s) out += (out.empty() ? "" : " ") + to_string(iv);
    return out;
}

void emit(const Global& g, const nlohmann::json& j, const fs::path& file) {
    if (g.json_only) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    write_text_file(file, j.dump(2) + "\n");
    std::cout << "wrote " << file.string() << '\n';
}

void write_svg(const Global& g, const fs::path& file, const std::string& svg) {
    if (g.json_only) return;
    write_text_file(file, svg);
    std::cout << "wrote " << file.string() << '\n';
}

int run_evaluate(const Global& g, const std::string& input, const Thresholds& th) {
    const ModelAnalysis m = analyze(read_score_csv(input));
    const fs::path out(g.out);
    const std::string base = stem(input);
    if (!g.json_only) {
        std::cout << "input: " << input << '\n'
                  << "items " << m.items << " (positives " << m.positives << ", negatives "
                  << m.negatives << ", prevalence " << m.prevalence << ")\n"
                  << "AUC " << m.auc << " (" << to_string(m.band) << ")\n"
                  << "ROC strictly above bisector: " << (m.strictly_above ? "yes" : "no") << '\n'
                  << "better than random at every threshold: "
                  << (m.verdict.better_than_random ? "yes" : "no") << '\n'
                  << "  TPR below 1-t on: " << interval_list(m.verdict.tpr_violations) << '\n'
                  << "  FPR above 1-t on: " << interval_list(m.verdict.fpr_violations) << '\n'
                  << "perfect range: " << (m.perfect.empty() ? "none" : to_string(m.perfect.range))
                  << '\n';
    }
    emit(g, evaluation_report(m, input, th.bounds(), th.costs()), out / (base + ".report.json"));
    write_svg(g, out / (base + ".roc.svg"), render_decorated_roc(m.curve, m.profile));
    write_svg(g, out / (base + ".classification.svg"), render_classification_plot(m.profile));
    return 0;
}

int run_compare(const Global& g, const std::string& a_path, const std::string& b_path,
                const Thresholds& th) {
    const ModelAnalysis a = analyze(read_score_csv(a_path));
    const ModelAnalysis b = analyze(read_score_csv(b_path));
    const auto report = comparison_report(a, b, a_path, b_path, th.bounds(), th.costs());
    if (!g.json_only) {
        std::cout << "A: " << a_path << " (AUC " << a.auc << ")\n"
                  << "B: " << b_path << " (AUC " << b.auc << ")\n"
                  << report["statement"].get<std::string>() << '\n';
        if (report.contains("acceptable"))
            std::cout << report["acceptable"]["summary"].get<std::string>() << '\n';
        if (report.contains("cost"))
            std::cout << "lower expected cost: " << report["cost"]["preferred"].get<std::string>()
                      << '\n';
    }
    emit(g, report, fs::path(g.out) / (stem(a_path) + "_vs_" + stem(b_path) + ".report.json"));
    return 0;
}

int run_score(const Global& g, const std::string& input, const std::string& features,
              std::string output, double ridge) {
    std::vector<std::string> names;
    std::stringstream ss(features);
    for (std::string f; std::getline(ss, f, ',');)
        if (!f.empty()) names.push_back(f);
    if (names.empty()) throw Error("--features needs at least one column name");

    const FeatureDataset ds = read_feature_csv(input).select(names);
    FitOptions opts;
    opts.ridge = ridge;
    const LoocvResult r = loocv_scores(ds, opts);

    std::ostringstream csv;
    write_score_csv(csv, r.scores);
    if (g.json_only) {
        nlohmann::json notes = nlohmann::json::array();
        for (const auto& n : r.notes) notes.push_back({{"row", n.row}, {"reason", n.reason}});
        nlohmann::json j = {{"schema_version", kSchemaVersion},
                            {"kind", "scores"},
                            {"input", input},
                            {"features", names},
                            {"scores", std::vector<double>(r.scores.scores().begin(),
                                                           r.scores.scores().end())},
                            {"labels", std::vector<int>(r.scores.labels().begin(),
                                                        r.scores.labels().end())},
                            {"fold_notes", notes}};
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    if (output.empty()) output = (fs::path(g.out) / (stem(input) + ".scores.csv")).string();
    write_text_file(output, csv.str());
    for (const auto& n : r.notes) std::cerr << "note: row " << n.row << ": " << n.reason << '\n';
    std::cout << "wrote " << output << '\n';
    return 0;
}

int run_study_cmd(const Global& g, const std::string& config, std::optional<unsigned> threads) {
    StudyConfig cfg = load_study_config(config);
    if (g.out_given) cfg.output_dir = g.out;
    if (threads) cfg.threads = *threads;
    const StudyResult r = run_study(cfg);
    if (g.json_only) {
        std::cout << study_report(r).dump(2) << '\n';
        return 0;
    }
    write_study_outputs(r, cfg.output_dir);
    const auto& a = r.aggregates;
    std::cout << "models: " << a.total_models << " of " << a.models_enumerated << " evaluated\n"
              << "  AUC > 0.5: " << a.count_auc_gt_half << '\n'
              << "  no points below bisector: " << a.count_no_points_below_bisector << '\n'
              << "  strictly above bisector: " << a.count_strictly_above << '\n'
              << "  AUC >= 0.8: " << a.count_auc_ge_08 << '\n'
              << "  better than random at every threshold: " << a.count_condition1_holds << '\n'
              << "pairs: " << a.total_comparisons << ", dominance " << a.dominance_count
              << ", dominance with threshold superiority " << a.condition2_count << '\n';
    for (const auto& f : r.failures)
        std::cerr << "failed: " << f.dataset << (f.model.empty() ? "" : " " + f.model) << ": "
                  << f.reason << '\n';
    std::cout << "wrote " << (cfg.output_dir / "study_report.json").string() << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Threshold-aware ROC evaluation for defect prediction models"};
    app.require_subcommand(1);
    Global g;
    if (const char* env = std::getenv("ROCAWARE_OUT_DIR"); env && *env) g.out = env;
    else g.out = "rocaware-out";
    auto* out_opt = app.add_option("--out", g.out, "output directory (env ROCAWARE_OUT_DIR)");
    app.add_flag("--json-only", g.json_only, "print the JSON report to stdout and write no files");

    Thresholds th;
    std::string input, input_b, features, output, config;
    double ridge = 0.0;
    std::optional<unsigned> threads;

    auto* evaluate = app.add_subcommand("evaluate", "single-model report and plots");
    evaluate->add_option("scores", input, "score CSV")->required();
    add_threshold_flags(evaluate, th);

    auto* compare = app.add_subcommand("compare", "compare two models on the same data");
    compare->add_option("a", input, "score CSV for model A")->required();
    compare->add_option("b", input_b, "score CSV for model B")->required();
    add_threshold_flags(compare, th);

    auto* score = app.add_subcommand("score", "logistic regression with leave-one-out scores");
    score->add_option("features_file", input, "feature CSV")->required();
    score->add_option("--features", features, "comma-separated feature columns")->required();
    score->add_option("--output", output, "score CSV to write");
    score->add_option("--ridge", ridge, "ridge penalty on standardized coefficients");

    auto* study = app.add_subcommand("study", "run a batch study from a JSON config");
    study->add_option("config", config, "study config (JSON)")->required();
    study->add_option("--threads", threads, "worker threads");

    for (auto* sub : {evaluate, compare, score, study}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }
    g.out_given = out_opt->count() > 0;

    try {
        if (*evaluate) return run_evaluate(g, input, th);
        if (*compare) return run_compare(g, input, input_b, th);
        if (*score) return run_score(g, input, features, output, ridge);
        if (*study) return run_study_cmd(g, config, threads);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
