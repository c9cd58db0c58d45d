#include "doctest.h"

#include <filesystem>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rocaware/error.hpp"
#include "rocaware/io.hpp"
#include "rocaware/study.hpp"

using namespace rocaware;
namespace fs = std::filesystem;

namespace {

StudyConfig config_with(std::size_t m, std::size_t k, std::size_t datasets = 1) {
    StudyConfig cfg;
    for (std::size_t j = 0; j < m; ++j) cfg.features.push_back("f" + std::to_string(j));
    for (std::size_t d = 0; d < datasets; ++d) cfg.datasets.push_back({"d" + std::to_string(d), "x.csv"});
    cfg.k = k;
    return cfg;
}

fs::path scratch(const std::string& name) {
    auto p = fs::temp_directory_path() / ("rocaware-unit-" + name);
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
}

// Feature CSV with n rows over f0..f{m-1}; the label depends on f0 plus noise.
void write_features(const fs::path& path, std::mt19937_64& rng, std::size_t n, std::size_t m) {
    std::normal_distribution<double> z(0, 1);
    std::ostringstream out;
    for (std::size_t j = 0; j < m; ++j) out << 'f' << j << ',';
    out << "label\n";
    std::vector<std::uint8_t> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
        double f0 = z(rng);
        labels[i] = (f0 + 0.8 * z(rng)) > 0.3;
        if (i < 2) labels[i] = static_cast<std::uint8_t>(i);
        out << f0;
        for (std::size_t j = 1; j < m; ++j) out << ',' << z(rng);
        out << ',' << int(labels[i]) << '\n';
    }
    write_text_file(path, out.str());
}

} // namespace

TEST_CASE("model enumeration counts") {
    CHECK(enumerate_models(config_with(8, 3)).size() == 56);
    CHECK(enumerate_models(config_with(9, 3)).size() == 84);
    CHECK(enumerate_models(config_with(5, 5)).size() == 1);
    CHECK(enumerate_models(config_with(5, 3, 10)).size() == 100);
    CHECK_THROWS_AS(enumerate_models(config_with(3, 4)), Error);
    CHECK_THROWS_AS(enumerate_models(config_with(3, 0)), Error);
    CHECK(binomial(9, 3) == 84);

    auto specs = enumerate_models(config_with(4, 2));
    CHECK(specs.front().feature_key() == "f0+f1");
    CHECK(specs.back().feature_key() == "f2+f3");
}

TEST_CASE("config parsing") {
    auto cfg = parse_study_config(nlohmann::json::parse(R"({
        "datasets": ["data/a.csv", {"name": "bee", "features": "/abs/b.csv"}],
        "features": ["x", "y"], "k": 1,
        "scorers": ["blr", {"name": "ext", "path": "scores/{dataset}_{features}.csv"}]
    })"),
                                  "/cfg");
    CHECK(cfg.datasets[0].name == "a");
    CHECK(cfg.datasets[0].features == fs::path("/cfg/data/a.csv"));
    CHECK(cfg.datasets[1].name == "bee");
    CHECK(cfg.datasets[1].features == fs::path("/abs/b.csv"));
    CHECK(cfg.scorer_count() == 2);
    CHECK(cfg.external[0].path_pattern == "/cfg/scores/{dataset}_{features}.csv");
    CHECK_THROWS_WITH_AS(parse_study_config(nlohmann::json::parse(R"({"datasets":["a"],"features":[],"kk":1})"), "."),
                         "config: unknown key 'kk'", Error);
}

TEST_CASE("perfect external scores: every model passes and ties everywhere") {
    auto dir = scratch("perfect");
    std::mt19937_64 rng(31);
    StudyConfig cfg;
    cfg.features = {"f0", "f1", "f2", "f3"};
    cfg.k = 2;
    cfg.builtin_blr = false;
    cfg.external = {{"p", (dir / "{dataset}_{features}.csv").string()},
                    {"q", (dir / "{dataset}_{features}.csv").string()}};
    for (int d = 0; d < 3; ++d) {
        const std::string name = "d" + std::to_string(d);
        write_features(dir / (name + ".csv"), rng, 20, 4);
        cfg.datasets.push_back({name, dir / (name + ".csv")});
        auto fd = read_feature_csv(dir / (name + ".csv"));
        std::vector<double> s;
        for (auto y : fd.labels()) s.push_back(y ? 1.0 : 0.0);
        ScoredDataset sd(s, {fd.labels().begin(), fd.labels().end()});
        for (const auto& spec : enumerate_models(cfg)) {
            if (spec.dataset != static_cast<std::size_t>(d)) continue;
            std::ostringstream out;
            write_score_csv(out, sd);
            write_text_file(dir / (name + "_" + spec.feature_key() + ".csv"), out.str());
        }
    }
    auto r = run_study(cfg);
    const auto& a = r.aggregates;
    CHECK(r.failures.empty());
    CHECK(a.total_models == 3 * 6 * 2);
    CHECK(a.count_condition1_holds == a.total_models);
    CHECK(a.count_strictly_above == a.total_models);
    const std::size_t d = 12;
    CHECK(a.total_comparisons == 3 * d * (d - 1) / 2);
    CHECK(a.dominance_count == 0);
    CHECK(a.condition2_count == 0);
    for (const auto& p : r.pairs) {
        CHECK(p.dominance == "identical");
        CHECK(p.superiority == "none");
    }
    fs::remove_all(dir);
}

TEST_CASE("built-in scorer study is deterministic and self-consistent") {
    auto dir = scratch("blr");
    std::mt19937_64 rng(37);
    StudyConfig cfg;
    cfg.features = {"f0", "f1", "f2"};
    cfg.k = 2;
    cfg.threads = 2;
    for (int d = 0; d < 2; ++d) {
        const std::string name = "d" + std::to_string(d);
        write_features(dir / (name + ".csv"), rng, 25, 3);
        cfg.datasets.push_back({name, dir / (name + ".csv")});
    }
    cfg.datasets.push_back({"missing", dir / "missing.csv"});
    auto r1 = run_study(cfg);
    cfg.threads = 1;
    auto r2 = run_study(cfg);
    CHECK(study_report(r1).dump() == study_report(r2).dump());
    CHECK(models_csv(r1.models) == models_csv(r2.models));
    CHECK(pairs_csv(r1.pairs) == pairs_csv(r2.pairs));

    CHECK(r1.aggregates.models_enumerated == 9);
    CHECK(r1.aggregates.total_models == 6);
    CHECK(r1.failures.size() == 1);
    CHECK(r1.failures[0].dataset == "missing");

    auto t = oracle::read_csv(models_csv(r1.models));
    std::size_t ok = 0, cond1 = 0;
    for (const auto& row : t.rows) {
        ok += row[t.col("ok")] == "1";
        cond1 += row[t.col("condition1")] == "1";
    }
    CHECK(ok == r1.aggregates.total_models);
    CHECK(cond1 == r1.aggregates.count_condition1_holds);
    CHECK(oracle::read_csv(pairs_csv(r1.pairs)).rows.size() == 2 * 3);

    write_study_outputs(r1, dir / "out");
    CHECK(fs::exists(dir / "out" / "study_report.json"));
    CHECK(fs::exists(dir / "out" / "models.csv"));
    CHECK(fs::exists(dir / "out" / "pairs.csv"));
    fs::remove_all(dir);
}
