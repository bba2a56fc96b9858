#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bcbench/dataset.hpp"
#include "bcbench/errors.hpp"
#include "bcbench/grids.hpp"
#include "bcbench/logreg.hpp"
#include "bcbench/model_eval.hpp"
#include "bcbench/report.hpp"

namespace fs = std::filesystem;
using namespace bcbench;

namespace {

struct RunConfig {
    std::string data_path;
    std::uint64_t seed = 42;
    int k = 10;
    std::string output_dir = ".";
    std::vector<std::string> formats = {"text", "csv", "json", "markdown"};
    int jobs = 1;
    bool no_balance = false;
    bool do_standardize = false;
    std::string grid_file;
    std::string family;
    std::string dt_criterion = "gini";
};

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("write failure on " + path.string());
}

Dataset prepare_dataset(const RunConfig& rc, bool verbose = true) {
    RawTable raw = load_raw(rc.data_path);
    if (verbose) {
        std::cout << "loaded " << raw.rows.size() << " rows from "
                  << rc.data_path << "\n";
    }
    Dataset d = clean(raw);
    if (verbose) {
        auto counts = d.class_counts();
        std::cout << "cleaned: " << d.n_rows() << " rows (" << counts[0]
                  << " benign / " << counts[1] << " malignant), dropped "
                  << raw.rows.size() - d.n_rows()
                  << " rows with missing values\n";
    }
    if (!rc.no_balance) {
        d = balance(d, BalanceStrategy::UndersampleMajority, rc.seed);
        if (verbose) {
            auto counts = d.class_counts();
            std::cout << "balanced: " << d.n_rows() << " rows (" << counts[0]
                      << " benign / " << counts[1] << " malignant), seed "
                      << rc.seed << "\n";
        }
    }
    if (rc.do_standardize) {
        d = standardize(d);
        if (verbose) std::cout << "features standardized (z-scored)\n";
    }
    return d;
}

int cmd_inspect(const RunConfig& rc) {
    Dataset d = prepare_dataset(rc);
    ClassStats stats = class_feature_stats(d);

    std::printf("%-28s %6s %10s %10s %8s\n", "feature", "class", "mean",
                "std", "count");
    for (const auto& e : stats.entries) {
        std::printf("%-28s %6d %10.4f %10.4f %8zu\n", e.feature.c_str(),
                    e.label, e.mean, e.stddev, e.count);
    }

    fs::path dir(rc.output_dir);
    fs::create_directories(dir);
    write_file(dir / "stats.csv", stats_to_csv(stats));
    write_file(dir / "stats.json", stats_to_json(stats));
    export_parallel_coordinates(d, (dir / "parallel_coordinates.csv").string());
    export_parallel_coordinates_svg(
        d, (dir / "parallel_coordinates.svg").string());
    std::cout << "wrote stats.csv, stats.json, parallel_coordinates.csv, "
                 "parallel_coordinates.svg under "
              << dir.string() << "\n";
    return 0;
}

GridSpec grid_for(const RunConfig& rc, const std::string& family) {
    if (!rc.grid_file.empty()) {
        std::ifstream in(rc.grid_file);
        if (!in) throw IoError("cannot open grid file: " + rc.grid_file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        GridSpec spec = grid_spec_from_json_text(text);
        if (spec.family != family) {
            throw ConfigError("grid file is for family '" + spec.family +
                              "', requested '" + family + "'");
        }
        return spec;
    }
    GridSpec spec = builtin_grid(family);
    if (family == "lr") {
        std::cout << "note: c=0 is excluded from the built-in grid "
                     "(inverse regularization strength is undefined at 0)\n";
    }
    if (family == "dt" && rc.dt_criterion != "gini") {
        spec.axes.push_back(
            {"criterion", {ParamValue{rc.dt_criterion}}});
    }
    return spec;
}

void write_best_json(const fs::path& dir, const std::string& family,
                     const GridSearchResult& result) {
    const CVResult& best = result.best();
    std::ostringstream out;
    out << "{\n  \"family\": \"" << family << "\",\n";
    out << "  \"selection_metric\": \"" << result.selection_metric
        << "\",\n";
    out << "  \"best_config\": " << candidate_to_json_text(best.config)
        << ",\n";
    out << "  \"train_mean\": " << format_value(best.train_mean) << ",\n";
    out << "  \"train_std\": " << format_value(best.train_std) << ",\n";
    out << "  \"test_mean\": " << format_value(best.test_mean) << ",\n";
    out << "  \"test_std\": " << format_value(best.test_std) << ",\n";
    out << "  \"test_f1_mean\": " << format_value(best.test_f1_mean)
        << ",\n";
    out << "  \"fit_time_ms_mean\": " << format_value(best.fit_time_ms_mean)
        << "\n}\n";
    write_file(dir / ("best_" + family + ".json"), out.str());
}

GridSearchResult run_tune(const RunConfig& rc, const std::string& family,
                          const Dataset& d, const FoldPlan& plan) {
    const ModelFamily& fam = family_by_name(family);
    GridSpec spec = grid_for(rc, family);
    std::cout << "grid search [" << family << "]: "
              << spec.candidate_count() << " candidates, k=" << plan.k
              << ", jobs=" << rc.jobs << "\n";
    GridSearchResult result = grid_search(fam, spec, d, plan, rc.jobs);

    fs::path dir(rc.output_dir);
    fs::create_directories(dir);
    write_file(dir / ("grid_" + family + ".csv"),
               grid_results_to_csv(result, fam));

    const CVResult& best = result.best();
    write_best_json(dir, family, result);
    std::cout << "best [" << family << "]: {" << best.config.to_string()
              << "}  test_mean=" << best.test_mean
              << " test_std=" << best.test_std
              << " fit_time_ms=" << best.fit_time_ms_mean << "\n";
    if (!result.skipped.empty()) {
        std::cout << "skipped " << result.skipped.size()
                  << " invalid candidates (reasons in grid_" << family
                  << ".csv)\n";
    }
    return result;
}

int cmd_tune(const RunConfig& rc) {
    Dataset d = prepare_dataset(rc);
    FoldPlan plan = stratified_kfold(d.y, rc.k, rc.seed);
    run_tune(rc, rc.family, d, plan);
    return 0;
}

int cmd_benchmark(const RunConfig& rc) {
    auto t0 = std::chrono::steady_clock::now();
    Dataset d = prepare_dataset(rc);
    FoldPlan plan = stratified_kfold(d.y, rc.k, rc.seed);

    GridSearchResult lr = run_tune(rc, "lr", d, plan);
    GridSearchResult dt = run_tune(rc, "dt", d, plan);
    GridSearchResult svm = run_tune(rc, "svm", d, plan);

    auto counts = d.class_counts();
    DatasetFingerprint fp{d.n_rows(), counts[0], counts[1], rc.seed, rc.seed,
                          rc.k};
    ComparisonReport report = compare_models(
        {{"lr", &lr}, {"dt", &dt}, {"svm", &svm}}, fp);

    fs::path dir(rc.output_dir);
    fs::create_directories(dir);
    for (const auto& name : rc.formats) {
        ReportFormat fmt = report_format_from_name(name);
        write_file(dir / ("report." + report_format_extension(fmt)),
                   render_report(report, fmt));
    }
    std::cout << "\n" << render_report(report, ReportFormat::TextTable);
    auto t1 = std::chrono::steady_clock::now();
    std::cout << "benchmark wall time: "
              << std::chrono::duration<double>(t1 - t0).count() << " s\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"from-scratch binary classification benchmark "
                 "(logistic regression / SVM / decision tree)"};
    app.require_subcommand(1);

    RunConfig rc;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--data", rc.data_path, "input data file "
                        "(comma-separated, 11 columns, no header)")
            ->required();
        cmd->add_option("--seed", rc.seed,
                        "seed for balancing and fold assignment");
        cmd->add_option("--output-dir", rc.output_dir, "output directory");
        cmd->add_flag("--no-balance", rc.no_balance,
                      "skip class balancing");
        cmd->add_flag("--standardize", rc.do_standardize,
                      "z-score features before fitting");
    };

    CLI::App* inspect = app.add_subcommand(
        "inspect", "clean + balance the data, print per-class feature "
                   "statistics, export plot data");
    add_common(inspect);

    CLI::App* tune = app.add_subcommand(
        "tune", "exhaustive grid search with cross-validation for one "
                "model family");
    add_common(tune);
    tune->add_option("--family", rc.family, "model family: lr, svm, dt")
        ->required()
        ->check(CLI::IsMember({"lr", "svm", "dt"}));
    tune->add_option("--k", rc.k, "number of folds")->check(CLI::Range(2, 100));
    tune->add_option("--grid", rc.grid_file,
                     "JSON grid file overriding the built-in grid");
    tune->add_option("--jobs", rc.jobs, "parallel candidate evaluations")
        ->check(CLI::Range(1, 256));
    tune->add_option("--dt-criterion", rc.dt_criterion,
                     "decision tree split criterion")
        ->check(CLI::IsMember({"gini", "info_gain"}));

    CLI::App* bench = app.add_subcommand(
        "benchmark", "tune all three families and emit the comparison "
                     "report");
    add_common(bench);
    bench->add_option("--k", rc.k, "number of folds")
        ->check(CLI::Range(2, 100));
    bench->add_option("--jobs", rc.jobs, "parallel candidate evaluations")
        ->check(CLI::Range(1, 256));
    bench->add_option("--format", rc.formats,
                      "report formats: text, csv, json, markdown")
        ->delimiter(',');

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(inspect)) return cmd_inspect(rc);
        if (app.got_subcommand(tune)) return cmd_tune(rc);
        if (app.got_subcommand(bench)) return cmd_benchmark(rc);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
