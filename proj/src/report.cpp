#include "bcbench/report.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "bcbench/errors.hpp"
#include "bcbench/grids.hpp"

namespace bcbench {

namespace {

// Fixed family order used for presentation and for breaking ranking ties.
const std::vector<std::string> kFamilyOrder = {"lr", "dt", "svm"};

const std::map<std::string, std::string> kFamilyTitles = {
    {"lr", "Logistic Regression (LR)"},
    {"dt", "Decision Trees (DT)"},
    {"svm", "Support Vector Machines (SVM)"},
};


std::string pct(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f%%", v * 100.0);
    return buf;
}

std::string ms(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f ms", v);
    return buf;
}

}  // namespace

const QualitativeProfile& qualitative_profile(const std::string& family) {
    static const std::map<std::string, QualitativeProfile> profiles = {
        {"lr",
         {"Superior", "Suitable for binary", "Moderate", "Less complex"}},
        {"dt",
         {"Lower test score mean; tendency for overfitting",
          "Applicable to both numerical and categorical", "Least expensive",
          "Moderate complexity"}},
        {"svm",
         {"Consistent", "Effective in non-linear relationships", "Slowest",
          "Greater complexity"}},
    };
    auto it = profiles.find(family);
    if (it == profiles.end()) {
        throw DataError("unknown family: " + family);
    }
    return it->second;
}

ComparisonReport compare_models(
    const std::vector<std::pair<std::string, const GridSearchResult*>>&
        results,
    const DatasetFingerprint& fingerprint) {
    std::map<std::string, const GridSearchResult*> by_family;
    for (const auto& [family, gsr] : results) {
        if (by_family.count(family)) {
            throw DataError("compare_models: duplicate family '" + family +
                            "'");
        }
        by_family[family] = gsr;
    }
    for (const auto& family : kFamilyOrder) {
        if (!by_family.count(family)) {
            throw DataError("compare_models: missing family '" + family +
                            "'");
        }
    }
    if (by_family.size() != kFamilyOrder.size()) {
        throw DataError("compare_models: unexpected extra family");
    }

    ComparisonReport report;
    report.fingerprint = fingerprint;
    for (const auto& family : kFamilyOrder) {
        const GridSearchResult* gsr = by_family[family];
        const CVResult& best = gsr->best();
        FamilyOutcome fo;
        fo.family = family;
        fo.best_config = best.config;
        fo.train_mean = best.train_mean;
        fo.train_std = best.train_std;
        fo.test_mean = best.test_mean;
        fo.test_std = best.test_std;
        fo.fit_time_ms_mean = best.fit_time_ms_mean;
        fo.train_test_gap = best.train_mean - best.test_mean;
        const auto& notes = family_by_name(family).notes;
        fo.note = notes ? notes(best.config) : "";
        report.selection_metric = gsr->selection_metric;
        report.families.push_back(std::move(fo));
    }

    std::vector<std::size_t> order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return report.families[a].test_mean > report.families[b].test_mean;
    });
    for (std::size_t i : order) {
        report.ranking_by_test.push_back(report.families[i].family);
    }
    order = {0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
        return report.families[a].fit_time_ms_mean <
               report.families[b].fit_time_ms_mean;
    });
    for (std::size_t i : order) {
        report.ranking_by_time.push_back(report.families[i].family);
    }
    return report;
}

ReportFormat report_format_from_name(const std::string& name) {
    if (name == "text" || name == "text-table" || name == "txt") {
        return ReportFormat::TextTable;
    }
    if (name == "csv") return ReportFormat::Csv;
    if (name == "json") return ReportFormat::Json;
    if (name == "markdown" || name == "md") return ReportFormat::Markdown;
    throw ConfigError("unknown report format: " + name);
}

std::string report_format_extension(ReportFormat f) {
    switch (f) {
        case ReportFormat::TextTable: return "txt";
        case ReportFormat::Csv: return "csv";
        case ReportFormat::Json: return "json";
        case ReportFormat::Markdown: return "md";
    }
    return "txt";
}

namespace {

nlohmann::ordered_json candidate_json(const CandidateConfig& cfg) {
    nlohmann::ordered_json j;
    for (const auto& [name, value] : cfg.params) {
        if (std::holds_alternative<double>(value)) {
            j[name] = std::get<double>(value);
        } else {
            j[name] = std::get<std::string>(value);
        }
    }
    return j;
}

CandidateConfig candidate_from_json(const nlohmann::ordered_json& j) {
    CandidateConfig cfg;
    for (const auto& [name, value] : j.items()) {
        if (value.is_string()) {
            cfg.params.emplace_back(name, value.get<std::string>());
        } else {
            cfg.params.emplace_back(name, value.get<double>());
        }
    }
    return cfg;
}

std::string render_json(const ComparisonReport& r) {
    nlohmann::ordered_json j;
    j["dataset"] = {{"rows", r.fingerprint.rows},
                    {"benign", r.fingerprint.benign},
                    {"malignant", r.fingerprint.malignant},
                    {"balance_seed", r.fingerprint.balance_seed},
                    {"fold_seed", r.fingerprint.fold_seed},
                    {"k", r.fingerprint.k}};
    j["selection_metric"] = r.selection_metric;
    j["families"] = nlohmann::ordered_json::array();
    for (const auto& fo : r.families) {
        nlohmann::ordered_json f;
        f["family"] = fo.family;
        f["best_config"] = candidate_json(fo.best_config);
        f["train_mean"] = fo.train_mean;
        f["train_std"] = fo.train_std;
        f["test_mean"] = fo.test_mean;
        f["test_std"] = fo.test_std;
        f["fit_time_ms_mean"] = fo.fit_time_ms_mean;
        f["train_test_gap"] = fo.train_test_gap;
        f["note"] = fo.note;
        const auto& q = qualitative_profile(fo.family);
        f["qualitative"] = {{"performance", q.performance},
                            {"classification_capability", q.capability},
                            {"computation_time", q.computation_time},
                            {"hyperparameter_tuning", q.tuning}};
        j["families"].push_back(std::move(f));
    }
    j["ranking_by_test"] = r.ranking_by_test;
    j["ranking_by_time"] = r.ranking_by_time;
    return j.dump(2) + "\n";
}

std::string render_csv(const ComparisonReport& r) {
    std::ostringstream out;
    out << "family,test_mean,test_std,train_mean,train_std,train_test_gap,"
           "fit_time_ms_mean,best_config,note\n";
    for (const auto& fo : r.families) {
        out << fo.family << ',' << format_value(fo.test_mean) << ','
            << format_value(fo.test_std) << ',' << format_value(fo.train_mean)
            << ',' << format_value(fo.train_std) << ','
            << format_value(fo.train_test_gap) << ','
            << format_value(fo.fit_time_ms_mean) << ",\""
            << fo.best_config.to_string() << "\",\"" << fo.note << "\"\n";
    }
    return out.str();
}

std::string render_markdown(const ComparisonReport& r) {
    std::ostringstream out;
    out << "# Model comparison\n\n";
    out << "Dataset: " << r.fingerprint.rows << " rows ("
        << r.fingerprint.benign << " benign / " << r.fingerprint.malignant
        << " malignant), " << r.fingerprint.k
        << "-fold stratified cross-validation, balance seed "
        << r.fingerprint.balance_seed << ", fold seed "
        << r.fingerprint.fold_seed << ".\n\n";
    out << "| Model | Performance | Classification Capability | "
           "Computation Time | Hyperparameter Tuning |\n";
    out << "| --- | --- | --- | --- | --- |\n";
    for (const auto& fo : r.families) {
        const auto& q = qualitative_profile(fo.family);
        out << "| " << kFamilyTitles.at(fo.family) << " | " << q.performance
            << " (test " << pct(fo.test_mean) << " +- " << pct(fo.test_std)
            << ") | " << q.capability << " | " << q.computation_time << " ("
            << ms(fo.fit_time_ms_mean) << ") | " << q.tuning << " |\n";
    }
    out << "\n## Measured results\n\n";
    out << "| Family | Test mean | Test std | Train mean | Train std | "
           "Train-test gap | Fit time | Best configuration |\n";
    out << "| --- | --- | --- | --- | --- | --- | --- | --- |\n";
    for (const auto& fo : r.families) {
        out << "| " << fo.family << " | " << pct(fo.test_mean) << " | "
            << pct(fo.test_std) << " | " << pct(fo.train_mean) << " | "
            << pct(fo.train_std) << " | " << pct(fo.train_test_gap) << " | "
            << ms(fo.fit_time_ms_mean) << " | `" << fo.best_config.to_string()
            << "`";
        if (!fo.note.empty()) out << " (" << fo.note << ")";
        out << " |\n";
    }
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += " > ";
            s += v[i];
        }
        return s;
    };
    out << "\nRanking by test accuracy: " << join(r.ranking_by_test) << "\n";
    std::string time_rank;
    for (std::size_t i = 0; i < r.ranking_by_time.size(); ++i) {
        if (i) time_rank += " < ";
        time_rank += r.ranking_by_time[i];
    }
    out << "Ranking by fit time (fastest first): " << time_rank << "\n";
    return out.str();
}

std::string render_text(const ComparisonReport& r) {
    std::ostringstream out;
    char line[256];
    out << "model comparison (" << r.fingerprint.rows << " rows, "
        << r.fingerprint.k << "-fold CV, seed "
        << r.fingerprint.balance_seed << ")\n";
    std::snprintf(line, sizeof(line), "%-6s %10s %10s %10s %10s %8s %12s\n",
                  "family", "test_mean", "test_std", "train_mean",
                  "train_std", "gap", "fit_time_ms");
    out << line;
    for (const auto& fo : r.families) {
        std::snprintf(line, sizeof(line),
                      "%-6s %10.4f %10.4f %10.4f %10.4f %8.4f %12.3f\n",
                      fo.family.c_str(), fo.test_mean, fo.test_std,
                      fo.train_mean, fo.train_std, fo.train_test_gap,
                      fo.fit_time_ms_mean);
        out << line;
        out << "       best: " << fo.best_config.to_string();
        if (!fo.note.empty()) out << "  [" << fo.note << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_report(const ComparisonReport& r, ReportFormat format) {
    switch (format) {
        case ReportFormat::Json: return render_json(r);
        case ReportFormat::Csv: return render_csv(r);
        case ReportFormat::Markdown: return render_markdown(r);
        case ReportFormat::TextTable: return render_text(r);
    }
    throw ConfigError("unhandled report format");
}

ComparisonReport report_from_json(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    ComparisonReport r;
    const auto& ds = j.at("dataset");
    r.fingerprint.rows = ds.at("rows").get<std::size_t>();
    r.fingerprint.benign = ds.at("benign").get<std::size_t>();
    r.fingerprint.malignant = ds.at("malignant").get<std::size_t>();
    r.fingerprint.balance_seed = ds.at("balance_seed").get<std::uint64_t>();
    r.fingerprint.fold_seed = ds.at("fold_seed").get<std::uint64_t>();
    r.fingerprint.k = ds.at("k").get<int>();
    r.selection_metric = j.at("selection_metric").get<std::string>();
    for (const auto& f : j.at("families")) {
        FamilyOutcome fo;
        fo.family = f.at("family").get<std::string>();
        fo.best_config = candidate_from_json(f.at("best_config"));
        fo.train_mean = f.at("train_mean").get<double>();
        fo.train_std = f.at("train_std").get<double>();
        fo.test_mean = f.at("test_mean").get<double>();
        fo.test_std = f.at("test_std").get<double>();
        fo.fit_time_ms_mean = f.at("fit_time_ms_mean").get<double>();
        fo.train_test_gap = f.at("train_test_gap").get<double>();
        fo.note = f.at("note").get<std::string>();
        r.families.push_back(std::move(fo));
    }
    r.ranking_by_test =
        j.at("ranking_by_test").get<std::vector<std::string>>();
    r.ranking_by_time =
        j.at("ranking_by_time").get<std::vector<std::string>>();
    return r;
}

}  // namespace bcbench
