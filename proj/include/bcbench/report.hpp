#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bcbench/model_eval.hpp"

namespace bcbench {

struct QualitativeProfile {
    std::string performance;
    std::string capability;
    std::string computation_time;
    std::string tuning;
};

struct FamilyOutcome {
    std::string family;  // "lr", "dt", "svm"
    CandidateConfig best_config;
    double train_mean = 0.0;
    double train_std = 0.0;
    double test_mean = 0.0;
    double test_std = 0.0;
    double fit_time_ms_mean = 0.0;
    double train_test_gap = 0.0;
    std::string note;  // inert-parameter annotation for the best config
};

struct DatasetFingerprint {
    std::size_t rows = 0;
    std::size_t benign = 0;
    std::size_t malignant = 0;
    std::uint64_t balance_seed = 0;
    std::uint64_t fold_seed = 0;
    int k = 0;
};

struct ComparisonReport {
    std::vector<FamilyOutcome> families;  // fixed order: lr, dt, svm
    DatasetFingerprint fingerprint;
    std::string selection_metric = "accuracy";
    std::vector<std::string> ranking_by_test;  // descending test_mean
    std::vector<std::string> ranking_by_time;  // ascending fit time
};

// expects exactly one result per family (lr, dt, svm in any order);
// a missing or duplicated family is a DataError
ComparisonReport compare_models(
    const std::vector<std::pair<std::string, const GridSearchResult*>>&
        results,
    const DatasetFingerprint& fingerprint);

enum class ReportFormat { TextTable, Csv, Json, Markdown };

ReportFormat report_format_from_name(const std::string& name);
std::string report_format_extension(ReportFormat f);

std::string render_report(const ComparisonReport& r, ReportFormat format);
ComparisonReport report_from_json(const std::string& text);

const QualitativeProfile& qualitative_profile(const std::string& family);

}  // namespace bcbench
