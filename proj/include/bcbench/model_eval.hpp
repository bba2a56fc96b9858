#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bcbench/dataset.hpp"

namespace bcbench {

struct FoldPlan {
    int k = 0;
    std::vector<int> assignments;  // fold id per row, 0..k-1
    std::uint64_t seed = 0;
};

// per-class round-robin assignment after a seeded shuffle
FoldPlan stratified_kfold(const std::vector<int>& labels, int k,
                          std::uint64_t seed);

double accuracy(const std::vector<int>& y_true,
                const std::vector<int>& y_pred);
double f1_score(const std::vector<int>& y_true,
                const std::vector<int>& y_pred);

using ParamValue = std::variant<double, std::string>;

std::string param_value_to_string(const ParamValue& v);

// One point of a grid; axis order is preserved.
struct CandidateConfig {
    std::vector<std::pair<std::string, ParamValue>> params;

    bool has(const std::string& name) const;
    double number(const std::string& name) const;
    const std::string& text(const std::string& name) const;
    std::string to_string() const;
};

struct GridAxis {
    std::string name;
    std::vector<ParamValue> values;
};

struct GridSpec {
    std::string family;  // "lr", "svm", "dt"
    std::vector<GridAxis> axes;

    std::size_t candidate_count() const;
};

struct FoldScore {
    double train = 0.0;
    double test = 0.0;
};

struct CVResult {
    CandidateConfig config;
    std::vector<FoldScore> per_fold;
    double train_mean = 0.0;
    double train_std = 0.0;   // population std over folds
    double test_mean = 0.0;
    double test_std = 0.0;
    double test_f1_mean = 0.0;
    double fit_time_ms_mean = 0.0;
};

class Classifier {
 public:
    virtual ~Classifier() = default;
    virtual int predict(std::span<const double> x) const = 0;
};

struct ModelFamily {
    std::string name;
    // throws ConfigError when the candidate is invalid for this family
    std::function<void(const CandidateConfig&)> validate;
    std::function<std::unique_ptr<Classifier>(const Dataset&,
                                              const CandidateConfig&)>
        fit;
    // short annotation such as "gamma inert (kernel=linear)", or empty
    std::function<std::string(const CandidateConfig&)> notes;
};

CVResult cross_validate(const ModelFamily& family,
                        const CandidateConfig& cfg, const Dataset& d,
                        const FoldPlan& plan);

struct SkippedCandidate {
    CandidateConfig config;
    std::string reason;
};

struct GridSearchResult {
    GridSpec spec;
    std::vector<CVResult> results;  // valid candidates, enumeration order
    std::vector<SkippedCandidate> skipped;
    std::size_t best_index = 0;
    std::string selection_metric = "accuracy";

    const CVResult& best() const { return results.at(best_index); }
};

// Exhaustive evaluation of the axis product.  jobs > 1 evaluates
// candidates concurrently; results are identical to jobs == 1.
GridSearchResult grid_search(const ModelFamily& family, const GridSpec& spec,
                             const Dataset& d, const FoldPlan& plan,
                             int jobs = 1);

std::string grid_results_to_csv(const GridSearchResult& r,
                                const ModelFamily& family);
GridSpec grid_spec_from_json_text(const std::string& text);
std::string candidate_to_json_text(const CandidateConfig& cfg);

}  // namespace bcbench
