#include "bcbench/model_eval.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "bcbench/errors.hpp"
#include "bcbench/random.hpp"

namespace bcbench {

FoldPlan stratified_kfold(const std::vector<int>& labels, int k,
                          std::uint64_t seed) {
    if (k < 2) throw ConfigError("stratified_kfold: k must be >= 2");
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        by_class[labels[i]].push_back(i);
    }
    for (const auto& [label, idx] : by_class) {
        if (idx.size() < static_cast<std::size_t>(k)) {
            throw DataError("stratified_kfold: class " +
                            std::to_string(label) + " has " +
                            std::to_string(idx.size()) + " rows, fewer than k=" +
                            std::to_string(k));
        }
    }
    FoldPlan plan;
    plan.k = k;
    plan.seed = seed;
    plan.assignments.assign(labels.size(), 0);
    std::mt19937_64 rng(seed);
    std::size_t counter = 0;  // runs across classes so fold sizes differ <= 1
    for (auto& [label, idx] : by_class) {
        deterministic_shuffle(idx, rng);
        for (std::size_t i : idx) {
            plan.assignments[i] = static_cast<int>(counter % static_cast<std::size_t>(k));
            ++counter;
        }
    }
    return plan;
}

double accuracy(const std::vector<int>& y_true,
                const std::vector<int>& y_pred) {
    if (y_true.empty()) throw DataError("accuracy of empty vectors");
    if (y_true.size() != y_pred.size()) {
        throw ShapeError("accuracy: length mismatch (" +
                         std::to_string(y_true.size()) + " vs " +
                         std::to_string(y_pred.size()) + ")");
    }
    std::size_t hits = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_true[i] == y_pred[i]) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(y_true.size());
}

double f1_score(const std::vector<int>& y_true,
                const std::vector<int>& y_pred) {
    if (y_true.empty()) throw DataError("f1_score of empty vectors");
    if (y_true.size() != y_pred.size()) {
        throw ShapeError("f1_score: length mismatch");
    }
    std::size_t tp = 0, fp = 0, fn = 0;
    for (std::size_t i = 0; i < y_true.size(); ++i) {
        if (y_pred[i] == 1 && y_true[i] == 1) ++tp;
        if (y_pred[i] == 1 && y_true[i] == 0) ++fp;
        if (y_pred[i] == 0 && y_true[i] == 1) ++fn;
    }
    if (tp == 0) return 0.0;
    double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
    double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
    return 2.0 * precision * recall / (precision + recall);
}

std::string param_value_to_string(const ParamValue& v) {
    if (std::holds_alternative<std::string>(v)) {
        return std::get<std::string>(v);
    }
    return format_value(std::get<double>(v));
}

bool CandidateConfig::has(const std::string& name) const {
    for (const auto& [key, value] : params) {
        if (key == name) return true;
    }
    return false;
}

double CandidateConfig::number(const std::string& name) const {
    for (const auto& [key, value] : params) {
        if (key == name) {
            if (!std::holds_alternative<double>(value)) {
                throw ConfigError("parameter '" + name + "' is not numeric");
            }
            return std::get<double>(value);
        }
    }
    throw ConfigError("missing parameter '" + name + "'");
}

const std::string& CandidateConfig::text(const std::string& name) const {
    for (const auto& [key, value] : params) {
        if (key == name) {
            if (!std::holds_alternative<std::string>(value)) {
                throw ConfigError("parameter '" + name + "' is not text");
            }
            return std::get<std::string>(value);
        }
    }
    throw ConfigError("missing parameter '" + name + "'");
}

std::string CandidateConfig::to_string() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (i) out << ", ";
        out << params[i].first << '=' << param_value_to_string(params[i].second);
    }
    return out.str();
}

std::size_t GridSpec::candidate_count() const {
    std::size_t n = axes.empty() ? 0 : 1;
    for (const auto& axis : axes) n *= axis.values.size();
    return n;
}

CVResult cross_validate(const ModelFamily& family,
                        const CandidateConfig& cfg, const Dataset& d,
                        const FoldPlan& plan) {
    if (plan.assignments.size() != d.n_rows()) {
        throw ShapeError("cross_validate: fold plan covers " +
                         std::to_string(plan.assignments.size()) +
                         " rows, dataset has " + std::to_string(d.n_rows()));
    }
    CVResult result;
    result.config = cfg;
    double f1_sum = 0.0;
    double time_sum = 0.0;
    for (int fold = 0; fold < plan.k; ++fold) {
        std::vector<std::size_t> train_idx, test_idx;
        for (std::size_t i = 0; i < d.n_rows(); ++i) {
            (plan.assignments[i] == fold ? test_idx : train_idx).push_back(i);
        }
        Dataset train = d.subset(train_idx);
        Dataset test = d.subset(test_idx);

        std::unique_ptr<Classifier> model;
        auto t0 = std::chrono::steady_clock::now();
        try {
            model = family.fit(train, cfg);
        } catch (const std::exception& e) {
            throw DataError("fit failed on fold " + std::to_string(fold) +
                            " for config {" + cfg.to_string() + "}: " +
                            e.what());
        }
        auto t1 = std::chrono::steady_clock::now();
        time_sum += std::chrono::duration<double, std::milli>(t1 - t0).count();

        auto predict_all = [&](const Dataset& part) {
            std::vector<int> preds;
            preds.reserve(part.n_rows());
            for (const auto& row : part.x) preds.push_back(model->predict(row));
            return preds;
        };
        std::vector<int> train_pred = predict_all(train);
        std::vector<int> test_pred = predict_all(test);
        result.per_fold.push_back({accuracy(train.y, train_pred),
                                   accuracy(test.y, test_pred)});
        f1_sum += f1_score(test.y, test_pred);
    }
    const double k = static_cast<double>(plan.k);
    for (const auto& fs : result.per_fold) {
        result.train_mean += fs.train;
        result.test_mean += fs.test;
    }
    result.train_mean /= k;
    result.test_mean /= k;
    for (const auto& fs : result.per_fold) {
        result.train_std += (fs.train - result.train_mean) *
                            (fs.train - result.train_mean);
        result.test_std += (fs.test - result.test_mean) *
                           (fs.test - result.test_mean);
    }
    result.train_std = std::sqrt(result.train_std / k);
    result.test_std = std::sqrt(result.test_std / k);
    result.test_f1_mean = f1_sum / k;
    result.fit_time_ms_mean = time_sum / k;
    return result;
}

namespace {

std::vector<CandidateConfig> enumerate_candidates(const GridSpec& spec) {
    std::vector<CandidateConfig> out;
    if (spec.axes.empty()) return out;
    std::vector<std::size_t> odometer(spec.axes.size(), 0);
    while (true) {
        CandidateConfig cfg;
        for (std::size_t a = 0; a < spec.axes.size(); ++a) {
            cfg.params.emplace_back(spec.axes[a].name,
                                    spec.axes[a].values[odometer[a]]);
        }
        out.push_back(std::move(cfg));
        std::size_t a = spec.axes.size();
        while (a-- > 0) {
            if (++odometer[a] < spec.axes[a].values.size()) break;
            odometer[a] = 0;
            if (a == 0) return out;
        }
    }
}

}  // namespace

GridSearchResult grid_search(const ModelFamily& family, const GridSpec& spec,
                             const Dataset& d, const FoldPlan& plan,
                             int jobs) {
    if (spec.axes.empty()) throw ConfigError("grid_search: empty grid");
    GridSearchResult out;
    out.spec = spec;

    std::vector<CandidateConfig> candidates = enumerate_candidates(spec);
    for (auto& cfg : candidates) {
        try {
            family.validate(cfg);
            out.results.emplace_back();
            out.results.back().config = cfg;
        } catch (const ConfigError& e) {
            out.skipped.push_back({cfg, e.what()});
        }
    }
    if (out.results.empty()) {
        throw ConfigError("grid_search: no valid candidate in the grid");
    }

    std::vector<const CandidateConfig*> work;
    for (const auto& r : out.results) work.push_back(&r.config);

    if (jobs <= 1) {
        for (std::size_t i = 0; i < work.size(); ++i) {
            out.results[i] = cross_validate(family, *work[i], d, plan);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(
            static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) {
            pool.emplace_back([&, t] {
                try {
                    while (true) {
                        std::size_t i = next.fetch_add(1);
                        if (i >= work.size()) break;
                        out.results[i] =
                            cross_validate(family, *work[i], d, plan);
                    }
                } catch (...) {
                    errors[static_cast<std::size_t>(t)] =
                        std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    out.best_index = 0;
    for (std::size_t i = 1; i < out.results.size(); ++i) {
        if (out.results[i].test_mean > out.results[out.best_index].test_mean) {
            out.best_index = i;  // strict >: ties keep the earlier candidate
        }
    }
    return out;
}

std::string grid_results_to_csv(const GridSearchResult& r,
                                const ModelFamily& family) {
    std::ostringstream out;
    out << "status";
    for (const auto& axis : r.spec.axes) out << ',' << axis.name;
    out << ",train_mean,train_std,test_mean,test_std,test_f1_mean,"
           "fit_time_ms_mean,note\n";
    for (std::size_t i = 0; i < r.results.size(); ++i) {
        const CVResult& cv = r.results[i];
        out << (i == r.best_index ? "best" : "ok");
        for (const auto& [name, value] : cv.config.params) {
            out << ',' << param_value_to_string(value);
        }
        out << ',' << format_value(cv.train_mean) << ','
            << format_value(cv.train_std) << ',' << format_value(cv.test_mean)
            << ',' << format_value(cv.test_std) << ','
            << format_value(cv.test_f1_mean) << ','
            << format_value(cv.fit_time_ms_mean) << ','
            << (family.notes ? family.notes(cv.config) : "") << '\n';
    }
    for (const auto& s : r.skipped) {
        out << "skipped";
        for (const auto& [name, value] : s.config.params) {
            out << ',' << param_value_to_string(value);
        }
        out << ",,,,,,,\"" << s.reason << "\"\n";
    }
    return out.str();
}

GridSpec grid_spec_from_json_text(const std::string& text) {
    auto j = nlohmann::ordered_json::parse(text);
    GridSpec spec;
    spec.family = j.at("family").get<std::string>();
    for (const auto& [name, values] : j.at("axes").items()) {
        GridAxis axis;
        axis.name = name;
        for (const auto& v : values) {
            if (v.is_string()) {
                axis.values.emplace_back(v.get<std::string>());
            } else if (v.is_number()) {
                axis.values.emplace_back(v.get<double>());
            } else {
                throw ConfigError("grid axis '" + name +
                                  "': values must be numbers or strings");
            }
        }
        if (axis.values.empty()) {
            throw ConfigError("grid axis '" + name + "' has no values");
        }
        spec.axes.push_back(std::move(axis));
    }
    if (spec.axes.empty()) throw ConfigError("grid spec has no axes");
    return spec;
}

std::string candidate_to_json_text(const CandidateConfig& cfg) {
    nlohmann::ordered_json j;
    for (const auto& [name, value] : cfg.params) {
        if (std::holds_alternative<double>(value)) {
            j[name] = std::get<double>(value);
        } else {
            j[name] = std::get<std::string>(value);
        }
    }
    return j.dump();
}

}  // namespace bcbench
