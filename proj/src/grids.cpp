#include "bcbench/grids.hpp"

#include "bcbench/errors.hpp"
#include "bcbench/logreg.hpp"
#include "bcbench/random.hpp"
#include "bcbench/svm.hpp"
#include "bcbench/tree.hpp"

namespace bcbench {

namespace {

std::vector<ParamValue> numbers(std::initializer_list<double> vs) {
    std::vector<ParamValue> out;
    for (double v : vs) out.emplace_back(v);
    return out;
}

std::vector<ParamValue> texts(std::initializer_list<const char*> vs) {
    std::vector<ParamValue> out;
    for (const char* v : vs) out.emplace_back(std::string(v));
    return out;
}

// fits get a seed derived from the candidate itself so grid evaluation
// order (and parallelism) cannot change any result
std::uint64_t config_seed(const CandidateConfig& cfg) {
    return fnv1a(cfg.to_string());
}

struct LogRegClassifier : Classifier {
    LogRegModel model;
    int predict(std::span<const double> x) const override {
        return bcbench::predict(model, x);
    }
};

struct SvmClassifier : Classifier {
    SvmModel model;
    int predict(std::span<const double> x) const override {
        return bcbench::predict(model, x);
    }
};

struct TreeClassifier : Classifier {
    TreeModel model;
    int predict(std::span<const double> x) const override {
        return bcbench::predict(model, x);
    }
};

LogRegConfig logreg_config_from(const CandidateConfig& cfg) {
    LogRegConfig out;
    out.c = cfg.number("c");
    out.solver = solver_from_name(cfg.text("solver"));
    out.penalty = penalty_from_name(cfg.text("penalty"));
    out.fit_seed = config_seed(cfg);
    return out;
}

SvmConfig svm_config_from(const CandidateConfig& cfg) {
    SvmConfig out;
    out.c = cfg.number("c");
    out.kernel.kind = kernel_from_name(cfg.text("kernel"));
    out.kernel.gamma = cfg.number("gamma");
    if (cfg.has("degree")) {
        out.kernel.degree = static_cast<int>(cfg.number("degree"));
    }
    if (cfg.has("coef0")) out.kernel.coef0 = cfg.number("coef0");
    out.fit_seed = config_seed(cfg);
    return out;
}

TreeConfig tree_config_from(const CandidateConfig& cfg) {
    TreeConfig out;
    out.max_depth = static_cast<int>(cfg.number("max_depth"));
    out.min_samples_split = static_cast<int>(cfg.number("min_samples_split"));
    out.min_samples_leaf = static_cast<int>(cfg.number("min_samples_leaf"));
    out.criterion = cfg.has("criterion")
                        ? criterion_from_name(cfg.text("criterion"))
                        : SplitCriterion::Gini;
    return out;
}

const ModelFamily& logreg_family() {
    static const ModelFamily family{
        "lr",
        [](const CandidateConfig& cfg) {
            validate(logreg_config_from(cfg));
        },
        [](const Dataset& d, const CandidateConfig& cfg) {
            auto c = std::make_unique<LogRegClassifier>();
            c->model = fit_logreg(d, logreg_config_from(cfg));
            return std::unique_ptr<Classifier>(std::move(c));
        },
        [](const CandidateConfig& cfg) -> std::string {
            if (cfg.text("penalty") == "none") return "c inert (penalty=none)";
            return "";
        },
    };
    return family;
}

const ModelFamily& svm_family() {
    static const ModelFamily family{
        "svm",
        [](const CandidateConfig& cfg) {
            SvmConfig sc = svm_config_from(cfg);
            if (sc.c <= 0.0) throw ConfigError("svm: c must be positive");
            if (sc.kernel.gamma <= 0.0) {
                throw ConfigError("svm: gamma must be positive");
            }
        },
        [](const Dataset& d, const CandidateConfig& cfg) {
            auto c = std::make_unique<SvmClassifier>();
            c->model = fit_svm(d, svm_config_from(cfg));
            return std::unique_ptr<Classifier>(std::move(c));
        },
        [](const CandidateConfig& cfg) -> std::string {
            if (cfg.text("kernel") == "linear") {
                return "gamma inert (kernel=linear)";
            }
            return "";
        },
    };
    return family;
}

const ModelFamily& tree_family() {
    static const ModelFamily family{
        "dt",
        [](const CandidateConfig& cfg) {
            TreeConfig tc = tree_config_from(cfg);
            if (tc.max_depth < 1) {
                throw ConfigError("dt: max_depth must be >= 1");
            }
            if (tc.min_samples_split < 2) {
                throw ConfigError("dt: min_samples_split must be >= 2");
            }
            if (tc.min_samples_leaf < 1) {
                throw ConfigError("dt: min_samples_leaf must be >= 1");
            }
        },
        [](const Dataset& d, const CandidateConfig& cfg) {
            auto c = std::make_unique<TreeClassifier>();
            c->model = fit_tree(d, tree_config_from(cfg));
            return std::unique_ptr<Classifier>(std::move(c));
        },
        [](const CandidateConfig&) -> std::string { return ""; },
    };
    return family;
}

}  // namespace

GridSpec builtin_logreg_grid() {
    GridSpec spec;
    spec.family = "lr";
    GridAxis c{"c", {}};
    for (int i = 1; i <= 20; ++i) c.values.emplace_back(0.5 * i);
    spec.axes.push_back(std::move(c));
    spec.axes.push_back({"solver", texts({"lbfgs", "newton-cg",
                                          "newton-cholesky", "sag", "saga"})});
    spec.axes.push_back({"penalty", texts({"none", "l1", "l2"})});
    return spec;
}

GridSpec builtin_svm_grid() {
    GridSpec spec;
    spec.family = "svm";
    // kernel-major: score ties resolve to the earliest kernel
    spec.axes.push_back({"kernel", texts({"linear", "poly", "rbf",
                                          "sigmoid"})});
    spec.axes.push_back({"c", numbers({0.1, 0.5, 1, 3, 9, 100})});
    spec.axes.push_back({"gamma", numbers({0.1, 1, 10})});
    return spec;
}

GridSpec builtin_tree_grid() {
    GridSpec spec;
    spec.family = "dt";
    spec.axes.push_back(
        {"max_depth", numbers({1, 2, 5, 10, 15, 20, 30, 50, 100})});
    spec.axes.push_back(
        {"min_samples_split", numbers({2, 5, 10, 15, 20, 30, 50})});
    spec.axes.push_back(
        {"min_samples_leaf", numbers({1, 2, 5, 10, 15, 20, 30, 50})});
    return spec;
}

GridSpec builtin_grid(const std::string& family) {
    if (family == "lr") return builtin_logreg_grid();
    if (family == "svm") return builtin_svm_grid();
    if (family == "dt") return builtin_tree_grid();
    throw ConfigError("unknown model family: " + family);
}

const ModelFamily& family_by_name(const std::string& name) {
    if (name == "lr") return logreg_family();
    if (name == "svm") return svm_family();
    if (name == "dt") return tree_family();
    throw ConfigError("unknown model family: " + name);
}

}  // namespace bcbench
