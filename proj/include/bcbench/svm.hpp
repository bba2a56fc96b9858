#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bcbench/dataset.hpp"

namespace bcbench {

enum class KernelKind { Linear, Poly, Rbf, Sigmoid };

std::string kernel_name(KernelKind k);
KernelKind kernel_from_name(const std::string& name);

struct KernelSpec {
    KernelKind kind = KernelKind::Linear;
    double gamma = 1.0;
    int degree = 3;     // poly only
    double coef0 = 0.0; // poly / sigmoid
};

struct SvmConfig {
    double c = 1.0;
    KernelSpec kernel;
    double tol = 1e-3;        // KKT tolerance
    int max_passes = 60000;   // cap on SMO pair updates
    std::uint64_t fit_seed = 0;
    bool track_dual_objective = false;
};

struct SvmModel {
    std::vector<std::vector<double>> support_vectors;
    std::vector<double> dual_coefs;  // alpha_i * y_i, y in {-1,+1}
    std::vector<std::size_t> support_indices;  // rows of the training set
    double bias = 0.0;
    KernelSpec kernel;
    SvmConfig config;
    bool kkt_satisfied = false;
    bool non_separated = false;  // no margin (in-bound) support vector
    int sweeps_used = 0;         // pair updates consumed
    std::vector<double> dual_objective_trace;  // per update, when tracked
};

double kernel_eval(const KernelSpec& k, std::span<const double> a,
                   std::span<const double> b);

SvmModel fit_svm(const Dataset& d, const SvmConfig& cfg);
double decision_function(const SvmModel& m, std::span<const double> x);
int predict(const SvmModel& m, std::span<const double> x);

std::string svm_to_json(const SvmModel& m);
SvmModel svm_from_json(const std::string& text);

}  // namespace bcbench
