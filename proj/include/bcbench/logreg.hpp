#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bcbench/dataset.hpp"

namespace bcbench {

enum class Penalty { None, L1, L2 };
enum class LrSolver { Lbfgs, NewtonCg, NewtonCholesky, Sag, Saga };

std::string penalty_name(Penalty p);
Penalty penalty_from_name(const std::string& name);
std::string solver_name(LrSolver s);
LrSolver solver_from_name(const std::string& name);

struct LogRegConfig {
    double c = 1.0;  // inverse regularization strength; ignored when
                     // penalty is none
    Penalty penalty = Penalty::L2;
    LrSolver solver = LrSolver::Lbfgs;
    int max_iters = 1000;  // epochs for sag/saga, outer steps otherwise
    double tol = 1e-6;     // gradient-norm stopping threshold
    std::uint64_t fit_seed = 0;
};

struct LogRegModel {
    double beta0 = 0.0;
    std::vector<double> beta;
    LogRegConfig config;
    bool converged = false;
    int iters_used = 0;
};

struct LossGrad {
    double loss = 0.0;
    double dbeta0 = 0.0;
    std::vector<double> dbeta;
};

// throws ConfigError for invalid field values or solver/penalty pairs
// (l1 is only supported by saga)
void validate(const LogRegConfig& cfg);

double predict_proba(const LogRegModel& m, std::span<const double> x);

// loss = mean NLL + R(beta)/(c*n); R is ||.||_1 for l1, ||.||^2/2 for l2.
// The intercept is never penalized.  For l1 the subgradient is 0 at kinks.
LossGrad nll_and_gradient(double beta0, const std::vector<double>& beta,
                          const Dataset& d, const LogRegConfig& cfg);

LogRegModel fit_logreg(const Dataset& d, const LogRegConfig& cfg);

// 1 iff predict_proba >= 0.5
int predict(const LogRegModel& m, std::span<const double> x);

std::string logreg_to_json(const LogRegModel& m);
LogRegModel logreg_from_json(const std::string& text);

}  // namespace bcbench
