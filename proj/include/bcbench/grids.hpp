#pragma once

#include <string>

#include "bcbench/model_eval.hpp"

namespace bcbench {

// Built-in hyperparameter grids for the three model families.
// Logistic regression: c = 0 is excluded (inverse strength is undefined
// there); the CLI prints a notice about the exclusion.
GridSpec builtin_logreg_grid();
GridSpec builtin_svm_grid();
GridSpec builtin_tree_grid();
GridSpec builtin_grid(const std::string& family);

// family names: "lr", "svm", "dt"
const ModelFamily& family_by_name(const std::string& name);

}  // namespace bcbench
