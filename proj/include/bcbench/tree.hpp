#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>

#include "bcbench/dataset.hpp"

namespace bcbench {

enum class SplitCriterion { Gini, InfoGain };

std::string criterion_name(SplitCriterion c);
SplitCriterion criterion_from_name(const std::string& name);

struct TreeConfig {
    SplitCriterion criterion = SplitCriterion::Gini;
    int max_depth = 10;
    int min_samples_split = 2;
    int min_samples_leaf = 1;
};

struct TreeNode {
    // internal node fields (left != nullptr)
    int feature_index = -1;
    double threshold = 0.0;
    std::unique_ptr<TreeNode> left;
    std::unique_ptr<TreeNode> right;
    // leaf fields
    int label = -1;
    std::array<std::size_t, 2> class_counts{0, 0};

    bool is_leaf() const { return left == nullptr; }
};

struct TreeModel {
    std::unique_ptr<TreeNode> root;
    TreeConfig config;
    int n_leaves = 0;
    int depth = 0;  // edges from root to deepest leaf; a lone leaf is 0
};

// Node impurities over binary class counts; total must be positive.
double gini(std::size_t count0, std::size_t count1);
double entropy(std::size_t count0, std::size_t count1);

// impurity(parent) minus size-weighted child impurity
double split_gain(const std::array<std::size_t, 2>& parent,
                  const std::array<std::size_t, 2>& left,
                  const std::array<std::size_t, 2>& right,
                  SplitCriterion criterion);

struct SplitChoice {
    int feature_index = -1;
    double threshold = 0.0;
    double gain = 0.0;
};

// Exhaustive scan over (feature, midpoint-threshold) candidates; ties go
// to the lower feature index, then the lower threshold.  Empty when no
// candidate has positive gain under the leaf-size constraint.
std::optional<SplitChoice> best_split(const Dataset& rows,
                                      const TreeConfig& cfg);

TreeModel fit_tree(const Dataset& d, const TreeConfig& cfg);
int predict(const TreeModel& m, std::span<const double> x);

std::string tree_to_json(const TreeModel& m);
TreeModel tree_from_json(const std::string& text);
std::string render_tree_text(const TreeModel& m,
                             const std::vector<std::string>& feature_names);

}  // namespace bcbench
