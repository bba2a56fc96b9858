#include "bcbench/tree.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "bcbench/errors.hpp"

namespace bcbench {

std::string criterion_name(SplitCriterion c) {
    return c == SplitCriterion::Gini ? "gini" : "info_gain";
}

SplitCriterion criterion_from_name(const std::string& name) {
    if (name == "gini") return SplitCriterion::Gini;
    if (name == "info_gain" || name == "entropy") {
        return SplitCriterion::InfoGain;
    }
    throw ConfigError("unknown split criterion: " + name);
}

double gini(std::size_t count0, std::size_t count1) {
    std::size_t total = count0 + count1;
    if (total == 0) throw DataError("gini of an empty node");
    double p0 = static_cast<double>(count0) / static_cast<double>(total);
    double p1 = static_cast<double>(count1) / static_cast<double>(total);
    return 1.0 - (p0 * p0 + p1 * p1);
}

double entropy(std::size_t count0, std::size_t count1) {
    std::size_t total = count0 + count1;
    if (total == 0) throw DataError("entropy of an empty node");
    double h = 0.0;
    for (std::size_t c : {count0, count1}) {
        if (c == 0) continue;  // 0 log 0 := 0
        double p = static_cast<double>(c) / static_cast<double>(total);
        h -= p * std::log2(p);
    }
    return h;
}

double split_gain(const std::array<std::size_t, 2>& parent,
                  const std::array<std::size_t, 2>& left,
                  const std::array<std::size_t, 2>& right,
                  SplitCriterion criterion) {
    if (left[0] + right[0] != parent[0] || left[1] + right[1] != parent[1]) {
        throw DataError("split_gain: children do not partition the parent");
    }
    std::size_t n = parent[0] + parent[1];
    std::size_t nl = left[0] + left[1];
    std::size_t nr = right[0] + right[1];
    if (nl == 0 || nr == 0) throw DataError("split_gain: empty child");
    auto impurity = criterion == SplitCriterion::Gini ? gini : entropy;
    double wl = static_cast<double>(nl) / static_cast<double>(n);
    double wr = static_cast<double>(nr) / static_cast<double>(n);
    return impurity(parent[0], parent[1]) -
           (wl * impurity(left[0], left[1]) +
            wr * impurity(right[0], right[1]));
}

namespace {

struct IndexedRows {
    const Dataset* d;
    std::vector<std::size_t> idx;

    std::array<std::size_t, 2> counts() const {
        std::array<std::size_t, 2> c{0, 0};
        for (std::size_t i : idx) {
            c[static_cast<std::size_t>(d->y[i])]++;
        }
        return c;
    }
};

std::optional<SplitChoice> best_split_indexed(const IndexedRows& rows,
                                              const TreeConfig& cfg) {
    const Dataset& d = *rows.d;
    const std::size_t n = rows.idx.size();
    auto parent = rows.counts();
    std::optional<SplitChoice> best;
    std::vector<std::pair<double, int>> vals(n);

    for (std::size_t f = 0; f < d.n_features(); ++f) {
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t i = rows.idx[k];
            vals[k] = {d.x[i][f], d.y[i]};
        }
        std::sort(vals.begin(), vals.end());

        std::array<std::size_t, 2> left{0, 0};
        for (std::size_t k = 0; k + 1 < n; ++k) {
            left[static_cast<std::size_t>(vals[k].second)]++;
            if (vals[k].first == vals[k + 1].first) continue;
            std::size_t nl = k + 1;
            std::size_t nr = n - nl;
            if (nl < static_cast<std::size_t>(cfg.min_samples_leaf) ||
                nr < static_cast<std::size_t>(cfg.min_samples_leaf)) {
                continue;
            }
            std::array<std::size_t, 2> right{parent[0] - left[0],
                                             parent[1] - left[1]};
            double gain = split_gain(parent, left, right, cfg.criterion);
            if (gain > 0.0 && (!best || gain > best->gain)) {
                double threshold = (vals[k].first + vals[k + 1].first) / 2.0;
                best = SplitChoice{static_cast<int>(f), threshold, gain};
            }
        }
    }
    return best;
}

std::unique_ptr<TreeNode> make_leaf(const std::array<std::size_t, 2>& counts) {
    auto node = std::make_unique<TreeNode>();
    node->class_counts = counts;
    node->label = counts[1] >= counts[0] ? 1 : 0;  // tie goes to malignant
    return node;
}

std::unique_ptr<TreeNode> grow(const IndexedRows& rows, int depth,
                               const TreeConfig& cfg) {
    auto counts = rows.counts();
    bool pure = counts[0] == 0 || counts[1] == 0;
    if (depth >= cfg.max_depth || pure ||
        rows.idx.size() < static_cast<std::size_t>(cfg.min_samples_split)) {
        return make_leaf(counts);
    }
    auto split = best_split_indexed(rows, cfg);
    if (!split) return make_leaf(counts);

    IndexedRows left_rows{rows.d, {}};
    IndexedRows right_rows{rows.d, {}};
    for (std::size_t i : rows.idx) {
        if (rows.d->x[i][static_cast<std::size_t>(split->feature_index)] <=
            split->threshold) {
            left_rows.idx.push_back(i);
        } else {
            right_rows.idx.push_back(i);
        }
    }
    auto node = std::make_unique<TreeNode>();
    node->feature_index = split->feature_index;
    node->threshold = split->threshold;
    node->class_counts = counts;
    node->left = grow(left_rows, depth + 1, cfg);
    node->right = grow(right_rows, depth + 1, cfg);
    return node;
}

void measure(const TreeNode& node, int depth, int& max_depth,
             int& n_leaves) {
    if (node.is_leaf()) {
        max_depth = std::max(max_depth, depth);
        n_leaves++;
        return;
    }
    measure(*node.left, depth + 1, max_depth, n_leaves);
    measure(*node.right, depth + 1, max_depth, n_leaves);
}

}  // namespace

std::optional<SplitChoice> best_split(const Dataset& rows,
                                      const TreeConfig& cfg) {
    if (rows.n_rows() == 0) throw DataError("best_split on an empty set");
    IndexedRows all{&rows, {}};
    all.idx.resize(rows.n_rows());
    std::iota(all.idx.begin(), all.idx.end(), std::size_t{0});
    return best_split_indexed(all, cfg);
}

TreeModel fit_tree(const Dataset& d, const TreeConfig& cfg) {
    if (d.n_rows() == 0) throw DataError("fit_tree on an empty dataset");
    if (cfg.max_depth < 1 || cfg.min_samples_split < 2 ||
        cfg.min_samples_leaf < 1) {
        throw ConfigError("invalid tree configuration");
    }
    IndexedRows all{&d, {}};
    all.idx.resize(d.n_rows());
    std::iota(all.idx.begin(), all.idx.end(), std::size_t{0});

    TreeModel model;
    model.config = cfg;
    model.root = grow(all, 0, cfg);
    measure(*model.root, 0, model.depth, model.n_leaves);
    return model;
}

int predict(const TreeModel& m, std::span<const double> x) {
    const TreeNode* node = m.root.get();
    while (!node->is_leaf()) {
        std::size_t f = static_cast<std::size_t>(node->feature_index);
        if (f >= x.size()) {
            throw ShapeError("tree predict: input has " +
                             std::to_string(x.size()) + " features, node " +
                             "tests feature " + std::to_string(f));
        }
        node = x[f] <= node->threshold ? node->left.get() : node->right.get();
    }
    return node->label;
}

namespace {

nlohmann::ordered_json node_to_json(const TreeNode& node) {
    nlohmann::ordered_json j;
    if (node.is_leaf()) {
        j["label"] = node.label;
        j["class_counts"] = {node.class_counts[0], node.class_counts[1]};
    } else {
        j["feature_index"] = node.feature_index;
        j["threshold"] = node.threshold;
        j["class_counts"] = {node.class_counts[0], node.class_counts[1]};
        j["left"] = node_to_json(*node.left);
        j["right"] = node_to_json(*node.right);
    }
    return j;
}

std::unique_ptr<TreeNode> node_from_json(const nlohmann::json& j) {
    auto node = std::make_unique<TreeNode>();
    node->class_counts = {j.at("class_counts")[0].get<std::size_t>(),
                          j.at("class_counts")[1].get<std::size_t>()};
    if (j.contains("label")) {
        node->label = j.at("label").get<int>();
    } else {
        node->feature_index = j.at("feature_index").get<int>();
        node->threshold = j.at("threshold").get<double>();
        node->left = node_from_json(j.at("left"));
        node->right = node_from_json(j.at("right"));
    }
    return node;
}

void render_node(const TreeNode& node, int indent,
                 const std::vector<std::string>& names,
                 std::ostringstream& out) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (node.is_leaf()) {
        out << pad << "-> " << node.label << "  (" << node.class_counts[0]
            << "/" << node.class_counts[1] << ")\n";
        return;
    }
    std::size_t f = static_cast<std::size_t>(node.feature_index);
    std::string fname = f < names.size() ? names[f]
                                         : "feature " + std::to_string(f);
    out << pad << "if " << fname << " <= " << format_value(node.threshold)
        << ":\n";
    render_node(*node.left, indent + 1, names, out);
    out << pad << "else:\n";
    render_node(*node.right, indent + 1, names, out);
}

}  // namespace

std::string tree_to_json(const TreeModel& m) {
    nlohmann::ordered_json j;
    j["criterion"] = criterion_name(m.config.criterion);
    j["max_depth"] = m.config.max_depth;
    j["min_samples_split"] = m.config.min_samples_split;
    j["min_samples_leaf"] = m.config.min_samples_leaf;
    j["depth"] = m.depth;
    j["n_leaves"] = m.n_leaves;
    j["root"] = node_to_json(*m.root);
    return j.dump(2) + "\n";
}

TreeModel tree_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    TreeModel m;
    m.config.criterion = criterion_from_name(j.at("criterion"));
    m.config.max_depth = j.at("max_depth").get<int>();
    m.config.min_samples_split = j.at("min_samples_split").get<int>();
    m.config.min_samples_leaf = j.at("min_samples_leaf").get<int>();
    m.depth = j.at("depth").get<int>();
    m.n_leaves = j.at("n_leaves").get<int>();
    m.root = node_from_json(j.at("root"));
    return m;
}

std::string render_tree_text(const TreeModel& m,
                             const std::vector<std::string>& feature_names) {
    std::ostringstream out;
    render_node(*m.root, 0, feature_names, out);
    return out.str();
}

}  // namespace bcbench
