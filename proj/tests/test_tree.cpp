#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "bcbench/dataset.hpp"
#include "bcbench/tree.hpp"

using namespace bcbench;

namespace {

Dataset make_dataset(std::vector<std::vector<double>> x,
                     std::vector<int> y) {
    Dataset d;
    d.x = std::move(x);
    d.y = std::move(y);
    for (std::size_t f = 0; f < (d.x.empty() ? 0 : d.x[0].size()); ++f) {
        d.feature_names.push_back("f" + std::to_string(f));
    }
    return d;
}

// independent re-enumeration of every (feature, threshold) candidate by
// direct partition counting; same tie rule as the implementation
std::optional<SplitChoice> brute_force_best_split(const Dataset& d,
                                                  const TreeConfig& cfg) {
    std::array<std::size_t, 2> parent{0, 0};
    for (int label : d.y) parent[static_cast<std::size_t>(label)]++;
    std::optional<SplitChoice> best;
    for (std::size_t f = 0; f < d.n_features(); ++f) {
        std::set<double> values;
        for (const auto& row : d.x) values.insert(row[f]);
        std::vector<double> sorted(values.begin(), values.end());
        for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
            double thr = (sorted[k] + sorted[k + 1]) / 2.0;
            std::array<std::size_t, 2> left{0, 0}, right{0, 0};
            for (std::size_t i = 0; i < d.n_rows(); ++i) {
                auto& side = d.x[i][f] <= thr ? left : right;
                side[static_cast<std::size_t>(d.y[i])]++;
            }
            std::size_t nl = left[0] + left[1];
            std::size_t nr = right[0] + right[1];
            if (nl < static_cast<std::size_t>(cfg.min_samples_leaf) ||
                nr < static_cast<std::size_t>(cfg.min_samples_leaf)) {
                continue;
            }
            double gain = split_gain(parent, left, right, cfg.criterion);
            if (gain > 0.0 && (!best || gain > best->gain)) {
                best = SplitChoice{static_cast<int>(f), thr, gain};
            }
        }
    }
    return best;
}

void check_constraints(const TreeNode& node, int depth,
                       const TreeConfig& cfg) {
    CHECK(depth <= cfg.max_depth);
    std::size_t size = node.class_counts[0] + node.class_counts[1];
    if (node.is_leaf()) {
        CHECK(size >= static_cast<std::size_t>(cfg.min_samples_leaf));
        return;
    }
    CHECK(size >= static_cast<std::size_t>(cfg.min_samples_split));
    check_constraints(*node.left, depth + 1, cfg);
    check_constraints(*node.right, depth + 1, cfg);
}

int count_nodes(const TreeNode& node) {
    if (node.is_leaf()) return 1;
    return 1 + count_nodes(*node.left) + count_nodes(*node.right);
}

}  // namespace

TEST_CASE("gini closed forms") {
    CHECK(gini(10, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(gini(5, 5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(gini(3, 1) == doctest::Approx(0.375).epsilon(1e-12));
    CHECK_THROWS_AS(gini(0, 0), DataError);
}

TEST_CASE("entropy closed forms") {
    CHECK(entropy(8, 8) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(7, 0) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(std::abs(entropy(3, 1) - 0.8112781245) < 1e-9);
    CHECK_THROWS_AS(entropy(0, 0), DataError);
}

TEST_CASE("impurities are maximal at balance and zero when pure") {
    for (std::size_t n = 1; n <= 100; ++n) {
        CHECK(gini(n, n) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(entropy(n, n) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(gini(n, 0) == 0.0);
        CHECK(entropy(0, n) == 0.0);
        for (std::size_t a = 0; a <= n; ++a) {
            CHECK(gini(a, n - a + 1) <= 0.5 + 1e-12);
            CHECK(entropy(a, n - a + 1) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("split_gain closed forms") {
    CHECK(split_gain({5, 5}, {5, 0}, {0, 5}, SplitCriterion::InfoGain) ==
          doctest::Approx(1.0).epsilon(1e-12));
    // children proportional to the parent: no gain
    CHECK(split_gain({6, 6}, {3, 3}, {3, 3}, SplitCriterion::InfoGain) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(split_gain({4, 4}, {3, 1}, {1, 3}, SplitCriterion::Gini) ==
          doctest::Approx(0.125).epsilon(1e-12));
    CHECK_THROWS_AS(split_gain({4, 4}, {4, 4}, {0, 0},
                               SplitCriterion::Gini),
                    DataError);
    CHECK_THROWS_AS(split_gain({4, 4}, {3, 1}, {2, 3},
                               SplitCriterion::Gini),
                    DataError);
}

TEST_CASE("split_gain is non-negative for every legal split") {
    for (std::size_t a = 0; a <= 8; ++a) {
        for (std::size_t b = 0; b <= 8; ++b) {
            if (a + b < 2) continue;
            for (std::size_t l0 = 0; l0 <= a; ++l0) {
                for (std::size_t l1 = 0; l1 <= b; ++l1) {
                    if (l0 + l1 == 0 || l0 + l1 == a + b) continue;
                    for (auto crit : {SplitCriterion::Gini,
                                      SplitCriterion::InfoGain}) {
                        double g = split_gain({a, b}, {l0, l1},
                                              {a - l0, b - l1}, crit);
                        CHECK(g >= -1e-12);
                    }
                }
            }
        }
    }
}

TEST_CASE("best_split finds the unique perfect threshold") {
    Dataset d = make_dataset({{1}, {2}, {8}, {9}}, {0, 0, 1, 1});
    TreeConfig cfg;
    auto s = best_split(d, cfg);
    REQUIRE(s.has_value());
    CHECK(s->feature_index == 0);
    CHECK(s->threshold == doctest::Approx(5.0));
    CHECK(s->gain == doctest::Approx(gini(2, 2)).epsilon(1e-12));
}

TEST_CASE("best_split returns nothing when no feature varies") {
    Dataset d = make_dataset({{3, 3}, {3, 3}, {3, 3}}, {0, 1, 0});
    CHECK_FALSE(best_split(d, TreeConfig{}).has_value());
}

TEST_CASE("best_split matches the brute-force oracle") {
    std::mt19937_64 rng(20260808);
    for (int rep = 0; rep < 25; ++rep) {
        std::vector<std::vector<double>> x;
        std::vector<int> y;
        for (int i = 0; i < 20; ++i) {
            std::vector<double> row(9);
            for (auto& v : row) {
                v = static_cast<double>(1 + rng() % 10);
            }
            x.push_back(row);
            // label loosely follows the first feature so gains vary
            y.push_back((row[0] + static_cast<double>(rng() % 6)) > 6 ? 1
                                                                      : 0);
        }
        if (std::count(y.begin(), y.end(), 1) == 0 ||
            std::count(y.begin(), y.end(), 0) == 0) {
            continue;
        }
        Dataset d = make_dataset(x, y);
        for (auto crit : {SplitCriterion::Gini, SplitCriterion::InfoGain}) {
            TreeConfig cfg;
            cfg.criterion = crit;
            cfg.min_samples_leaf = 1 + static_cast<int>(rng() % 3);
            auto got = best_split(d, cfg);
            auto want = brute_force_best_split(d, cfg);
            REQUIRE(got.has_value() == want.has_value());
            if (got) {
                CHECK(got->feature_index == want->feature_index);
                CHECK(got->threshold == want->threshold);
                CHECK(got->gain == want->gain);
            }
        }
    }
}

TEST_CASE("fit_tree stops on purity") {
    Dataset d = make_dataset({{1}, {2}, {3}}, {1, 1, 1});
    TreeModel m = fit_tree(d, TreeConfig{});
    CHECK(m.depth == 0);
    CHECK(m.n_leaves == 1);
    CHECK(m.root->is_leaf());
    CHECK(m.root->label == 1);
}

TEST_CASE("fit_tree respects max_depth") {
    Dataset d = make_dataset({{1, 4}, {2, 1}, {8, 2}, {9, 9}, {5, 5}},
                             {0, 0, 1, 1, 0});
    TreeConfig cfg;
    cfg.max_depth = 1;
    TreeModel m = fit_tree(d, cfg);
    CHECK(m.depth <= 1);
    CHECK(count_nodes(*m.root) <= 3);
}

TEST_CASE("fit_tree learns a known two-level rule") {
    // label = (f0 > 5) and (f1 > 5)
    std::vector<std::vector<double>> x = {{2, 2}, {2, 8}, {8, 2}, {8, 8},
                                          {3, 7}, {7, 3}, {7, 7}, {1, 1}};
    std::vector<int> y;
    for (const auto& row : x) y.push_back(row[0] > 5 && row[1] > 5 ? 1 : 0);
    Dataset d = make_dataset(x, y);
    TreeConfig cfg;
    cfg.max_depth = 2;
    TreeModel m = fit_tree(d, cfg);
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        CHECK(predict(m, d.x[i]) == d.y[i]);
    }
    CHECK(count_nodes(*m.root) <= 7);
}

TEST_CASE("grown trees satisfy the structural constraints") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<std::vector<double>> x;
        std::vector<int> y;
        for (int i = 0; i < 80; ++i) {
            x.push_back({static_cast<double>(rng() % 10 + 1),
                         static_cast<double>(rng() % 10 + 1),
                         static_cast<double>(rng() % 10 + 1)});
            y.push_back(static_cast<int>(rng() % 2));
        }
        TreeConfig cfg;
        cfg.max_depth = 1 + static_cast<int>(rng() % 6);
        cfg.min_samples_split = 2 + static_cast<int>(rng() % 8);
        cfg.min_samples_leaf = 1 + static_cast<int>(rng() % 5);
        TreeModel m = fit_tree(make_dataset(x, y), cfg);
        check_constraints(*m.root, 0, cfg);
        CHECK(m.depth <= cfg.max_depth);
    }
}

TEST_CASE("training accuracy is non-decreasing in max_depth") {
    RawTable raw = load_raw(BCBENCH_DATA_FILE);
    Dataset d = balance(clean(raw), BalanceStrategy::UndersampleMajority,
                        42);
    double prev = 0.0;
    for (int depth = 1; depth <= 10; ++depth) {
        TreeConfig cfg;
        cfg.max_depth = depth;
        cfg.min_samples_split = 2;
        cfg.min_samples_leaf = 1;
        TreeModel m = fit_tree(d, cfg);
        std::size_t hits = 0;
        for (std::size_t i = 0; i < d.n_rows(); ++i) {
            hits += predict(m, d.x[i]) == d.y[i];
        }
        double acc = static_cast<double>(hits) /
                     static_cast<double>(d.n_rows());
        CHECK(acc >= prev - 1e-12);
        prev = acc;
    }
}

TEST_CASE("fit_tree is deterministic") {
    std::mt19937_64 rng(3);
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    for (int i = 0; i < 60; ++i) {
        x.push_back({static_cast<double>(rng() % 10 + 1),
                     static_cast<double>(rng() % 10 + 1)});
        y.push_back(static_cast<int>(rng() % 2));
    }
    Dataset d = make_dataset(x, y);
    TreeConfig cfg;
    cfg.max_depth = 6;
    CHECK(tree_to_json(fit_tree(d, cfg)) == tree_to_json(fit_tree(d, cfg)));
}

TEST_CASE("leaf label ties go to malignant") {
    Dataset d = make_dataset({{1}, {1}}, {0, 1});
    TreeModel m = fit_tree(d, TreeConfig{});
    CHECK(m.root->is_leaf());
    CHECK(m.root->label == 1);
}

TEST_CASE("predict descends left on equality") {
    auto root = std::make_unique<TreeNode>();
    root->feature_index = 2;
    root->threshold = 5.0;
    root->left = std::make_unique<TreeNode>();
    root->left->label = 0;
    root->left->class_counts = {3, 0};
    root->right = std::make_unique<TreeNode>();
    root->right->label = 1;
    root->right->class_counts = {0, 3};
    root->class_counts = {3, 3};
    TreeModel m;
    m.root = std::move(root);
    m.depth = 1;
    m.n_leaves = 2;
    std::vector<double> at{0, 0, 5.0};
    std::vector<double> above{0, 0, 5.01};
    CHECK(predict(m, at) == 0);
    CHECK(predict(m, above) == 1);
    std::vector<double> tiny{1.0};
    CHECK_THROWS_AS(predict(m, tiny), ShapeError);
}

TEST_CASE("tree json round trip") {
    std::mt19937_64 rng(5);
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    for (int i = 0; i < 40; ++i) {
        x.push_back({static_cast<double>(rng() % 10 + 1),
                     static_cast<double>(rng() % 10 + 1)});
        y.push_back(static_cast<int>(rng() % 2));
    }
    Dataset d = make_dataset(x, y);
    TreeConfig cfg;
    cfg.max_depth = 4;
    TreeModel m = fit_tree(d, cfg);
    std::string once = tree_to_json(m);
    TreeModel back = tree_from_json(once);
    CHECK(tree_to_json(back) == once);
    for (const auto& row : d.x) {
        CHECK(predict(back, row) == predict(m, row));
    }
    std::string text = render_tree_text(m, d.feature_names);
    if (!m.root->is_leaf()) {
        CHECK(text.find("if f0") != std::string::npos);
    }
}

TEST_CASE("invalid tree configuration is rejected") {
    Dataset d = make_dataset({{1}, {2}}, {0, 1});
    TreeConfig bad;
    bad.max_depth = 0;
    CHECK_THROWS_AS(fit_tree(d, bad), ConfigError);
    Dataset empty;
    CHECK_THROWS_AS(fit_tree(empty, TreeConfig{}), DataError);
    CHECK_THROWS_AS(best_split(empty, TreeConfig{}), DataError);
}
