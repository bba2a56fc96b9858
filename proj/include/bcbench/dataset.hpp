#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bcbench/errors.hpp"

namespace bcbench {

// One line of the raw file: id, nine feature fields, class field.
struct RawRow {
    std::array<std::string, 11> fields;

    const std::string& id() const { return fields[0]; }
    const std::string& feature(std::size_t i) const { return fields[1 + i]; }
    const std::string& class_field() const { return fields[10]; }
};

struct RawTable {
    std::vector<RawRow> rows;
    std::string source_path;
};

// Cleaned numeric table: labels are 0 (benign) / 1 (malignant).
struct Dataset {
    std::vector<std::vector<double>> x;
    std::vector<int> y;
    std::vector<std::string> feature_names;

    std::size_t n_rows() const { return x.size(); }
    std::size_t n_features() const {
        return x.empty() ? feature_names.size() : x.front().size();
    }
    std::array<std::size_t, 2> class_counts() const;
    Dataset subset(const std::vector<std::size_t>& indices) const;
};

struct FeatureClassStats {
    int label = 0;
    std::string feature;
    double mean = 0.0;
    double stddev = 0.0;
    std::size_t count = 0;
};

struct ClassStats {
    std::vector<FeatureClassStats> entries;  // label-major, feature order
    bool sample_std = true;                  // divisor n-1
};

enum class BalanceStrategy { UndersampleMajority };

const std::vector<std::string>& wbc_feature_names();

RawTable load_raw(const std::string& path);
Dataset clean(const RawTable& raw);
Dataset balance(const Dataset& d, BalanceStrategy strategy,
                std::uint64_t seed);
ClassStats class_feature_stats(const Dataset& d);
void export_parallel_coordinates(const Dataset& d, const std::string& path);
void export_parallel_coordinates_svg(const Dataset& d,
                                     const std::string& path);

// z-scores every feature in place (constant features left untouched)
Dataset standardize(const Dataset& d);

std::string stats_to_csv(const ClassStats& stats);
std::string stats_to_json(const ClassStats& stats);

// shortest round-trip decimal form, integral values without a fraction
std::string format_value(double v);

}  // namespace bcbench
