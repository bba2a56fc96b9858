#include "bcbench/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "bcbench/random.hpp"

namespace bcbench {

const std::vector<std::string>& wbc_feature_names() {
    static const std::vector<std::string> names = {
        "Clump Thickness",
        "Uniformity Cell Size",
        "Uniformity Cell Shape",
        "Marginal Adhesion",
        "Single Epithelial Cell Size",
        "Bare Nuclei",
        "Bland Chromatin",
        "Normal Nucleoli",
        "Mitoses",
    };
    return names;
}

std::array<std::size_t, 2> Dataset::class_counts() const {
    std::array<std::size_t, 2> counts{0, 0};
    for (int label : y) counts[static_cast<std::size_t>(label)]++;
    return counts;
}

Dataset Dataset::subset(const std::vector<std::size_t>& indices) const {
    Dataset out;
    out.feature_names = feature_names;
    out.x.reserve(indices.size());
    out.y.reserve(indices.size());
    for (std::size_t i : indices) {
        out.x.push_back(x[i]);
        out.y.push_back(y[i]);
    }
    return out;
}

std::string format_value(double v) {
    if (std::rint(v) == v && std::abs(v) < 1e15) {
        char buf[32];
        auto [p, ec] = std::to_chars(buf, buf + sizeof(buf),
                                     static_cast<long long>(v));
        return std::string(buf, p);
    }
    char buf[64];
    auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, p);
}

RawTable load_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open data file: " + path);
    RawTable table;
    table.source_path = path;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        RawRow row;
        std::size_t field = 0;
        std::size_t start = 0;
        while (true) {
            std::size_t comma = line.find(',', start);
            std::string value = line.substr(
                start, comma == std::string::npos ? comma : comma - start);
            if (field < row.fields.size()) row.fields[field] = value;
            ++field;
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (field != 11) {
            throw ParseError("line " + std::to_string(line_no) + " of " +
                             path + ": expected 11 fields, got " +
                             std::to_string(field));
        }
        table.rows.push_back(std::move(row));
    }
    if (in.bad()) throw IoError("read failure on " + path);
    return table;
}

namespace {

double parse_feature(const std::string& text, std::size_t row_no,
                     std::size_t feature_idx) {
    int value = 0;
    auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(),
                                   value);
    if (ec != std::errc() || p != text.data() + text.size()) {
        throw DataError("row " + std::to_string(row_no) + ", feature '" +
                        wbc_feature_names()[feature_idx] +
                        "': not an integer: '" + text + "'");
    }
    if (value < 1 || value > 10) {
        throw DataError("row " + std::to_string(row_no) + ", feature '" +
                        wbc_feature_names()[feature_idx] +
                        "': value " + std::to_string(value) +
                        " outside 1..10");
    }
    return static_cast<double>(value);
}

}  // namespace

Dataset clean(const RawTable& raw) {
    Dataset d;
    d.feature_names = wbc_feature_names();
    std::size_t row_no = 0;
    for (const RawRow& row : raw.rows) {
        ++row_no;
        bool missing = false;
        for (std::size_t f = 0; f < 9; ++f) {
            if (row.feature(f) == "?") {
                missing = true;
                break;
            }
        }
        if (missing) continue;

        int label;
        if (row.class_field() == "2") {
            label = 0;
        } else if (row.class_field() == "4") {
            label = 1;
        } else {
            throw DataError("row " + std::to_string(row_no) +
                            ": class value '" + row.class_field() +
                            "' is neither 2 nor 4");
        }
        std::vector<double> features(9);
        for (std::size_t f = 0; f < 9; ++f) {
            features[f] = parse_feature(row.feature(f), row_no, f);
        }
        d.x.push_back(std::move(features));
        d.y.push_back(label);
    }
    return d;
}

Dataset balance(const Dataset& d, BalanceStrategy strategy,
                std::uint64_t seed) {
    (void)strategy;  // single strategy: undersample the majority class
    auto counts = d.class_counts();
    if (counts[0] == 0 || counts[1] == 0) {
        throw DataError("balance requires both classes present");
    }
    std::size_t minority = counts[0] <= counts[1] ? 0 : 1;
    std::size_t keep = counts[minority];

    std::vector<std::size_t> majority_rows;
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (static_cast<std::size_t>(d.y[i]) != minority) {
            majority_rows.push_back(i);
        }
    }
    std::mt19937_64 rng(seed);
    deterministic_shuffle(majority_rows, rng);
    majority_rows.resize(keep);

    std::vector<bool> selected(d.n_rows(), false);
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (static_cast<std::size_t>(d.y[i]) == minority) selected[i] = true;
    }
    for (std::size_t i : majority_rows) selected[i] = true;

    // emit in original row order so output is stable given the seed
    std::vector<std::size_t> kept;
    kept.reserve(2 * keep);
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        if (selected[i]) kept.push_back(i);
    }
    return d.subset(kept);
}

ClassStats class_feature_stats(const Dataset& d) {
    auto counts = d.class_counts();
    if (counts[0] == 0 || counts[1] == 0) {
        throw DataError("class_feature_stats requires both classes present");
    }
    ClassStats stats;
    stats.sample_std = true;
    for (int label = 0; label <= 1; ++label) {
        std::size_t n = counts[static_cast<std::size_t>(label)];
        for (std::size_t f = 0; f < d.n_features(); ++f) {
            double sum = 0.0;
            for (std::size_t i = 0; i < d.n_rows(); ++i) {
                if (d.y[i] == label) sum += d.x[i][f];
            }
            double mean = sum / static_cast<double>(n);
            double ss = 0.0;
            for (std::size_t i = 0; i < d.n_rows(); ++i) {
                if (d.y[i] == label) {
                    double dev = d.x[i][f] - mean;
                    ss += dev * dev;
                }
            }
            double stddev =
                n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
            stats.entries.push_back({label, d.feature_names[f], mean, stddev,
                                     n});
        }
    }
    return stats;
}

void export_parallel_coordinates(const Dataset& d, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    out << "class";
    for (const auto& name : d.feature_names) out << ',' << name;
    out << '\n';
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        out << d.y[i];
        for (double v : d.x[i]) out << ',' << format_value(v);
        out << '\n';
    }
    if (!out) throw IoError("write failure on " + path);
}

void export_parallel_coordinates_svg(const Dataset& d,
                                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path);
    const double width = 960.0, height = 420.0;
    const double left = 60.0, right = 40.0, top = 30.0, bottom = 50.0;
    const std::size_t nf = d.n_features();
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;
    auto axis_x = [&](std::size_t f) {
        return nf > 1 ? left + plot_w * static_cast<double>(f) /
                                   static_cast<double>(nf - 1)
                      : left + plot_w / 2;
    };
    auto value_y = [&](double v) {
        return top + plot_h * (10.0 - v) / 9.0;  // feature range 1..10
    };
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
        << "\" height=\"" << height << "\">\n";
    for (std::size_t i = 0; i < d.n_rows(); ++i) {
        out << "<polyline fill=\"none\" stroke=\""
            << (d.y[i] == 1 ? "#c0392b" : "#2980b9")
            << "\" stroke-opacity=\"0.25\" points=\"";
        for (std::size_t f = 0; f < nf; ++f) {
            out << axis_x(f) << ',' << value_y(d.x[i][f]);
            if (f + 1 < nf) out << ' ';
        }
        out << "\"/>\n";
    }
    for (std::size_t f = 0; f < nf; ++f) {
        out << "<line x1=\"" << axis_x(f) << "\" y1=\"" << value_y(10)
            << "\" x2=\"" << axis_x(f) << "\" y2=\"" << value_y(1)
            << "\" stroke=\"#333\"/>\n";
        out << "<text x=\"" << axis_x(f) << "\" y=\"" << height - 14
            << "\" font-size=\"9\" text-anchor=\"middle\">"
            << d.feature_names[f] << "</text>\n";
    }
    out << "</svg>\n";
    if (!out) throw IoError("write failure on " + path);
}

Dataset standardize(const Dataset& d) {
    Dataset out = d;
    for (std::size_t f = 0; f < d.n_features(); ++f) {
        double sum = 0.0;
        for (std::size_t i = 0; i < d.n_rows(); ++i) sum += d.x[i][f];
        double mean = sum / static_cast<double>(d.n_rows());
        double ss = 0.0;
        for (std::size_t i = 0; i < d.n_rows(); ++i) {
            double dev = d.x[i][f] - mean;
            ss += dev * dev;
        }
        double sd = std::sqrt(ss / static_cast<double>(d.n_rows()));
        if (sd == 0.0) sd = 1.0;
        for (std::size_t i = 0; i < d.n_rows(); ++i) {
            out.x[i][f] = (d.x[i][f] - mean) / sd;
        }
    }
    return out;
}

std::string stats_to_csv(const ClassStats& stats) {
    std::ostringstream out;
    out << "class,feature,mean,std,count\n";
    for (const auto& e : stats.entries) {
        out << e.label << ",\"" << e.feature << "\"," << format_value(e.mean)
            << ',' << format_value(e.stddev) << ',' << e.count << '\n';
    }
    return out.str();
}

std::string stats_to_json(const ClassStats& stats) {
    nlohmann::ordered_json root;
    root["std_convention"] = stats.sample_std ? "sample (n-1)" : "population";
    root["entries"] = nlohmann::ordered_json::array();
    for (const auto& e : stats.entries) {
        nlohmann::ordered_json item;
        item["class"] = e.label;
        item["feature"] = e.feature;
        item["mean"] = e.mean;
        item["std"] = e.stddev;
        item["count"] = e.count;
        root["entries"].push_back(std::move(item));
    }
    return root.dump(2) + "\n";
}

}  // namespace bcbench
