#include "bcbench/svm.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "bcbench/errors.hpp"
#include "bcbench/random.hpp"

namespace bcbench {

std::string kernel_name(KernelKind k) {
    switch (k) {
        case KernelKind::Linear: return "linear";
        case KernelKind::Poly: return "poly";
        case KernelKind::Rbf: return "rbf";
        case KernelKind::Sigmoid: return "sigmoid";
    }
    return "?";
}

KernelKind kernel_from_name(const std::string& name) {
    if (name == "linear") return KernelKind::Linear;
    if (name == "poly") return KernelKind::Poly;
    if (name == "rbf") return KernelKind::Rbf;
    if (name == "sigmoid") return KernelKind::Sigmoid;
    throw ConfigError("unknown kernel: " + name);
}

double kernel_eval(const KernelSpec& k, std::span<const double> a,
                   std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ShapeError("kernel_eval: dimension mismatch (" +
                         std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()) + ")");
    }
    switch (k.kind) {
        case KernelKind::Linear: {
            double dot = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
            return dot;
        }
        case KernelKind::Poly: {
            double dot = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
            return std::pow(k.gamma * dot + k.coef0, k.degree);
        }
        case KernelKind::Rbf: {
            double dist2 = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) {
                double diff = a[i] - b[i];
                dist2 += diff * diff;
            }
            return std::exp(-k.gamma * dist2);
        }
        case KernelKind::Sigmoid: {
            double dot = 0.0;
            for (std::size_t i = 0; i < a.size(); ++i) dot += a[i] * b[i];
            return std::tanh(k.gamma * dot + k.coef0);
        }
    }
    throw ConfigError("unhandled kernel kind");
}

namespace {

void validate_config(const SvmConfig& cfg) {
    if (cfg.c <= 0.0) throw ConfigError("svm: c must be positive");
    if (cfg.tol <= 0.0) throw ConfigError("svm: tol must be positive");
    if (cfg.max_passes < 1) throw ConfigError("svm: max_passes must be >= 1");
    if (cfg.kernel.gamma <= 0.0) {
        throw ConfigError("svm: gamma must be positive");
    }
    if (cfg.kernel.kind == KernelKind::Poly && cfg.kernel.degree < 1) {
        throw ConfigError("svm: poly degree must be >= 1");
    }
}

double dual_objective(const std::vector<double>& alphas,
                      const std::vector<double>& ys,
                      const std::vector<std::vector<double>>& K) {
    double obj = 0.0;
    const std::size_t n = alphas.size();
    for (std::size_t i = 0; i < n; ++i) obj += alphas[i];
    for (std::size_t i = 0; i < n; ++i) {
        if (alphas[i] == 0.0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (alphas[j] == 0.0) continue;
            obj -= 0.5 * alphas[i] * alphas[j] * ys[i] * ys[j] * K[i][j];
        }
    }
    return obj;
}

}  // namespace

SvmModel fit_svm(const Dataset& d, const SvmConfig& cfg) {
    validate_config(cfg);
    const std::size_t n = d.n_rows();
    auto counts = d.class_counts();
    if (counts[0] == 0 || counts[1] == 0) {
        throw DataError("fit_svm requires both classes present");
    }

    std::vector<double> ys(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = d.y[i] == 1 ? 1.0 : -1.0;

    std::vector<std::vector<double>> K(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double v = kernel_eval(cfg.kernel, d.x[i], d.x[j]);
            K[i][j] = v;
            K[j][i] = v;
        }
    }

    const double C = cfg.c;
    const double tol = cfg.tol;
    std::vector<double> alphas(n, 0.0);
    // F_i = sum_j alpha_j y_j K_ij - y_i (bias-free margin residual)
    std::vector<double> F(n);
    for (std::size_t i = 0; i < n; ++i) F[i] = -ys[i];
    std::mt19937_64 rng(cfg.fit_seed);

    // i may still rise toward the constraint from above (in_up) or fall
    // (in_low); optimality is max_low F - min_up F <= 2 tol
    auto in_up = [&](std::size_t i) {
        return (ys[i] > 0.0 && alphas[i] < C) ||
               (ys[i] < 0.0 && alphas[i] > 0.0);
    };
    auto in_low = [&](std::size_t i) {
        return (ys[i] > 0.0 && alphas[i] > 0.0) ||
               (ys[i] < 0.0 && alphas[i] < C);
    };

    auto try_update = [&](std::size_t i, std::size_t j) -> bool {
        if (i == j) return false;
        double L, H;
        if (ys[i] != ys[j]) {
            L = std::max(0.0, alphas[j] - alphas[i]);
            H = std::min(C, C + alphas[j] - alphas[i]);
        } else {
            L = std::max(0.0, alphas[i] + alphas[j] - C);
            H = std::min(C, alphas[i] + alphas[j]);
        }
        if (L >= H) return false;
        double eta = K[i][i] + K[j][j] - 2.0 * K[i][j];
        double aj;
        if (eta > 1e-12) {
            aj = alphas[j] + ys[j] * (F[i] - F[j]) / eta;
        } else {
            // flat or indefinite direction: the dual is linear/convex
            // along the pair line, so the ascent-side endpoint wins
            double slope = ys[j] * (F[i] - F[j]);
            if (std::abs(slope) < 1e-12) return false;
            aj = slope > 0.0 ? H : L;
        }
        aj = std::clamp(aj, L, H);
        if (std::abs(aj - alphas[j]) < 1e-12) return false;
        double ai = alphas[i] - ys[i] * ys[j] * (aj - alphas[j]);
        // snap roundoff dust to the exact bound so the violating-pair
        // sets stay clean
        auto snap = [&](double a) {
            if (a < 1e-14) return 0.0;
            if (a > C - 1e-14) return C;
            return a;
        };
        ai = snap(ai);
        aj = snap(aj);
        double di = ai - alphas[i];
        double dj = aj - alphas[j];
        for (std::size_t k = 0; k < n; ++k) {
            F[k] += ys[i] * di * K[i][k] + ys[j] * dj * K[j][k];
        }
        alphas[i] = ai;
        alphas[j] = aj;
        return true;
    };

    // randomized fallback partner scan for a fixed first choice
    auto fallback = [&](std::size_t i) -> bool {
        std::size_t start = static_cast<std::size_t>(
            bounded_draw(rng, static_cast<std::uint64_t>(n)));
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t j = start + t;
            if (j >= n) j -= n;
            if (try_update(i, j)) return true;
        }
        return false;
    };

    // last resort before declaring the problem stuck: scan every pair
    auto exhaustive_fallback = [&]() -> bool {
        std::size_t start = static_cast<std::size_t>(
            bounded_draw(rng, static_cast<std::uint64_t>(n)));
        for (std::size_t t = 0; t < n; ++t) {
            std::size_t i = start + t;
            if (i >= n) i -= n;
            if (!in_up(i) && !in_low(i)) continue;
            if (fallback(i)) return true;
        }
        return false;
    };

    SvmModel model;
    model.kernel = cfg.kernel;
    model.config = cfg;

    auto bounds = [&]() {
        // (min_up F, its index, max_low F, its index)
        struct Bounds {
            double up = 0.0, low = 0.0;
            std::size_t iu = 0, il = 0;
            bool have_up = false, have_low = false;
        } bd;
        for (std::size_t i = 0; i < n; ++i) {
            if (in_up(i) && (!bd.have_up || F[i] < bd.up)) {
                bd.up = F[i];
                bd.iu = i;
                bd.have_up = true;
            }
            if (in_low(i) && (!bd.have_low || F[i] > bd.low)) {
                bd.low = F[i];
                bd.il = i;
                bd.have_low = true;
            }
        }
        return bd;
    };

    // second-order partner choice: among admissible j, maximize the
    // estimated dual increase (F_j - F_i)^2 / eta
    auto best_partner = [&](std::size_t i) -> std::size_t {
        double best_gain = 0.0;
        std::size_t jbest = n;
        for (std::size_t j = 0; j < n; ++j) {
            if (!in_low(j)) continue;
            double diff = F[j] - F[i];
            if (diff <= 0.0) continue;
            double eta = K[i][i] + K[j][j] - 2.0 * K[i][j];
            if (eta <= 1e-12) continue;  // degenerate pairs via fallback only
            double gain = diff * diff / eta;
            if (gain > best_gain) {
                best_gain = gain;
                jbest = j;
            }
        }
        return jbest;
    };

    int iters = 0;
    while (iters < cfg.max_passes) {
        auto bd = bounds();
        if (!bd.have_up || !bd.have_low) {
            model.kkt_satisfied = true;
            break;
        }
        if (bd.low - bd.up <= 2.0 * tol) {
            model.kkt_satisfied = true;
            break;
        }
        ++iters;
        std::size_t j2 = best_partner(bd.iu);
        bool progressed = (j2 < n && try_update(bd.iu, j2)) ||
                          try_update(bd.iu, bd.il) || fallback(bd.iu) ||
                          fallback(bd.il) || exhaustive_fallback();
        if (cfg.track_dual_objective) {
            model.dual_objective_trace.push_back(
                dual_objective(alphas, ys, K));
        }
        if (!progressed) break;  // violation remains but no pair can move
    }
    model.sweeps_used = iters;

    auto bd = bounds();
    double b = 0.0;
    if (bd.have_up && bd.have_low) {
        b = -(bd.up + bd.low) / 2.0;
    } else if (bd.have_up) {
        b = -bd.up;
    } else if (bd.have_low) {
        b = -bd.low;
    }

    bool any_in_bound = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (alphas[i] > 1e-8) {
            model.support_vectors.push_back(d.x[i]);
            model.dual_coefs.push_back(alphas[i] * ys[i]);
            model.support_indices.push_back(i);
            if (alphas[i] < C - 1e-8) any_in_bound = true;
        }
    }
    model.bias = b;
    model.non_separated = !any_in_bound;
    return model;
}

double decision_function(const SvmModel& m, std::span<const double> x) {
    double value = m.bias;
    for (std::size_t i = 0; i < m.support_vectors.size(); ++i) {
        value += m.dual_coefs[i] * kernel_eval(m.kernel,
                                               m.support_vectors[i], x);
    }
    return value;
}

int predict(const SvmModel& m, std::span<const double> x) {
    return decision_function(m, x) >= 0.0 ? 1 : 0;
}

std::string svm_to_json(const SvmModel& m) {
    nlohmann::ordered_json j;
    j["kernel"] = {{"kind", kernel_name(m.kernel.kind)},
                   {"gamma", m.kernel.gamma},
                   {"degree", m.kernel.degree},
                   {"coef0", m.kernel.coef0}};
    j["c"] = m.config.c;
    j["tol"] = m.config.tol;
    j["max_passes"] = m.config.max_passes;
    j["fit_seed"] = m.config.fit_seed;
    j["bias"] = m.bias;
    j["kkt_satisfied"] = m.kkt_satisfied;
    j["non_separated"] = m.non_separated;
    j["sweeps_used"] = m.sweeps_used;
    j["dual_coefs"] = m.dual_coefs;
    j["support_indices"] = m.support_indices;
    j["support_vectors"] = m.support_vectors;
    return j.dump(2) + "\n";
}

SvmModel svm_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    SvmModel m;
    m.kernel.kind = kernel_from_name(j.at("kernel").at("kind"));
    m.kernel.gamma = j.at("kernel").at("gamma").get<double>();
    m.kernel.degree = j.at("kernel").at("degree").get<int>();
    m.kernel.coef0 = j.at("kernel").at("coef0").get<double>();
    m.config.kernel = m.kernel;
    m.config.c = j.at("c").get<double>();
    m.config.tol = j.at("tol").get<double>();
    m.config.max_passes = j.at("max_passes").get<int>();
    m.config.fit_seed = j.at("fit_seed").get<std::uint64_t>();
    m.bias = j.at("bias").get<double>();
    m.kkt_satisfied = j.at("kkt_satisfied").get<bool>();
    m.non_separated = j.at("non_separated").get<bool>();
    m.sweeps_used = j.at("sweeps_used").get<int>();
    m.dual_coefs = j.at("dual_coefs").get<std::vector<double>>();
    m.support_indices =
        j.at("support_indices").get<std::vector<std::size_t>>();
    m.support_vectors =
        j.at("support_vectors").get<std::vector<std::vector<double>>>();
    return m;
}

}  // namespace bcbench
