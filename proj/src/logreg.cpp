#include "bcbench/logreg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "bcbench/errors.hpp"
#include "bcbench/random.hpp"

namespace bcbench {

std::string penalty_name(Penalty p) {
    switch (p) {
        case Penalty::None: return "none";
        case Penalty::L1: return "l1";
        case Penalty::L2: return "l2";
    }
    return "?";
}

Penalty penalty_from_name(const std::string& name) {
    if (name == "none") return Penalty::None;
    if (name == "l1") return Penalty::L1;
    if (name == "l2") return Penalty::L2;
    throw ConfigError("unknown penalty: " + name);
}

std::string solver_name(LrSolver s) {
    switch (s) {
        case LrSolver::Lbfgs: return "lbfgs";
        case LrSolver::NewtonCg: return "newton-cg";
        case LrSolver::NewtonCholesky: return "newton-cholesky";
        case LrSolver::Sag: return "sag";
        case LrSolver::Saga: return "saga";
    }
    return "?";
}

LrSolver solver_from_name(const std::string& name) {
    if (name == "lbfgs") return LrSolver::Lbfgs;
    if (name == "newton-cg") return LrSolver::NewtonCg;
    if (name == "newton-cholesky") return LrSolver::NewtonCholesky;
    if (name == "sag") return LrSolver::Sag;
    if (name == "saga") return LrSolver::Saga;
    throw ConfigError("unknown solver: " + name);
}

void validate(const LogRegConfig& cfg) {
    if (cfg.penalty != Penalty::None && cfg.c <= 0.0) {
        throw ConfigError("logreg: c must be positive");
    }
    if (cfg.max_iters < 1) throw ConfigError("logreg: max_iters must be >= 1");
    if (cfg.tol <= 0.0) throw ConfigError("logreg: tol must be positive");
    if (cfg.penalty == Penalty::L1 && cfg.solver != LrSolver::Saga) {
        throw ConfigError("logreg: penalty=l1 requires solver=saga, got " +
                          solver_name(cfg.solver));
    }
}

namespace {

double sigmoid(double z) {
    if (z >= 0.0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    double e = std::exp(z);
    return e / (1.0 + e);
}

// log(1 + exp(z)) without overflow
double log1pexp(double z) {
    if (z > 0.0) return z + std::log1p(std::exp(-z));
    return std::log1p(std::exp(z));
}

double dot_row(double beta0, const std::vector<double>& beta,
               std::span<const double> x) {
    double z = beta0;
    for (std::size_t f = 0; f < beta.size(); ++f) z += beta[f] * x[f];
    return z;
}

// regularization strength 1/(c*n); zero when the penalty is none
double reg_lambda(const LogRegConfig& cfg, std::size_t n) {
    if (cfg.penalty == Penalty::None) return 0.0;
    return 1.0 / (cfg.c * static_cast<double>(n));
}

double grad_norm(double g0, const std::vector<double>& g) {
    double s = g0 * g0;
    for (double v : g) s += v * v;
    return std::sqrt(s);
}

// ---------------------------------------------------------------- batch
// solvers working on the unscaled objective: lbfgs, newton-cg,
// newton-cholesky.  theta = (beta0, beta).

struct Theta {
    double b0 = 0.0;
    std::vector<double> w;
};

LossGrad eval(const Theta& t, const Dataset& d, const LogRegConfig& cfg) {
    return nll_and_gradient(t.b0, t.w, d, cfg);
}

double theta_dot(double a0, const std::vector<double>& a, double b0,
                 const std::vector<double>& b) {
    double s = a0 * b0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// backtracking Armijo line search; returns accepted step (0 on failure)
double armijo(Theta& t, LossGrad& lg, double dir0,
              const std::vector<double>& dir, const Dataset& d,
              const LogRegConfig& cfg) {
    double g_dot_dir = lg.dbeta0 * dir0;
    for (std::size_t i = 0; i < dir.size(); ++i) {
        g_dot_dir += lg.dbeta[i] * dir[i];
    }
    if (g_dot_dir >= 0.0) return 0.0;  // not a descent direction
    double step = 1.0;
    for (int it = 0; it < 60; ++it) {
        Theta cand = t;
        cand.b0 += step * dir0;
        for (std::size_t i = 0; i < cand.w.size(); ++i) {
            cand.w[i] += step * dir[i];
        }
        LossGrad cand_lg = eval(cand, d, cfg);
        if (cand_lg.loss <= lg.loss + 1e-4 * step * g_dot_dir) {
            t = cand;
            lg = cand_lg;
            return step;
        }
        step *= 0.5;
    }
    return 0.0;
}

struct BatchResult {
    Theta theta;
    bool converged = false;
    int iters = 0;
};

BatchResult solve_lbfgs(const Dataset& d, const LogRegConfig& cfg) {
    const std::size_t dim = d.n_features();
    Theta t{0.0, std::vector<double>(dim, 0.0)};
    LossGrad lg = eval(t, d, cfg);

    const int memory = 10;
    std::vector<std::pair<std::vector<double>, std::vector<double>>> pairs;
    std::vector<double> rho;

    BatchResult res;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        res.iters = iter;
        if (grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol) {
            res.converged = true;
            break;
        }
        // two-loop recursion over the flattened (b0, w) vector
        std::vector<double> q(dim + 1);
        q[0] = lg.dbeta0;
        for (std::size_t i = 0; i < dim; ++i) q[i + 1] = lg.dbeta[i];
        std::vector<double> alpha(pairs.size());
        for (std::size_t k = pairs.size(); k-- > 0;) {
            const auto& [s, yv] = pairs[k];
            double a = 0.0;
            for (std::size_t i = 0; i <= dim; ++i) a += s[i] * q[i];
            a *= rho[k];
            alpha[k] = a;
            for (std::size_t i = 0; i <= dim; ++i) q[i] -= a * yv[i];
        }
        if (!pairs.empty()) {
            const auto& [s, yv] = pairs.back();
            double sy = 0.0, yy = 0.0;
            for (std::size_t i = 0; i <= dim; ++i) {
                sy += s[i] * yv[i];
                yy += yv[i] * yv[i];
            }
            double scale = sy / yy;
            for (double& v : q) v *= scale;
        }
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto& [s, yv] = pairs[k];
            double beta_k = 0.0;
            for (std::size_t i = 0; i <= dim; ++i) beta_k += yv[i] * q[i];
            beta_k *= rho[k];
            for (std::size_t i = 0; i <= dim; ++i) {
                q[i] += (alpha[k] - beta_k) * s[i];
            }
        }
        double dir0 = -q[0];
        std::vector<double> dir(dim);
        for (std::size_t i = 0; i < dim; ++i) dir[i] = -q[i + 1];

        Theta prev = t;
        LossGrad prev_lg = lg;
        double step = armijo(t, lg, dir0, dir, d, cfg);
        if (step == 0.0) break;               // stalled
        if (lg.loss >= prev_lg.loss) break;   // at the numerical floor

        std::vector<double> s(dim + 1), yv(dim + 1);
        s[0] = t.b0 - prev.b0;
        yv[0] = lg.dbeta0 - prev_lg.dbeta0;
        for (std::size_t i = 0; i < dim; ++i) {
            s[i + 1] = t.w[i] - prev.w[i];
            yv[i + 1] = lg.dbeta[i] - prev_lg.dbeta[i];
        }
        double sy = 0.0;
        for (std::size_t i = 0; i <= dim; ++i) sy += s[i] * yv[i];
        if (sy > 1e-12) {
            pairs.emplace_back(std::move(s), std::move(yv));
            rho.push_back(1.0 / sy);
            if (static_cast<int>(pairs.size()) > memory) {
                pairs.erase(pairs.begin());
                rho.erase(rho.begin());
            }
        }
        res.iters = iter + 1;
    }
    if (!res.converged) {
        res.converged = grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol;
    }
    res.theta = std::move(t);
    return res;
}

// exact Hessian-vector product: Hv = X~^T D X~ v / n + lambda*v (no
// intercept term in the penalty); D_i = p_i (1 - p_i)
void hessian_vec(const Dataset& d, const std::vector<double>& probs,
                 double lambda, double v0, const std::vector<double>& v,
                 double& hv0, std::vector<double>& hv) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    hv0 = 0.0;
    hv.assign(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double xv = v0;
        for (std::size_t f = 0; f < dim; ++f) xv += d.x[i][f] * v[f];
        double w = probs[i] * (1.0 - probs[i]) * xv;
        hv0 += w;
        for (std::size_t f = 0; f < dim; ++f) hv[f] += w * d.x[i][f];
    }
    double inv_n = 1.0 / static_cast<double>(n);
    hv0 *= inv_n;
    for (std::size_t f = 0; f < dim; ++f) {
        hv[f] = hv[f] * inv_n + lambda * v[f];
    }
}

BatchResult solve_newton_cg(const Dataset& d, const LogRegConfig& cfg) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    const double lambda = cfg.penalty == Penalty::L2 ? reg_lambda(cfg, n)
                                                     : 0.0;
    Theta t{0.0, std::vector<double>(dim, 0.0)};
    LossGrad lg = eval(t, d, cfg);
    std::vector<double> probs(n);

    BatchResult res;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        res.iters = iter;
        double gnorm = grad_norm(lg.dbeta0, lg.dbeta);
        if (gnorm <= cfg.tol) {
            res.converged = true;
            break;
        }
        for (std::size_t i = 0; i < n; ++i) {
            probs[i] = sigmoid(dot_row(t.b0, t.w, d.x[i]));
        }
        // CG on H p = -g
        double p0 = 0.0;
        std::vector<double> p(dim, 0.0);
        double r0 = -lg.dbeta0;
        std::vector<double> r(dim);
        for (std::size_t f = 0; f < dim; ++f) r[f] = -lg.dbeta[f];
        double d0 = r0;
        std::vector<double> dv = r;
        double rr = theta_dot(r0, r, r0, r);
        double cg_tol = std::min(0.5, std::sqrt(gnorm)) * gnorm;
        double hv0;
        std::vector<double> hv;
        for (int cg = 0; cg < 2 * static_cast<int>(dim) + 10; ++cg) {
            if (std::sqrt(rr) <= cg_tol) break;
            hessian_vec(d, probs, lambda, d0, dv, hv0, hv);
            double dHd = theta_dot(d0, dv, hv0, hv);
            if (dHd <= 1e-16) {
                if (cg == 0) {
                    p0 = d0;
                    p = dv;  // fall back to steepest descent
                }
                break;
            }
            double step = rr / dHd;
            p0 += step * d0;
            for (std::size_t f = 0; f < dim; ++f) p[f] += step * dv[f];
            r0 -= step * hv0;
            for (std::size_t f = 0; f < dim; ++f) r[f] -= step * hv[f];
            double rr_new = theta_dot(r0, r, r0, r);
            double beta = rr_new / rr;
            rr = rr_new;
            d0 = r0 + beta * d0;
            for (std::size_t f = 0; f < dim; ++f) {
                dv[f] = r[f] + beta * dv[f];
            }
        }
        double loss_before = lg.loss;
        double step = armijo(t, lg, p0, p, d, cfg);
        if (step == 0.0) break;
        if (lg.loss >= loss_before) break;  // at the numerical floor
        res.iters = iter + 1;
    }
    if (!res.converged) {
        res.converged = grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol;
    }
    res.theta = std::move(t);
    return res;
}

// in-place Cholesky solve of A x = rhs for a small dense SPD matrix
bool cholesky_solve(std::vector<std::vector<double>> A,
                    std::vector<double> rhs, std::vector<double>& out) {
    const std::size_t m = A.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            double sum = A[i][j];
            for (std::size_t k = 0; k < j; ++k) sum -= A[i][k] * A[j][k];
            if (i == j) {
                if (sum <= 0.0) return false;
                A[i][i] = std::sqrt(sum);
            } else {
                A[i][j] = sum / A[j][j];
            }
        }
    }
    for (std::size_t i = 0; i < m; ++i) {  // forward
        double sum = rhs[i];
        for (std::size_t k = 0; k < i; ++k) sum -= A[i][k] * rhs[k];
        rhs[i] = sum / A[i][i];
    }
    out.assign(m, 0.0);
    for (std::size_t i = m; i-- > 0;) {  // backward
        double sum = rhs[i];
        for (std::size_t k = i + 1; k < m; ++k) sum -= A[k][i] * out[k];
        out[i] = sum / A[i][i];
    }
    return true;
}

BatchResult solve_newton_cholesky(const Dataset& d, const LogRegConfig& cfg) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    const double lambda = cfg.penalty == Penalty::L2 ? reg_lambda(cfg, n)
                                                     : 0.0;
    Theta t{0.0, std::vector<double>(dim, 0.0)};
    LossGrad lg = eval(t, d, cfg);

    BatchResult res;
    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        res.iters = iter;
        if (grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol) {
            res.converged = true;
            break;
        }
        const std::size_t m = dim + 1;
        std::vector<std::vector<double>> H(m, std::vector<double>(m, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            double p = sigmoid(dot_row(t.b0, t.w, d.x[i]));
            double w = p * (1.0 - p);
            H[0][0] += w;
            for (std::size_t f = 0; f < dim; ++f) {
                double xw = w * d.x[i][f];
                H[f + 1][0] += xw;
                for (std::size_t g = 0; g <= f; ++g) {
                    H[f + 1][g + 1] += xw * d.x[i][g];
                }
            }
        }
        double inv_n = 1.0 / static_cast<double>(n);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                H[i][j] *= inv_n;
                H[j][i] = H[i][j];
            }
        }
        for (std::size_t f = 1; f < m; ++f) H[f][f] += lambda;

        std::vector<double> rhs(m);
        rhs[0] = -lg.dbeta0;
        for (std::size_t f = 0; f < dim; ++f) rhs[f + 1] = -lg.dbeta[f];

        std::vector<double> pvec;
        double ridge = 0.0;
        while (true) {
            auto Hr = H;
            if (ridge > 0.0) {
                for (std::size_t i = 0; i < m; ++i) Hr[i][i] += ridge;
            }
            if (cholesky_solve(std::move(Hr), rhs, pvec)) break;
            ridge = ridge == 0.0 ? 1e-10 : ridge * 100.0;
            if (ridge > 1.0) {  // give up on curvature, use the gradient
                pvec = rhs;
                break;
            }
        }
        std::vector<double> dir(dim);
        for (std::size_t f = 0; f < dim; ++f) dir[f] = pvec[f + 1];
        double loss_before = lg.loss;
        double step = armijo(t, lg, pvec[0], dir, d, cfg);
        if (step == 0.0) break;
        if (lg.loss >= loss_before) break;  // at the numerical floor
        res.iters = iter + 1;
    }
    if (!res.converged) {
        res.converged = grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol;
    }
    res.theta = std::move(t);
    return res;
}

// ------------------------------------------------------------ sag / saga
//
// Direct stochastic-average-gradient solvers over the raw features with
// the standard 1/L step.  On badly scaled data they may exhaust the
// epoch budget before the gradient test passes; the model then reports
// converged=false (the fit is an implicitly regularized partial
// optimum, exactly what these solvers produce in that regime).

BatchResult solve_stochastic(const Dataset& d, const LogRegConfig& cfg,
                             bool saga) {
    const std::size_t n = d.n_rows();
    const std::size_t dim = d.n_features();
    const double lambda = reg_lambda(cfg, n);

    double max_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double sq = 1.0;  // intercept column
        for (std::size_t f = 0; f < dim; ++f) {
            sq += d.x[i][f] * d.x[i][f];
        }
        max_sq = std::max(max_sq, sq);
    }
    const double l2_lam = cfg.penalty == Penalty::L2 ? lambda : 0.0;
    const double step = 1.0 / (0.25 * max_sq + l2_lam);

    double u0 = 0.0;
    std::vector<double> u(dim, 0.0);
    std::vector<double> mem(n);        // stored residual p_i - y_i
    double avg0 = 0.0;
    std::vector<double> avg(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        mem[i] = 0.5 - static_cast<double>(d.y[i]);  // p = 0.5 at u = 0
        avg0 += mem[i];
        for (std::size_t f = 0; f < dim; ++f) {
            avg[f] += mem[i] * d.x[i][f];
        }
    }
    double inv_n = 1.0 / static_cast<double>(n);

    std::mt19937_64 rng(cfg.fit_seed);
    BatchResult res;
    bool done = false;
    for (int epoch = 0; epoch < cfg.max_iters && !done; ++epoch) {
        for (std::size_t s = 0; s < n; ++s) {
            std::size_t i = static_cast<std::size_t>(
                bounded_draw(rng, static_cast<std::uint64_t>(n)));
            double zi = u0;
            for (std::size_t f = 0; f < dim; ++f) {
                zi += u[f] * d.x[i][f];
            }
            double r_new = sigmoid(zi) - static_cast<double>(d.y[i]);
            double r_old = mem[i];
            double diff = r_new - r_old;

            if (saga) {
                // unbiased: g = (r_new - r_old) x_i + avg(mem)
                u0 -= step * (diff + avg0 * inv_n);
                for (std::size_t f = 0; f < dim; ++f) {
                    double g = diff * d.x[i][f] + avg[f] * inv_n +
                               l2_lam * u[f];
                    u[f] -= step * g;
                }
                if (cfg.penalty == Penalty::L1) {
                    double thr = step * lambda;
                    for (std::size_t f = 0; f < dim; ++f) {
                        if (u[f] > thr) {
                            u[f] -= thr;
                        } else if (u[f] < -thr) {
                            u[f] += thr;
                        } else {
                            u[f] = 0.0;
                        }
                    }
                }
                avg0 += diff;
                for (std::size_t f = 0; f < dim; ++f) {
                    avg[f] += diff * d.x[i][f];
                }
                mem[i] = r_new;
            } else {
                // sag: biased average including the fresh residual
                avg0 += diff;
                for (std::size_t f = 0; f < dim; ++f) {
                    avg[f] += diff * d.x[i][f];
                }
                mem[i] = r_new;
                u0 -= step * (avg0 * inv_n);
                for (std::size_t f = 0; f < dim; ++f) {
                    u[f] -= step * (avg[f] * inv_n + l2_lam * u[f]);
                }
            }
        }
        res.iters = epoch + 1;

        // exact convergence check once per epoch
        if (cfg.penalty == Penalty::L1) {
            // proximal-gradient residual
            double s0 = 0.0;
            std::vector<double> sm(dim, 0.0);
            for (std::size_t i = 0; i < n; ++i) {
                double zi = u0;
                for (std::size_t f = 0; f < dim; ++f) {
                    zi += u[f] * d.x[i][f];
                }
                double r = sigmoid(zi) - static_cast<double>(d.y[i]);
                s0 += r;
                for (std::size_t f = 0; f < dim; ++f) {
                    sm[f] += r * d.x[i][f];
                }
            }
            s0 *= inv_n;
            for (std::size_t f = 0; f < dim; ++f) sm[f] *= inv_n;
            double resid = s0 * s0;
            for (std::size_t f = 0; f < dim; ++f) {
                double thr = step * lambda;
                double moved = u[f] - step * sm[f];
                double prox;
                if (moved > thr) {
                    prox = moved - thr;
                } else if (moved < -thr) {
                    prox = moved + thr;
                } else {
                    prox = 0.0;
                }
                double gproj = (u[f] - prox) / step;
                resid += gproj * gproj;
            }
            if (std::sqrt(resid) <= cfg.tol) done = true;
        } else {
            LossGrad lg = nll_and_gradient(u0, u, d, cfg);
            if (grad_norm(lg.dbeta0, lg.dbeta) <= cfg.tol) done = true;
        }
    }
    res.converged = done;
    res.theta.w = std::move(u);
    res.theta.b0 = u0;
    return res;
}

}  // namespace

double predict_proba(const LogRegModel& m, std::span<const double> x) {
    if (x.size() != m.beta.size()) {
        throw ShapeError("predict_proba: expected " +
                         std::to_string(m.beta.size()) + " features, got " +
                         std::to_string(x.size()));
    }
    return sigmoid(dot_row(m.beta0, m.beta, x));
}

LossGrad nll_and_gradient(double beta0, const std::vector<double>& beta,
                          const Dataset& d, const LogRegConfig& cfg) {
    const std::size_t n = d.n_rows();
    if (n == 0) throw DataError("nll_and_gradient on an empty dataset");
    if (!d.x.empty() && d.x.front().size() != beta.size()) {
        throw ShapeError("nll_and_gradient: beta has " +
                         std::to_string(beta.size()) + " entries, data has " +
                         std::to_string(d.x.front().size()) + " features");
    }
    const std::size_t dim = beta.size();
    LossGrad out;
    out.dbeta.assign(dim, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double z = dot_row(beta0, beta, d.x[i]);
        double yi = static_cast<double>(d.y[i]);
        out.loss += log1pexp(z) - yi * z;
        double r = sigmoid(z) - yi;
        out.dbeta0 += r;
        for (std::size_t f = 0; f < dim; ++f) {
            out.dbeta[f] += r * d.x[i][f];
        }
    }
    double inv_n = 1.0 / static_cast<double>(n);
    out.loss *= inv_n;
    out.dbeta0 *= inv_n;
    for (std::size_t f = 0; f < dim; ++f) out.dbeta[f] *= inv_n;

    double lambda = reg_lambda(cfg, n);
    if (lambda > 0.0 && cfg.penalty == Penalty::L2) {
        double ss = 0.0;
        for (std::size_t f = 0; f < dim; ++f) {
            ss += beta[f] * beta[f];
            out.dbeta[f] += lambda * beta[f];
        }
        out.loss += 0.5 * lambda * ss;
    } else if (lambda > 0.0 && cfg.penalty == Penalty::L1) {
        double l1 = 0.0;
        for (std::size_t f = 0; f < dim; ++f) {
            l1 += std::abs(beta[f]);
            if (beta[f] > 0.0) {
                out.dbeta[f] += lambda;
            } else if (beta[f] < 0.0) {
                out.dbeta[f] -= lambda;
            }
            // subgradient 0 at the kink
        }
        out.loss += lambda * l1;
    }
    return out;
}

LogRegModel fit_logreg(const Dataset& d, const LogRegConfig& cfg) {
    validate(cfg);
    auto counts = d.class_counts();
    if (counts[0] == 0 || counts[1] == 0) {
        throw DataError("fit_logreg requires both classes present");
    }
    BatchResult r;
    switch (cfg.solver) {
        case LrSolver::Lbfgs: r = solve_lbfgs(d, cfg); break;
        case LrSolver::NewtonCg: r = solve_newton_cg(d, cfg); break;
        case LrSolver::NewtonCholesky:
            r = solve_newton_cholesky(d, cfg);
            break;
        case LrSolver::Sag: r = solve_stochastic(d, cfg, false); break;
        case LrSolver::Saga: r = solve_stochastic(d, cfg, true); break;
    }
    LogRegModel model;
    model.beta0 = r.theta.b0;
    model.beta = std::move(r.theta.w);
    model.config = cfg;
    model.converged = r.converged;
    model.iters_used = r.iters;
    return model;
}

int predict(const LogRegModel& m, std::span<const double> x) {
    return predict_proba(m, x) >= 0.5 ? 1 : 0;
}

std::string logreg_to_json(const LogRegModel& m) {
    nlohmann::ordered_json j;
    j["beta0"] = m.beta0;
    j["beta"] = m.beta;
    j["config"] = {{"c", m.config.c},
                   {"penalty", penalty_name(m.config.penalty)},
                   {"solver", solver_name(m.config.solver)},
                   {"max_iters", m.config.max_iters},
                   {"tol", m.config.tol},
                   {"fit_seed", m.config.fit_seed}};
    j["converged"] = m.converged;
    j["iters_used"] = m.iters_used;
    return j.dump(2) + "\n";
}

LogRegModel logreg_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    LogRegModel m;
    m.beta0 = j.at("beta0").get<double>();
    m.beta = j.at("beta").get<std::vector<double>>();
    const auto& c = j.at("config");
    m.config.c = c.at("c").get<double>();
    m.config.penalty = penalty_from_name(c.at("penalty"));
    m.config.solver = solver_from_name(c.at("solver"));
    m.config.max_iters = c.at("max_iters").get<int>();
    m.config.tol = c.at("tol").get<double>();
    m.config.fit_seed = c.at("fit_seed").get<std::uint64_t>();
    m.converged = j.at("converged").get<bool>();
    m.iters_used = j.at("iters_used").get<int>();
    return m;
}

}  // namespace bcbench
