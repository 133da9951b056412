#include "cmlocus/solver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace cmlocus {

namespace {

// d^2/dd^2 [sin^-2(d/2)] = (1 + 2 cos^2(d/2)) / (2 sin^4(d/2)); positive on (0, 2*pi).
double pair_potential_dd(double d) {
    double c = std::cos(0.5 * d);
    double s = std::sin(0.5 * d);
    double s2 = s * s;
    return (1.0 + 2.0 * c * c) / (2.0 * s2 * s2);
}

Eigen::VectorXd reduced_gradient_raw(const std::vector<double>& th,
                                     const std::vector<int>& q) {
    const std::size_t n = th.size();
    Eigen::VectorXd g(static_cast<Eigen::Index>(n - 1));
    for (std::size_t i = 1; i < n; ++i)
        g[static_cast<Eigen::Index>(i - 1)] =
            2.0 * q[i] * detail::locus_term_sum(th, q, i, 1).sum;
    return g;
}

Eigen::MatrixXd reduced_hessian_raw(const std::vector<double>& th,
                                    const std::vector<int>& q) {
    const std::size_t n = th.size();
    Eigen::MatrixXd h =
        Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n - 1),
                              static_cast<Eigen::Index>(n - 1));
    for (std::size_t a = 1; a < n; ++a) {
        double diag = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == a) continue;
            diag += 2.0 * q[a] * q[j] * pair_potential_dd(th[j] - th[a]);
        }
        h(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(a - 1)) = diag;
        for (std::size_t b = a + 1; b < n; ++b) {
            double off = -2.0 * q[a] * q[b] * pair_potential_dd(th[b] - th[a]);
            h(static_cast<Eigen::Index>(a - 1), static_cast<Eigen::Index>(b - 1)) = off;
            h(static_cast<Eigen::Index>(b - 1), static_cast<Eigen::Index>(a - 1)) = off;
        }
    }
    return h;
}

// Strict order 0 < theta_1 < ... < theta_{n-1} < 2*pi with every cyclic gap
// (including the wrap gap back to theta_0 = 0) above min_gap.
bool ordered_interior(const std::vector<double>& th, double min_gap) {
    const std::size_t n = th.size();
    if (!(th[1] > min_gap)) return false;
    for (std::size_t i = 2; i < n; ++i)
        if (!(th[i] - th[i - 1] > min_gap)) return false;
    return kTwoPi - th[n - 1] > min_gap;
}

double max_charge_product(const std::vector<int>& q) {
    // max_{i != j} q_i q_j = product of the two largest charges
    int first = 0, second = 0;
    for (int v : q) {
        if (v >= first) {
            second = first;
            first = v;
        } else if (v > second) {
            second = v;
        }
    }
    return static_cast<double>(first) * static_cast<double>(second);
}

std::vector<double> initial_point(const MultiplicityList& m, const SolverConfig& cfg) {
    const std::size_t n = m.size();
    std::vector<double> th(n);
    if (cfg.initial_thetas.empty()) {
        for (std::size_t i = 0; i < n; ++i)
            th[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        return th;
    }
    if (cfg.initial_thetas.size() != n)
        throw std::invalid_argument("solve_equilibrium: initializer length != n");
    // Rotate so the first angle is 0, then require strict interior order.
    double t0 = cfg.initial_thetas[0];
    th[0] = 0.0;
    for (std::size_t i = 1; i < n; ++i) th[i] = mod_two_pi(cfg.initial_thetas[i] - t0);
    if (!ordered_interior(th, cfg.min_gap))
        throw std::invalid_argument(
            "solve_equilibrium: initializer is not strictly cyclically ordered");
    return th;
}

}  // namespace

std::vector<double> reduced_gradient(const ChargedEnsemble& e) {
    Eigen::VectorXd g = reduced_gradient_raw(e.thetas(), e.charges());
    return std::vector<double>(g.data(), g.data() + g.size());
}

Eigen::MatrixXd reduced_hessian(const ChargedEnsemble& e) {
    return reduced_hessian_raw(e.thetas(), e.charges());
}

Arrangement canonical_rotation(const Arrangement& a) {
    const std::vector<double>& th = a.ensemble().thetas();
    std::vector<double> out(th.size());
    double t0 = th[0];
    out[0] = 0.0;
    for (std::size_t i = 1; i < th.size(); ++i) out[i] = mod_two_pi(th[i] - t0);
    return Arrangement(a.multiplicities(), std::move(out));
}

SolveResult solve_equilibrium(const MultiplicityList& m, const SolverConfig& cfg) {
    if (cfg.grad_tol <= 0.0 || cfg.max_iters < 1)
        throw std::invalid_argument("solve_equilibrium: bad config");
    const std::size_t n = m.size();
    const std::vector<int> q = charges_from_multiplicities(m);
    const double qq = max_charge_product(q);

    std::vector<double> th = initial_point(m, cfg);
    double mu = detail::potential_raw(th, q);
    std::vector<double> trace{mu};

    double scaled_norm = 0.0;
    std::size_t it = 0;
    for (; it <= cfg.max_iters; ++it) {
        Eigen::VectorXd g = reduced_gradient_raw(th, q);
        scaled_norm = g.lpNorm<Eigen::Infinity>() / qq;
        if (scaled_norm <= cfg.grad_tol) {
            SolveResult res{Arrangement(m, std::move(th)), scaled_norm, it, mu,
                            "theta[0] = 0", std::move(trace)};
            return res;
        }
        if (it == cfg.max_iters) break;

        Eigen::MatrixXd h = reduced_hessian_raw(th, q);
        Eigen::LLT<Eigen::MatrixXd> llt(h);
        Eigen::VectorXd step;
        bool have_newton = llt.info() == Eigen::Success;
        if (have_newton) step = llt.solve(-g);
        if (!have_newton || !step.allFinite()) step = -g;
        double slope = g.dot(step);
        if (!(slope < 0.0)) {  // not a descent direction; fall back to steepest
            step = -g;
            slope = -g.squaredNorm();
        }

        // Backtracking with the ordering guard: halve until the trial stays
        // strictly inside the chamber, then until Armijo decrease holds.
        // Once the predicted decrease falls below the double-precision
        // resolution of mu the comparison is rounding noise, so the guarded
        // Newton step is taken as is; mu is convex with a positive definite
        // reduced Hessian there, and the iteration is terminally contractive.
        const double mu_resolution =
            16.0 * std::numeric_limits<double>::epsilon() * std::fabs(mu);
        double alpha = 1.0;
        bool accepted = false;
        std::vector<double> trial(n);
        trial[0] = 0.0;
        for (int bt = 0; bt < 120; ++bt) {
            for (std::size_t i = 1; i < n; ++i)
                trial[i] = th[i] + alpha * step[static_cast<Eigen::Index>(i - 1)];
            if (ordered_interior(trial, cfg.min_gap)) {
                double mu_trial = detail::potential_raw(trial, q);
                double predicted = cfg.armijo_c * alpha * slope;
                bool sufficient = std::fabs(predicted) >= mu_resolution
                                      ? mu_trial <= mu + predicted
                                      : true;
                if (sufficient) {
                    th = trial;
                    mu = mu_trial;
                    trace.push_back(mu);
                    accepted = true;
                    break;
                }
            }
            alpha *= cfg.backtrack_shrink;
        }
        if (!accepted) {
            char msg[128];
            std::snprintf(msg, sizeof(msg),
                          "line search stalled at iteration %zu (scaled grad %.3e)",
                          it, scaled_norm);
            throw NonConvergenceError(msg, scaled_norm, it);
        }
    }
    char msg[128];
    std::snprintf(msg, sizeof(msg),
                  "no convergence in %zu iterations (scaled grad %.3e, tol %.3e)",
                  cfg.max_iters, scaled_norm, cfg.grad_tol);
    throw NonConvergenceError(msg, scaled_norm, cfg.max_iters);
}

}  // namespace cmlocus
