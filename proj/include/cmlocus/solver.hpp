#pragma once

#include <Eigen/Dense>

#include "cmlocus/arrangement.hpp"

// Gauge-fixed minimization of the charged trigonometric Calogero-Moser
// potential on the ordered chamber 0 = theta_0 < theta_1 < ... < theta_{n-1} < 2*pi.
// Freezing theta_0 removes the rotation null direction; on the reduced
// coordinates mu is strictly convex and blows up at the chamber boundary, so
// damped Newton with an ordering guard converges to the unique minimizer.

namespace cmlocus {

struct NonConvergenceError : std::runtime_error {
    NonConvergenceError(const std::string& msg, double grad_norm, std::size_t iters)
        : std::runtime_error(msg), gradient_inf_norm(grad_norm), iterations(iters) {}
    double gradient_inf_norm;
    std::size_t iterations;
};

struct SolverConfig {
    // Stopping rule: inf-norm of the reduced gradient divided by
    // max_{i != j} q_i q_j, so the tolerance is scale-free in the charges.
    double grad_tol = 1e-12;
    std::size_t max_iters = 200;
    // Empty: equally spaced start.  Otherwise a cyclically ordered angle
    // list; it is rotated so the first angle is 0 before optimizing.
    std::vector<double> initial_thetas;
    double backtrack_shrink = 0.5;
    double armijo_c = 1e-4;
    // Ordering guard: trial steps whose smallest cyclic gap falls below this
    // are halved until feasible.
    double min_gap = 1e-10;
};

struct SolveResult {
    Arrangement arrangement;
    double gradient_inf_norm = 0.0;  // charge-scaled, as in the stopping rule
    std::size_t iterations = 0;
    double potential_value = 0.0;
    std::string gauge;  // rotation normalization applied
    // mu at the start and after each accepted step; strictly decreasing while
    // the Armijo test is resolvable, within rounding of mu at the end.
    std::vector<double> potential_trace;
};

/// Minimize mu for charges q_i = m_i (m_i + 1); returns the unique
/// cyclically ordered equilibrium with theta_0 = 0.
SolveResult solve_equilibrium(const MultiplicityList& m, const SolverConfig& cfg = {});

/// Partial derivatives of mu in the non-gauge coordinates:
/// (2 * cm_force(e, i)) for i = 1..n-1.
std::vector<double> reduced_gradient(const ChargedEnsemble& e);

/// Second derivatives of mu in the non-gauge coordinates; symmetric, and
/// positive definite at interior points of the gauge-fixed chamber.
Eigen::MatrixXd reduced_hessian(const ChargedEnsemble& e);

/// Rotate all angles by -theta_0 so the first angle is 0; pairwise
/// differences are preserved.
Arrangement canonical_rotation(const Arrangement& a);

}  // namespace cmlocus
