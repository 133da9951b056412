#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <utility>

#include "cmlocus/arrangement.hpp"
#include "cmlocus/solver.hpp"

// Independent verification machinery.  Everything here is built from
// elementary trigonometry and its own summation loops -- none of the
// gradient / Hessian / locus kernels of the main library are called -- so
// agreement between an oracle and the implementation is evidence, not a
// tautology.  (multistart_uniqueness drives solve_equilibrium on purpose:
// it probes the solver itself.)

namespace cmlocus::oracles {

struct BracketError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Scalar root-finding problem; residual(lo) and residual(hi) must differ
/// in sign.
struct BisectionProblem {
    std::function<double(double)> residual;
    double lo = 0.0;
    double hi = 0.0;
    double tol = 1e-14;  // on the argument
};

/// Plain midpoint bisection; deterministic and reproducible bit-for-bit.
double bisect(const BisectionProblem& p);

/// Charged trigonometric Calogero-Moser potential by direct summation over
/// unordered pairs (counted twice).  Requires distinct angles only.
double potential_direct(const std::vector<double>& thetas,
                        const std::vector<int>& charges);

/// Central finite differences of the potential, step h, all n coordinates.
std::vector<double> fd_gradient(const ChargedEnsemble& e, double h);

/// Equilibrium angle phi* for multiplicities (m, 1, 1) under the symmetric
/// ansatz theta = (0, phi, 2*pi - phi); bisection on the force balance at
/// the second particle.  Uniqueness of the equilibrium plus its reflection
/// symmetry justify searching the symmetric slice only.
double solve_a2_family(int m);

/// Equilibrium (phi*, pi) for multiplicities (m, 1, l, 1) under the ansatz
/// theta = (0, phi, pi, 2*pi - phi); for m = l the answer is pi/2.
std::pair<double, double> solve_c2_family(int m, int l);

/// Run solve_equilibrium from `trials` random cyclically ordered starts
/// (sorted uniform angles, first reset to 0, min gap 1e-3 by resampling);
/// returns the max over trial pairs and coordinates of the angle deviation
/// after canonical rotation.
double multistart_uniqueness(const MultiplicityList& m, std::size_t trials,
                             std::uint64_t seed);

struct RandomEnsembleSpec {
    std::size_t n_min = 2;
    std::size_t n_max = 8;
    int m_max = 4;        // charges q = m (m + 1) with m uniform in 1..m_max
    double min_gap = 0.3; // smallest admissible cyclic gap, in radians
};

/// Random valid ensemble for property tests: uniform particle count, uniform
/// multiplicities, sorted uniform angles resampled until every cyclic gap
/// clears spec.min_gap.
ChargedEnsemble random_ensemble(std::mt19937_64& rng, const RandomEnsembleSpec& spec = {});

/// Uniform double in [0, 1) from the top 53 bits of the generator, identical
/// across platforms (std::uniform_real_distribution is not).
double uniform_unit(std::mt19937_64& rng);

}  // namespace cmlocus::oracles
