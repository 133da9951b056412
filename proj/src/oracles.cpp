#include "cmlocus/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace cmlocus::oracles {

namespace {

double cube(double x) { return x * x * x; }

}  // namespace

double bisect(const BisectionProblem& p) {
    double lo = p.lo, hi = p.hi;
    double flo = p.residual(lo);
    double fhi = p.residual(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0))
        throw BracketError("bisect: no sign change over the bracket");
    // Midpoint bisection; the interval halves each pass, so ~60 passes reach
    // the resolution of double near any bracket of width < 2*pi.
    for (int pass = 0; pass < 200 && hi - lo > p.tol; ++pass) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval no longer splits
        double fmid = p.residual(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

double potential_direct(const std::vector<double>& thetas,
                        const std::vector<int>& charges) {
    const std::size_t n = thetas.size();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double s = std::sin(0.5 * (thetas[j] - thetas[i]));
            if (std::fabs(s) < kCollisionTol)
                throw CollisionError("potential_direct: coincident particles");
            total += 2.0 * charges[i] * charges[j] / (s * s);
        }
    }
    return total;
}

std::vector<double> fd_gradient(const ChargedEnsemble& e, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("fd_gradient: h must be positive");
    std::vector<double> th = e.thetas();
    std::vector<double> g(th.size());
    for (std::size_t i = 0; i < th.size(); ++i) {
        double t = th[i];
        th[i] = t + h;
        double fp = potential_direct(th, e.charges());
        th[i] = t - h;
        double fm = potential_direct(th, e.charges());
        th[i] = t;
        g[i] = (fp - fm) / (2.0 * h);
    }
    return g;
}

double solve_a2_family(int m) {
    if (m < 1) throw std::invalid_argument("solve_a2_family: m must be >= 1");
    const double q1 = static_cast<double>(m) * (m + 1);
    // theta = (0, phi, 2*pi - phi), charges (q1, 2, 2).  Force balance at the
    // particle at phi: the heavy particle at 0 acts through the half-gap
    // phi/2, the mirror particle through the half-gap pi - phi, which
    // simplifies to a term in the full angle phi.
    BisectionProblem p;
    p.residual = [q1](double phi) {
        return q1 * std::cos(0.5 * phi) / cube(std::sin(0.5 * phi)) +
               2.0 * std::cos(phi) / cube(std::sin(phi));
    };
    p.lo = 0.5 * std::numbers::pi;
    p.hi = std::numbers::pi - 1e-9;
    return bisect(p);
}

std::pair<double, double> solve_c2_family(int m, int l) {
    if (m < 1 || l < 1)
        throw std::invalid_argument("solve_c2_family: m, l must be >= 1");
    const double qm = static_cast<double>(m) * (m + 1);
    const double ql = static_cast<double>(l) * (l + 1);
    // theta = (0, phi, pi, 2*pi - phi), charges (qm, 2, ql, 2).  One unknown:
    // balance at the particle at phi.  Terms: qm through half-gap phi/2,
    // ql through half-gap (pi - phi)/2 = pi/2 - phi/2, the mirror particle
    // through pi - phi.
    BisectionProblem p;
    p.residual = [qm, ql](double phi) {
        double c = std::cos(0.5 * phi);
        double s = std::sin(0.5 * phi);
        return -qm * c / cube(s) + ql * s / cube(c) -
               2.0 * std::cos(phi) / cube(std::sin(phi));
    };
    p.lo = 1e-6;
    p.hi = std::numbers::pi - 1e-6;
    return {bisect(p), std::numbers::pi};
}

double uniform_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

namespace {

// Sorted angles in [0, 2*pi) with every cyclic gap above min_gap; first
// angle forced to zero when pin_first is set.
std::vector<double> random_ordered_angles(std::mt19937_64& rng, std::size_t n,
                                          double min_gap, bool pin_first) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        std::vector<double> th(n);
        for (double& t : th) t = kTwoPi * uniform_unit(rng);
        std::sort(th.begin(), th.end());
        if (pin_first) th[0] = 0.0;
        bool ok = kTwoPi - th[n - 1] + th[0] > min_gap;
        for (std::size_t i = 1; i < n && ok; ++i) ok = th[i] - th[i - 1] > min_gap;
        if (ok) return th;
    }
    throw std::runtime_error("random_ordered_angles: resampling failed");
}

}  // namespace

double multistart_uniqueness(const MultiplicityList& m, std::size_t trials,
                             std::uint64_t seed) {
    if (trials < 2)
        throw std::invalid_argument("multistart_uniqueness: need trials >= 2");
    std::mt19937_64 rng(seed);
    std::vector<std::vector<double>> solutions;
    solutions.reserve(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        SolverConfig cfg;
        cfg.initial_thetas = random_ordered_angles(rng, m.size(), 1e-3, true);
        SolveResult res = solve_equilibrium(m, cfg);
        solutions.push_back(canonical_rotation(res.arrangement).ensemble().thetas());
    }
    double dev = 0.0;
    for (std::size_t a = 0; a < trials; ++a)
        for (std::size_t b = a + 1; b < trials; ++b)
            for (std::size_t i = 0; i < m.size(); ++i)
                dev = std::max(dev, std::fabs(solutions[a][i] - solutions[b][i]));
    return dev;
}

ChargedEnsemble random_ensemble(std::mt19937_64& rng, const RandomEnsembleSpec& spec) {
    std::size_t n =
        spec.n_min + static_cast<std::size_t>(rng() % (spec.n_max - spec.n_min + 1));
    std::vector<int> mult(n);
    for (int& v : mult) v = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(spec.m_max));
    std::vector<double> th = random_ordered_angles(rng, n, spec.min_gap, false);
    std::vector<int> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = mult[i] * (mult[i] + 1);
    return ChargedEnsemble(std::move(th), std::move(q));
}

}  // namespace cmlocus::oracles
