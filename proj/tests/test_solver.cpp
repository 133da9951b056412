#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cmlocus/oracles.hpp"
#include "cmlocus/solver.hpp"

using namespace cmlocus;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("two particles sit antipodally") {
    SolveResult r = solve_equilibrium(MultiplicityList({1, 1}));
    CHECK(r.arrangement.ensemble().thetas()[0] == 0.0);
    CHECK(std::fabs(r.arrangement.ensemble().thetas()[1] - kPi) < 1e-12);
    CHECK(r.gradient_inf_norm <= 1e-12);
    CHECK(r.gauge == "theta[0] = 0");
}

TEST_CASE("equal multiplicities give equally spaced angles") {
    for (std::size_t n : {3u, 5u, 7u}) {
        MultiplicityList m(std::vector<int>(n, 1));
        SolveResult r = solve_equilibrium(m);
        for (std::size_t i = 0; i < n; ++i)
            CHECK(std::fabs(r.arrangement.ensemble().thetas()[i] -
                            kTwoPi * static_cast<double>(i) / static_cast<double>(n)) <
                  1e-11);
        CHECK(r.iterations <= 1);  // the initializer is already the answer
    }
}

TEST_CASE("A2 equilibria match the bisection oracle") {
    for (int m = 1; m <= 5; ++m) {
        double phi = oracles::solve_a2_family(m);
        SolveResult r = solve_equilibrium(MultiplicityList({m, 1, 1}));
        const std::vector<double>& th = r.arrangement.ensemble().thetas();
        CHECK(std::fabs(th[1] - phi) < 1e-10);
        CHECK(std::fabs(th[2] - (kTwoPi - phi)) < 1e-10);
    }
}

TEST_CASE("reduced gradient: zeros at the symmetric point, FD elsewhere") {
    ChargedEnsemble sym({0.0, 2.0 * kPi / 3.0, 4.0 * kPi / 3.0}, {2, 2, 2});
    for (double g : reduced_gradient(sym)) CHECK(std::fabs(g) < 1e-12);

    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 15; ++rep) {
        ChargedEnsemble e = oracles::random_ensemble(rng);
        std::vector<double> fd = oracles::fd_gradient(e, 1e-6);
        std::vector<double> g = reduced_gradient(e);
        REQUIRE(g.size() == e.size() - 1);
        double scale = 1.0;
        for (double v : fd) scale = std::max(scale, std::fabs(v));
        for (std::size_t i = 1; i < e.size(); ++i)
            CHECK(std::fabs(g[i - 1] - fd[i]) / scale < 1e-6);
    }
}

TEST_CASE("full gradient sums to zero (rotation invariance)") {
    std::mt19937_64 rng(13);
    for (int rep = 0; rep < 15; ++rep) {
        ChargedEnsemble e = oracles::random_ensemble(rng);
        double sum = 0.0;
        for (std::size_t i = 0; i < e.size(); ++i) sum += 2.0 * cm_force(e, i);
        CHECK(std::fabs(sum) < 1e-9);
    }
}

TEST_CASE("reduced Hessian: symmetric, matches FD, positive definite") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 10; ++rep) {
        ChargedEnsemble e = oracles::random_ensemble(rng);
        Eigen::MatrixXd h = reduced_hessian(e);
        CHECK((h - Eigen::MatrixXd(h.transpose())).cwiseAbs().maxCoeff() == 0.0);

        // central differences of the reduced gradient, column by column
        const double step = 1e-6;
        Eigen::MatrixXd fd(h.rows(), h.cols());
        std::vector<double> th = e.thetas();
        for (std::size_t j = 1; j < e.size(); ++j) {
            double t = th[j];
            th[j] = t + step;
            std::vector<double> gp = reduced_gradient(ChargedEnsemble(th, e.charges()));
            th[j] = t - step;
            std::vector<double> gm = reduced_gradient(ChargedEnsemble(th, e.charges()));
            th[j] = t;
            for (std::size_t i = 1; i < e.size(); ++i)
                fd(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
                    (gp[i - 1] - gm[i - 1]) / (2.0 * step);
        }
        double scale = h.cwiseAbs().maxCoeff();
        CHECK((h - fd).cwiseAbs().maxCoeff() / scale < 1e-5);
    }

    SolveResult r = solve_equilibrium(MultiplicityList({2, 1, 1, 1}));
    Eigen::MatrixXd h = reduced_hessian(r.arrangement.ensemble());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    CHECK(es.eigenvalues().minCoeff() > 0.0);
}

TEST_CASE("canonical rotation") {
    Arrangement a(MultiplicityList({1, 1, 1}), {0.5, 1.5, 3.0});
    Arrangement c = canonical_rotation(a);
    CHECK(c.ensemble().thetas() == std::vector<double>{0.0, 1.0, 2.5});

    // already canonical: identical output
    Arrangement c2 = canonical_rotation(c);
    CHECK(c2.ensemble().thetas() == c.ensemble().thetas());

    // differences preserved across random rotations
    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 10; ++rep) {
        ChargedEnsemble e = oracles::random_ensemble(rng);
        std::vector<int> mult(e.size(), 1);
        Arrangement b(MultiplicityList(mult),
                      ChargedEnsemble(e.thetas(), std::vector<int>(e.size(), 2)));
        Arrangement bc = canonical_rotation(b);
        for (std::size_t i = 0; i < e.size(); ++i) {
            for (std::size_t j = i + 1; j < e.size(); ++j) {
                double d0 = mod_two_pi(b.ensemble().thetas()[j] -
                                       b.ensemble().thetas()[i]);
                double d1 = mod_two_pi(bc.ensemble().thetas()[j] -
                                       bc.ensemble().thetas()[i]);
                CHECK(std::fabs(d1 - d0) < 4e-15);
            }
        }
    }
}

TEST_CASE("monotone descent and strict ordering of the result") {
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 5; ++rep) {
        SolverConfig cfg;
        std::vector<double> th(6);
        for (double& t : th) t = kTwoPi * oracles::uniform_unit(rng);
        std::sort(th.begin(), th.end());
        th[0] = 0.0;
        bool feasible = true;
        for (std::size_t i = 1; i < th.size(); ++i)
            feasible = feasible && th[i] - th[i - 1] > 1e-3;
        feasible = feasible && kTwoPi - th.back() > 1e-3;
        if (!feasible) continue;
        cfg.initial_thetas = th;
        SolveResult r = solve_equilibrium(MultiplicityList({3, 1, 2, 1, 2, 1}), cfg);
        for (std::size_t k = 1; k < r.potential_trace.size(); ++k) {
            double prev = r.potential_trace[k - 1];
            // non-increasing, up to terminal rounding of mu itself
            CHECK(r.potential_trace[k] <=
                  prev + 16.0 * std::numeric_limits<double>::epsilon() * prev);
        }
        const std::vector<double>& sol = r.arrangement.ensemble().thetas();
        CHECK(sol[0] == 0.0);
        for (std::size_t i = 1; i < sol.size(); ++i) CHECK(sol[i] > sol[i - 1]);
        CHECK(sol.back() < kTwoPi);
    }
}

TEST_CASE("convergence across a spread of multiplicity lists") {
    std::mt19937_64 rng(53);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t n = 2 + rng() % 11;  // up to 12
        std::vector<int> m(n);
        for (int& v : m) v = 1 + static_cast<int>(rng() % 6);
        SolveResult r = solve_equilibrium(MultiplicityList(m));
        CHECK(r.iterations <= 200);
        CHECK(r.gradient_inf_norm <= 1e-12);
    }
    // lopsided charge spreads
    for (const std::vector<int>& m :
         {std::vector<int>{6, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
          std::vector<int>{6, 5, 4, 3, 2, 1}, std::vector<int>{1, 6, 1, 6, 1, 6},
          std::vector<int>{6, 6, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1}}) {
        SolveResult r = solve_equilibrium(MultiplicityList(m));
        CHECK(r.gradient_inf_norm <= 1e-12);
    }
}

TEST_CASE("non-convergence reports diagnostics") {
    SolverConfig cfg;
    cfg.max_iters = 1;
    try {
        solve_equilibrium(MultiplicityList({5, 1, 1}), cfg);
        FAIL("expected NonConvergenceError");
    } catch (const NonConvergenceError& e) {
        CHECK(e.iterations == 1);
        CHECK(e.gradient_inf_norm > 1e-12);
    }
}

TEST_CASE("solver config validation") {
    SolverConfig cfg;
    cfg.grad_tol = 0.0;
    CHECK_THROWS_AS(solve_equilibrium(MultiplicityList({1, 1}), cfg),
                    std::invalid_argument);
    SolverConfig bad_init;
    bad_init.initial_thetas = {0.0, 2.0, 1.0};
    CHECK_THROWS_AS(solve_equilibrium(MultiplicityList({1, 1, 1}), bad_init),
                    std::invalid_argument);
    SolverConfig wrong_len;
    wrong_len.initial_thetas = {0.0, 1.0};
    CHECK_THROWS_AS(solve_equilibrium(MultiplicityList({1, 1, 1}), wrong_len),
                    std::invalid_argument);
}

TEST_CASE("uniqueness from random restarts") {
    CHECK(oracles::multistart_uniqueness(MultiplicityList({2, 1, 1, 1}), 6, 77) < 1e-8);
}
