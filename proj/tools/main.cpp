// cmlocus command line tool: solve charged-particle equilibria on the circle,
// verify locus equations of the induced line arrangements, plot them, and run
// the built-in oracle suites.
//
// Exit codes: 0 success/pass, 1 usage or schema error, 2 numerical failure or
// failed verification.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "cmlocus/json_io.hpp"
#include "cmlocus/locus.hpp"
#include "cmlocus/oracles.hpp"
#include "cmlocus/solver.hpp"
#include "cmlocus/svg.hpp"

using namespace cmlocus;
using nlohmann::json;

namespace {

struct CheckRow {
    std::string name;
    bool pass = false;
    double value = 0.0;
    double threshold = 0.0;
};

void print_rows(const std::string& suite, const std::vector<CheckRow>& rows) {
    std::fprintf(stderr, "suite %s\n", suite.c_str());
    for (const CheckRow& r : rows)
        std::fprintf(stderr, "  %-44s %s  (%.3e, threshold %.1e)\n", r.name.c_str(),
                     r.pass ? "PASS" : "FAIL", r.value, r.threshold);
}

json rows_to_json(const std::string& suite, const std::vector<CheckRow>& rows) {
    json checks = json::array();
    bool all = true;
    for (const CheckRow& r : rows) {
        checks.push_back({{"name", r.name},
                          {"pass", r.pass},
                          {"value", r.value},
                          {"threshold", r.threshold}});
        all = all && r.pass;
    }
    return json{{"suite", suite}, {"checks", std::move(checks)}, {"pass", all}};
}

std::vector<CheckRow> check_gradients(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    double max_rel = 0.0, max_sum = 0.0;
    for (int rep = 0; rep < 25; ++rep) {
        ChargedEnsemble e = oracles::random_ensemble(rng);
        std::vector<double> fd = oracles::fd_gradient(e, 1e-6);
        double scale = 1.0, sum = 0.0;
        std::vector<double> g(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            g[i] = 2.0 * cm_force(e, i);
            scale = std::max(scale, std::fabs(g[i]));
            sum += g[i];
        }
        for (std::size_t i = 0; i < e.size(); ++i)
            max_rel = std::max(max_rel, std::fabs(fd[i] - g[i]) / scale);
        max_sum = std::max(max_sum, std::fabs(sum));
    }
    return {{"fd agreement over 25 random ensembles", max_rel < 1e-6, max_rel, 1e-6},
            {"gradient rotation-sum", max_sum < 1e-9, max_sum, 1e-9}};
}

std::vector<CheckRow> check_families() {
    std::vector<CheckRow> rows;
    double a2_dev = 0.0;
    bool monotone = true;
    double prev = 0.0;
    for (int m = 1; m <= 5; ++m) {
        double phi = oracles::solve_a2_family(m);
        monotone = monotone && phi > prev;
        prev = phi;
        SolveResult r = solve_equilibrium(MultiplicityList({m, 1, 1}));
        const std::vector<double>& th = r.arrangement.ensemble().thetas();
        a2_dev = std::max(a2_dev, std::fabs(th[1] - phi));
        a2_dev = std::max(a2_dev, std::fabs(th[2] - (kTwoPi - phi)));
    }
    rows.push_back({"A2 solver vs bisection, m = 1..5", a2_dev < 1e-10, a2_dev, 1e-10});
    rows.push_back({"A2 angle monotone in m", monotone, monotone ? 1.0 : 0.0, 1.0});

    double c2_dev = 0.0;
    for (int m = 1; m <= 4; ++m) {
        for (int l = 1; l <= 4; ++l) {
            auto [phi, psi] = oracles::solve_c2_family(m, l);
            SolveResult r = solve_equilibrium(MultiplicityList({m, 1, l, 1}));
            const std::vector<double>& th = r.arrangement.ensemble().thetas();
            c2_dev = std::max(c2_dev, std::fabs(th[1] - phi));
            c2_dev = std::max(c2_dev, std::fabs(th[2] - psi));
            c2_dev = std::max(c2_dev, std::fabs(th[3] - (kTwoPi - phi)));
        }
    }
    rows.push_back({"C2 solver vs bisection, (m,l) in 1..4^2", c2_dev < 1e-10, c2_dev, 1e-10});
    return rows;
}

std::vector<CheckRow> check_uniqueness(std::uint64_t seed) {
    const std::vector<std::vector<int>> lists = {
        {1, 1, 1}, {2, 1, 1, 1}, {3, 1, 2, 1}, {2, 2, 1, 1, 1, 1}};
    std::vector<CheckRow> rows;
    std::uint64_t s = seed;
    for (const std::vector<int>& m : lists) {
        double dev = oracles::multistart_uniqueness(MultiplicityList(m), 20, s++);
        std::string name = "20-start agreement for (";
        for (std::size_t i = 0; i < m.size(); ++i)
            name += std::to_string(m[i]) + (i + 1 < m.size() ? "," : ")");
        rows.push_back({name, dev < 1e-8, dev, 1e-8});
    }
    return rows;
}

int run_check(const std::string& suite, std::uint64_t seed) {
    std::vector<CheckRow> rows;
    if (suite == "gradients" || suite == "all") {
        auto r = check_gradients(seed);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (suite == "families" || suite == "all") {
        auto r = check_families();
        rows.insert(rows.end(), r.begin(), r.end());
    }
    if (suite == "uniqueness" || suite == "all") {
        auto r = check_uniqueness(seed);
        rows.insert(rows.end(), r.begin(), r.end());
    }
    print_rows(suite, rows);
    json j = rows_to_json(suite, rows);
    std::cout << j.dump(2) << "\n";
    return j["pass"].get<bool>() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cmlocus: equilibria of charged particles on the circle and locus "
        "verification for the induced central line arrangements"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand(
        "solve", "compute the equilibrium arrangement for a multiplicity list");
    std::vector<int> solve_m;
    bool solve_verify = false;
    double grad_tol = 1e-12, tol_first = 1e-9, tol_locus = 1e-8;
    std::size_t max_iters = 200;
    std::string solve_out;
    solve->add_option("multiplicities", solve_m, "cyclic multiplicity list (>= 2 entries)")
        ->required()
        ->expected(-2);
    solve->add_flag("--verify", solve_verify, "append a locus report to the output");
    solve->add_option("--grad-tol", grad_tol, "scaled gradient tolerance")
        ->default_val(1e-12);
    solve->add_option("--max-iters", max_iters, "iteration cap")->default_val(200);
    solve->add_option("--tol-first", tol_first, "first-locus relative tolerance")
        ->default_val(1e-9);
    solve->add_option("--tol-locus", tol_locus, "higher-order relative tolerance")
        ->default_val(1e-8);
    solve->add_option("-o,--output", solve_out, "also write the JSON to a file");

    // verify
    auto* verify = app.add_subcommand(
        "verify", "check the locus equations of an arrangement file");
    std::string verify_path;
    double vtol_first = 1e-9, vtol_locus = 1e-8;
    verify->add_option("file", verify_path, "arrangement JSON file")->required();
    verify->add_option("--tol-first", vtol_first, "first-locus relative tolerance")
        ->default_val(1e-9);
    verify->add_option("--tol-locus", vtol_locus, "higher-order relative tolerance")
        ->default_val(1e-8);

    // coarse
    auto* coarse = app.add_subcommand(
        "coarse", "test a multiplicity list for coarse symmetry");
    std::vector<int> coarse_m;
    coarse->add_option("multiplicities", coarse_m, "cyclic multiplicity list")
        ->required()
        ->expected(-2);

    // plot
    auto* plot = app.add_subcommand("plot", "render an arrangement file as SVG");
    std::string plot_path, plot_out;
    PlotStyle style;
    plot->add_option("file", plot_path, "arrangement JSON file")->required();
    plot->add_option("-o,--output", plot_out, "output SVG path")->required();
    plot->add_option("--size", style.size, "canvas edge in px")->default_val(600.0);
    plot->add_option("--stroke", style.stroke_unit, "stroke width per unit multiplicity")
        ->default_val(2.0);

    // check
    auto* check = app.add_subcommand("check", "run a built-in oracle suite");
    std::string suite;
    std::uint64_t seed = 12345;
    check->add_option("suite", suite, "gradients | families | uniqueness | all")
        ->required()
        ->check(CLI::IsMember({"gradients", "families", "uniqueness", "all"}));
    check->add_option("--seed", seed, "seed for randomized suites")->default_val(12345);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) {
            SolverConfig cfg;
            cfg.grad_tol = grad_tol;
            cfg.max_iters = max_iters;
            SolveResult r = solve_equilibrium(MultiplicityList(solve_m), cfg);
            std::fprintf(stderr, "converged in %zu iterations (scaled gradient %.3e)\n",
                         r.iterations, r.gradient_inf_norm);
            json j = solve_result_to_json(r);
            if (solve_verify) {
                LocusTolerances tols;
                tols.first = tol_first;
                tols.locus = tol_locus;
                j["locus_report"] = locus_report_to_json(analyze_locus(r.arrangement, tols));
            }
            std::cout << j.dump(2) << "\n";
            if (!solve_out.empty()) save_json(j, solve_out);
            return 0;
        }
        if (verify->parsed()) {
            Arrangement a = load_arrangement(verify_path);
            LocusTolerances tols;
            tols.first = vtol_first;
            tols.locus = vtol_locus;
            LocusReport rep = analyze_locus(a, tols);
            std::fprintf(stderr, "first locus: %s, all locus: %s, coarsely Coxeter: %s\n",
                         rep.first_locus_pass ? "pass" : "fail",
                         rep.all_locus_pass ? "pass" : "fail",
                         rep.coarsely_coxeter ? "yes" : "no");
            for (const LineLocusRecord& rec : rep.lines)
                if (rec.collision)
                    std::fprintf(stderr, "line %zu: collision, residuals unavailable\n",
                                 rec.index);
            std::cout << locus_report_to_json(rep).dump(2) << "\n";
            return rep.all_locus_pass ? 0 : 2;
        }
        if (coarse->parsed()) {
            bool sym = is_coarsely_symmetric(MultiplicityList(coarse_m));
            std::cout << json{{"multiplicities", coarse_m}, {"coarsely_symmetric", sym}}.dump(2)
                      << "\n";
            return sym ? 0 : 2;
        }
        if (plot->parsed()) {
            Arrangement a = load_arrangement(plot_path);
            std::string svg = render_svg(a, style);
            std::ofstream out(plot_out, std::ios::binary);
            if (!out) {
                std::fprintf(stderr, "error: cannot write %s\n", plot_out.c_str());
                return 1;
            }
            out << svg;
            std::cout << json{{"output", plot_out}, {"lines", a.size()}}.dump(2) << "\n";
            return 0;
        }
        if (check->parsed()) return run_check(suite, seed);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const NonConvergenceError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 1;
}
