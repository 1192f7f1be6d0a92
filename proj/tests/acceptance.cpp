// End-to-end acceptance run: ten independent criteria, one verdict line each.
// Exit status is nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kappad/kappa.hpp"
#include "kappad/suites.hpp"
#include "kappad/xpoly.hpp"

using namespace kappad;

namespace {

int failures = 0;

void run(int number, const std::string& what, double budget_s,
         const std::function<bool(std::string&)>& body) {
    RunConfig{}.apply();
    std::string detail;
    bool ok = false;
    auto t0 = std::chrono::steady_clock::now();
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && budget_s > 0 && secs > budget_s) {
        ok = false;
        detail = "over time budget";
    }
    if (!ok) ++failures;
    std::printf("criterion %2d: %s - %s (%.2fs%s)%s%s\n", number, ok ? "pass" : "FAIL",
                what.c_str(), secs,
                budget_s > 0 ? (" / budget " + std::to_string(int(budget_s)) + "s").c_str() : "",
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

bool no_failures(const std::vector<CheckReport>& rs, std::string& detail) {
    for (const auto& r : rs)
        if (r.status == CheckReport::Status::Fail) {
            detail = r.id + ": " + r.residual_text;
            return false;
        }
    return true;
}

bool all_pass(const std::vector<CheckReport>& rs, std::string& detail) {
    for (const auto& r : rs)
        if (r.status != CheckReport::Status::Pass) {
            detail = r.id + ": " + r.residual_text;
            return false;
        }
    return true;
}

int count_errata(const std::vector<CheckReport>& rs) {
    int n = 0;
    for (const auto& r : rs)
        if (r.status == CheckReport::Status::DocumentedErratum) ++n;
    return n;
}

Scalar il() { return Scalar::i() * Scalar::lam(1); }

}  // namespace

int main() {
    // 1: the translation-sector relations fall out of the duality pairing,
    // including the deformed coordinate bracket, and satisfy Jacobi exactly.
    run(1, "phase space derived from the pairing, Jacobi exact", 10, [](std::string& d) {
        PhaseSpace ps = build_phase_space();
        if (!no_failures(ps.reports, d)) return false;
        for (int k = 1; k <= 3; ++k) {
            NCPoly got =
                commutator(NCPoly::gen(gen_x(0)), NCPoly::gen(gen_x(k)), ps.combined);
            if (got != NCPoly::gen(gen_x(k), -il())) {
                d = "coordinate bracket [x0, x" + std::to_string(k) + "]";
                return false;
            }
        }
        return all_pass(jacobi_suite(ps.all_generators, ps.combined, "phase"), d);
    });

    // 2: the full double, derived relation by relation against the catalog;
    // the only deviations are the recorded boost-row orientation entries.
    run(2, "full double cross relations vs catalog", 60, [](std::string& d) {
        FullDouble fd = build_full_double();
        if (!no_failures(fd.reports, d)) return false;
        int errata = count_errata(fd.reports);
        if (errata != 36) {
            d = "expected 36 recorded boost-row entries, saw " + std::to_string(errata);
            return false;
        }
        return true;
    });

    // 3: engine pairings over the full index grid against both closed forms.
    run(3, "pairing grid vs closed forms, indices 0..3", 60, [](std::string& d) {
        PhaseSpace ps = build_phase_space();
        return all_pass(verify_closed_form_pairings(ps, 3, 3, 3, 3), d);
    });

    // 4: the functional (differentiation) pairing against the recursive
    // engine on seeded random word pairs.
    run(4, "differentiation pairing vs engine, 20 random pairs", 0, [](std::string& d) {
        PhaseSpace ps = build_phase_space();
        std::mt19937 rng(20240915);
        std::uniform_int_distribution<int> len(0, 4), mu(0, 3);
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<int> xs(len(rng)), pm(len(rng));
            for (int& v : xs) v = mu(rng);
            for (int& v : pm) v = mu(rng);
            std::sort(xs.begin(), xs.end());
            std::sort(pm.begin(), pm.end(), [](int a, int b) {
                return gen_weight(gen_P(a)) < gen_weight(gen_P(b));
            });
            Word psi, f;
            for (int v : xs) psi.push_back(static_cast<char>(gen_x(v)));
            for (int v : pm) f.push_back(static_cast<char>(gen_P(v)));
            Scalar functional =
                pair_by_differentiation(NCPoly::word(psi), NCPoly::word(f));
            Scalar engine = ps.engine->pair(psi, f);
            if (functional != engine) {
                d = "trial " + std::to_string(trial) + ": functional " + functional.str() +
                    " vs engine " + engine.str();
                return false;
            }
        }
        return true;
    });

    // 5: Hopf axioms and the product-coproduct compatibility on both sides.
    run(5, "Hopf axioms exact at the working order", 0, [](std::string& d) {
        FullDouble fd = build_full_double();
        for (const auto* h : {fd.algebra.get(), fd.group.get()}) {
            if (!all_pass(check_coassociativity(*h, 2), d)) return false;
            if (!all_pass(check_counit_axiom(*h), d)) return false;
            if (!all_pass(check_bialgebra_compat(*h), d)) return false;
        }
        return true;
    });

    // 6: the nonlinear momentum basis restores the classical brackets and is
    // classical at leading order.
    run(6, "classical basis change", 0, [](std::string& d) {
        for (int m = 0; m < 4; ++m)
            if (momentum_tilde(m).lambda_truncate(0) != NCPoly::gen(gen_P(m))) {
                d = "leading order of tilde P" + std::to_string(m);
                return false;
            }
        return all_pass(classical_basis_change(), d);
    });

    // 7: the oscillator realization reproduces every phase bracket and its
    // conjugation series terminates after one commutator; the recorded sign
    // deviations stay documented, not failing.
    run(7, "oscillator realization and terminating conjugation", 0, [](std::string& d) {
        auto rs = weyl_realization_check();
        if (!no_failures(rs, d)) return false;
        bool terminated = false;
        for (const auto& r : rs)
            if (r.id.find("terminates") != std::string::npos &&
                r.status == CheckReport::Status::Pass)
                terminated = true;
        if (!terminated) d = "termination check missing";
        return terminated;
    });

    // 8: the dual coordinate basis at degree 3 is classical at leading order
    // and satisfies the finite-difference grids with only O(lam) corrections.
    run(8, "dual coordinate basis, degree 3", 0, [](std::string& d) {
        PhaseSpace ps = build_phase_space();
        DualBasisSolution sol = solve_dual_basis(3, ps);
        if (sol.F0.lambda_truncate(0) != NCPoly::gen(gen_x(0))) {
            d = "leading order of F0";
            return false;
        }
        for (int l = 1; l <= 3; ++l)
            if (sol.Fl[l - 1].lambda_truncate(0) != NCPoly::gen(gen_x(l))) {
                d = "leading order of F" + std::to_string(l);
                return false;
            }
        return no_failures(verify_dual_basis(sol, 3, 3), d);
    });

    // 9: numeric uncertainty relations at n_levels = 40, 100 seeded states,
    // three couplings, plus the large-coupling limit collapsing the bounds.
    run(9, "uncertainty relations, 100 states x 3 couplings", 120, [](std::string& d) {
        SuiteResult res = run_suite("uncertainty", RunConfig{});
        if (res.exit_code() != 0) {
            no_failures(res.checks, d);
            return false;
        }
        return true;
    });

    // 10: the literal sign profile reproduces the recorded phase space
    // inconsistency as a documented deviation with its own exit status.
    run(10, "literal profile reports the known inconsistency", 0, [](std::string& d) {
        RunConfig cfg;
        cfg.profile = "lowered-literal";
        SuiteResult res = run_suite("jacobi", cfg);
        if (res.exit_code() != 3) {
            d = "exit code " + std::to_string(res.exit_code());
            return false;
        }
        for (const auto& r : res.checks)
            if (r.status == CheckReport::Status::DocumentedErratum &&
                r.id.find("x0") != std::string::npos)
                return true;
        d = "no recorded deviation naming the time coordinate";
        return false;
    });

    if (failures == 0) {
        std::printf("acceptance: all 10 criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", failures);
    return 1;
}
