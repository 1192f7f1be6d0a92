#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappad/kappa.hpp"
#include "kappad/suites.hpp"
#include "kappad/xpoly.hpp"

using namespace kappad;

namespace {

struct ConfigGuard {
    ConfigGuard() { RunConfig{}.apply(); }
    ~ConfigGuard() { RunConfig{}.apply(); }
};

Scalar fact(int n) {
    Scalar r = Scalar::one();
    for (int k = 2; k <= n; ++k) r *= Scalar::integer(k);
    return r;
}

Scalar minus_i_pow(int k) {
    Scalar r = Scalar::one();
    for (int j = 0; j < k; ++j) r *= -Scalar::i();
    return r;
}

}  // namespace

TEST_CASE("commutative shadow of ordered words") {
    ConfigGuard guard;
    NCPoly p = NCPoly::word(word_of({gen_x(0), gen_x(0), gen_x(2)}), Scalar::i());
    XPoly f = XPoly::from_ordered(p);
    CHECK(f.to_ordered() == p);
    CHECK(XPoly::var(1) * XPoly::var(2) == XPoly::var(2) * XPoly::var(1));
    CHECK(XPoly::var(0).derivative(0) == XPoly::one());
    CHECK(XPoly::var(0).pow(2).laplacian().is_zero());
}

TEST_CASE("finite difference grid diagonals") {
    ConfigGuard guard;
    XPoly x0 = XPoly::var(0);
    for (int k = 0; k <= 3; ++k)
        CHECK(finite_difference_apply(x0.pow(k), k, 0, 1) == minus_i_pow(k) * fact(k));
    for (int s = 1; s <= 3; ++s) {
        XPoly xs = XPoly::var(s);
        for (int n = 0; n <= 3; ++n)
            CHECK(finite_difference_apply(xs.pow(n), 0, n, s) == fact(n));
    }
    // wrong spatial direction pairs to zero
    CHECK(finite_difference_apply(XPoly::var(1), 0, 1, 2).is_zero());
}

TEST_CASE("time grid off-diagonal picks up a deformed correction") {
    ConfigGuard guard;
    Scalar got = finite_difference_apply(XPoly::var(0).pow(3), 1, 0, 1);
    CHECK(got == Scalar::i() * Scalar::lam(2));
    // the correction is pure O(lam): nothing survives the classical limit
    CHECK(got.min_lambda_order() == 2);
}

TEST_CASE("dual coordinates are exactly the coordinates") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    DualBasisSolution sol = solve_dual_basis(3, ps);
    CHECK(sol.F0 == NCPoly::gen(gen_x(0)));
    for (int l = 1; l <= 3; ++l) CHECK(sol.Fl[l - 1] == NCPoly::gen(gen_x(l)));

    auto reports = verify_dual_basis(sol, 3, 3);
    CHECK(!any_genuine_failure(reports));
    int errata = 0;
    for (const auto& r : reports)
        if (r.status == CheckReport::Status::DocumentedErratum) ++errata;
    CHECK(errata == 64);
}

TEST_CASE("differentiation pairing matches the recursive engine") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    std::vector<NCPoly> psis = {
        NCPoly::gen(gen_x(1)),
        NCPoly::word(word_of({gen_x(0), gen_x(1)})),
        NCPoly::word(word_of({gen_x(0), gen_x(0)}), Scalar::rational(1, 2)),
        NCPoly::word(word_of({gen_x(0), gen_x(1), gen_x(1), gen_x(3)})),
    };
    std::vector<NCPoly> fs = {
        NCPoly::gen(gen_P(1)),
        NCPoly::gen(gen_P(0)),
        NCPoly::word(word_of({gen_P(1), gen_P(0)})),
        NCPoly::word(word_of({gen_P(1), gen_P(1)})) + NCPoly::gen(gen_P(3), Scalar::i()),
    };
    for (const auto& psi : psis)
        for (const auto& f : fs)
            CHECK(pair_by_differentiation(psi, f) == ps.engine->pair(psi, f));
    CHECK(pair_by_differentiation(NCPoly::gen(gen_x(1)), NCPoly::gen(gen_P(1))) ==
          Scalar::i() * Scalar::hbar(1));
}

TEST_CASE("dual basis suite reports corrections, not failures") {
    ConfigGuard guard;
    SuiteResult res = run_suite("dual-basis", RunConfig{});
    CHECK(res.exit_code() == 3);
}
