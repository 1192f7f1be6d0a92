#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappad/hopf.hpp"
#include "kappad/kappa.hpp"
#include "kappad/suites.hpp"

using namespace kappad;

namespace {

struct ConfigGuard {
    ConfigGuard() { RunConfig{}.apply(); }
    ~ConfigGuard() { RunConfig{}.apply(); }
};

Scalar ih() { return Scalar::i() * Scalar::hbar(1); }

}  // namespace

TEST_CASE("base pairings of the translation sector") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    auto w = [](GenId g) { return word_of({g}); };
    CHECK(ps.engine->pair(w(gen_x(1)), w(gen_P(1))) == ih());
    CHECK(ps.engine->pair(w(gen_x(0)), w(gen_P(0))) == -ih());
    CHECK(ps.engine->pair(w(gen_x(1)), w(gen_P(2))) == Scalar::zero());
    CHECK(ps.engine->pair(Word{}, Word{}) == Scalar::one());
    CHECK(ps.engine->pair(w(gen_x(1)), Word{}) == Scalar::zero());
}

TEST_CASE("deformed pairing of a quadratic word") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    // the coproduct tail of P1 contributes one power of lam
    Word b = word_of({gen_x(1), gen_x(0)});
    Scalar got = ps.engine->pair(b, word_of({gen_P(1)}));
    CHECK(got == -(Scalar::hbar(1) * Scalar::lam(1)));
    CHECK(ps.engine->pair(b, word_of({gen_P(0)})).is_zero());
}

TEST_CASE("the two recursive routes agree") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    std::vector<Word> bs = {word_of({gen_x(0), gen_x(1)}),
                            word_of({gen_x(0), gen_x(0), gen_x(2)}),
                            word_of({gen_x(1), gen_x(2), gen_x(3)})};
    std::vector<Word> as = {word_of({gen_P(1)}), word_of({gen_P(1), gen_P(0)}),
                            word_of({gen_P(1), gen_P(2), gen_P(3)})};
    for (const Word& b : bs)
        for (const Word& a : as)
            CHECK(ps.engine->pair(b, a, PairingEngine::Route::SplitAlgebraFirst) ==
                  ps.engine->pair(b, a, PairingEngine::Route::SplitGroupFirst));
}

TEST_CASE("coproducts are coassociative counital algebra maps") {
    ConfigGuard guard;
    FullDouble fd = build_full_double();
    for (const auto* h : {fd.algebra.get(), fd.group.get()}) {
        for (const auto& r : check_coassociativity(*h, 2))
            CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
        for (const auto& r : check_counit_axiom(*h))
            CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
        for (const auto& r : check_bialgebra_compat(*h))
            CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
    }
}

TEST_CASE("pairing is bilinear over random samples") {
    ConfigGuard guard;
    FullDouble fd = build_full_double();
    auto reports = check_pairing_bilinearity(*fd.engine, 10, 777);
    CHECK(!reports.empty());
    for (const auto& r : reports)
        CHECK_MESSAGE(r.status == CheckReport::Status::Pass, r.id, ": ", r.residual_text);
}

TEST_CASE("cross product lands in algebra-left form") {
    ConfigGuard guard;
    PhaseSpace ps = build_phase_space();
    // x1 o P1 = P1 x1 + <x1, P1> = P1 x1 + i hbar, written algebra-left
    NCPoly c = cross_commutator(gen_x(1), gen_P(1), *ps.engine);
    CHECK(c == NCPoly::scalar(ih()));
    NCPoly c0 = cross_commutator(gen_x(0), gen_P(1), *ps.engine);
    CHECK(c0 == NCPoly::gen(gen_P(1), Scalar::i() * Scalar::lam(1)));
}
