#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappad/ncalg.hpp"

using namespace kappad;

namespace {

Scalar ih() { return Scalar::i() * Scalar::hbar(1); }

// one canonical pair: [P1, x1] = -i hbar
RewriteSystem pair_system() {
    RewriteSystem rs;
    rs.add_bracket(gen_P(1), gen_x(1), NCPoly::scalar(-ih()));
    return rs;
}

}  // namespace

TEST_CASE("word ordering predicate follows generator weights") {
    CHECK(is_normal_ordered(word_of({gen_x(0), gen_x(1), gen_P(1)})));
    CHECK(!is_normal_ordered(word_of({gen_P(1), gen_x(1)})));
    CHECK(is_normal_ordered(Word{}));
}

TEST_CASE("normal ordering applies the commutation rule") {
    RewriteSystem rs = pair_system();
    NCPoly p = NCPoly::word(word_of({gen_P(1), gen_x(1)}));
    NCPoly want = NCPoly::word(word_of({gen_x(1), gen_P(1)})) - NCPoly::scalar(ih());
    CHECK(normal_order(p, rs) == want);
    CHECK(normal_order(p, rs).normal_ordered());

    // P1 x1 x1 -> x1 x1 P1 - 2 i hbar x1
    NCPoly q = NCPoly::word(word_of({gen_P(1), gen_x(1), gen_x(1)}));
    NCPoly wantq = NCPoly::word(word_of({gen_x(1), gen_x(1), gen_P(1)})) -
                   NCPoly::gen(gen_x(1), 2 * ih());
    CHECK(normal_order(q, rs) == wantq);
}

TEST_CASE("commutator is computed in normal form") {
    RewriteSystem rs = pair_system();
    NCPoly x = NCPoly::gen(gen_x(1)), p = NCPoly::gen(gen_P(1));
    CHECK(commutator(x, p, rs) == NCPoly::scalar(ih()));
    CHECK(commutator(p, x, rs) == NCPoly::scalar(-ih()));
    CHECK(commutator(x, x, rs).is_zero());
    // [x, x p] = [x, x] p + x [x, p] = i hbar x
    CHECK(commutator(x, x * p, rs) == NCPoly::gen(gen_x(1), ih()));
}

TEST_CASE("missing rules and images are reported, not guessed") {
    RewriteSystem empty;
    NCPoly p = NCPoly::word(word_of({gen_P(1), gen_x(1)}));
    CHECK_THROWS_AS(normal_order(p, empty), MissingRule);

    std::map<GenId, NCPoly> images{{gen_x(1), NCPoly::gen(gen_xh(1))}};
    CHECK_THROWS_AS(substitute(NCPoly::gen(gen_P(1)), images, empty), MissingImage);
    CHECK(substitute(NCPoly::gen(gen_x(1), Scalar::i()), images, empty) ==
          NCPoly::gen(gen_xh(1), Scalar::i()));
}

TEST_CASE("truncated exponentials multiply like a one-parameter group") {
    Scalar c = Scalar::lam(1) * Scalar::rational(1, 2);
    NCPoly e = exp_of(c, gen_P(0));
    NCPoly einv = exp_of(-c, gen_P(0));
    // powers of a single generator concatenate commutatively
    CHECK(e * einv == NCPoly::unit());
    CHECK(exp_of(c, gen_P(0)) * exp_of(c, gen_P(0)) == exp_of(2 * c, gen_P(0)));
    CHECK_THROWS(exp_of(Scalar::one(), gen_P(0)));
}

TEST_CASE("lambda truncation of polynomials") {
    NCPoly p = NCPoly::gen(gen_x(1), Scalar::lam(2)) + NCPoly::gen(gen_x(2), Scalar::lam(4));
    CHECK(p.min_lambda_order() == 2);
    CHECK(p.lambda_truncate(3) == NCPoly::gen(gen_x(1), Scalar::lam(2)));
    CHECK(p.lambda_truncate(1).is_zero());
}

TEST_CASE("tensor legs are normalized independently") {
    RewriteSystem rs = pair_system();
    TensorPoly t = TensorPoly::of(NCPoly::word(word_of({gen_P(1), gen_x(1)})),
                                  NCPoly::gen(gen_x(2)));
    TensorPoly want = TensorPoly::of(NCPoly::word(word_of({gen_x(1), gen_P(1)})) -
                                         NCPoly::scalar(ih()),
                                     NCPoly::gen(gen_x(2)));
    CHECK(normalize_legs(t, rs) == want);
}
