#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kappad/parser.hpp"

using namespace kappad;

TEST_CASE("generators, constants and products") {
    CHECK(parse_expression("x1") == NCPoly::gen(gen_x(1)));
    CHECK(parse_expression("i hbar x0") ==
          NCPoly::gen(gen_x(0), Scalar::i() * Scalar::hbar(1)));
    CHECK(parse_expression("x1 * P0") == parse_expression("x1 P0"));
    CHECK(parse_expression("x1 P0") ==
          NCPoly::word(word_of({gen_x(1), gen_P(0)})));
    CHECK(parse_expression("M[1,2]").terms().size() == 1);
    CHECK(parse_expression("L[0,3]") == NCPoly::gen(gen_L(0, 3)));
}

TEST_CASE("rationals, powers and signs") {
    CHECK(parse_expression("3/4 lam^2 x2") ==
          NCPoly::gen(gen_x(2), Scalar::rational(3, 4) * Scalar::lam(2)));
    CHECK(parse_expression("x1^3") ==
          NCPoly::word(word_of({gen_x(1), gen_x(1), gen_x(1)})));
    CHECK(parse_expression("-x1 + x1").is_zero());
    CHECK(parse_expression("2 x1 - x1") == NCPoly::gen(gen_x(1)));
}

TEST_CASE("commutator sugar expands freely") {
    NCPoly sugar = parse_expression("[x1, P1]");
    NCPoly manual = parse_expression("x1 P1 - P1 x1");
    CHECK(sugar == manual);
    // no ordering rules are applied at parse time
    CHECK(sugar.terms().size() == 2);
}

TEST_CASE("render round trips") {
    for (const char* src : {"x1", "x0 x1 P0", "[M[0,1], P2]", "1/2 i hbar^2 x3 + lam P0^2",
                            "-x2 + 5/7 L[2,2] P1"}) {
        NCPoly p = parse_expression(src);
        CHECK(parse_expression(render(p)) == p);
    }
    CHECK(render(NCPoly::zero()) == "0");
}

TEST_CASE("errors carry position information") {
    CHECK_THROWS_AS(parse_expression("x1 +"), ParseError);
    CHECK_THROWS_AS(parse_expression("frob"), ParseError);
    CHECK_THROWS_AS(parse_expression("M[1"), ParseError);
    try {
        parse_expression("x1 + )");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.col == 6);
    }
}
