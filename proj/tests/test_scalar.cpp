#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "kappad/scalar.hpp"

using namespace kappad;

namespace {

struct TruncGuard {
    Truncation saved;
    TruncGuard() : saved(truncation()) {}
    ~TruncGuard() { truncation() = saved; }
};

}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussRat i(0, 1);
    CHECK(i * i == GaussRat(-1));
    GaussRat z(Rational(3) / 4, Rational(-1) / 2);
    CHECK(z * z.inverse() == GaussRat(1));
    CHECK((z - z).is_zero());
}

TEST_CASE("scalar ring basics") {
    Scalar a = Scalar::rational(2, 3) * Scalar::hbar(2) * Scalar::lam(1);
    Scalar b = Scalar::rational(1, 3) * Scalar::hbar(2) * Scalar::lam(1);
    CHECK(a - b == b);
    CHECK(a + (-a) == Scalar::zero());
    CHECK(Scalar::i() * Scalar::i() == Scalar::integer(-1));
    CHECK(a.coeff(2, 1) == GaussRat(Rational(2) / 3));
    CHECK(a.coeff(0, 0).is_zero());
    CHECK(3 * b == Scalar::hbar(2) * Scalar::lam(1));
}

TEST_CASE("lambda truncation drops high orders") {
    TruncGuard guard;
    truncation().order = 3;
    Scalar l = Scalar::lam(1);
    Scalar p = l * l * l;       // lam^3 survives
    CHECK(!p.is_zero());
    CHECK((p * l).is_zero());   // lam^4 is dropped on multiply
    CHECK(p.lambda_truncate(2).is_zero());
    CHECK(p.min_lambda_order() == 3);
}

TEST_CASE("exact division by lambda") {
    Scalar s = Scalar::integer(5) * Scalar::lam(2) * Scalar::hbar(-1);
    CHECK(s.divided_by_lambda() == Scalar::integer(5) * Scalar::lam(1) * Scalar::hbar(-1));
    CHECK_THROWS_AS(Scalar::one().divided_by_lambda(), NotDivisible);
}

TEST_CASE("series inverse") {
    Scalar two_hbar = Scalar::integer(2) * Scalar::hbar(1);
    CHECK(two_hbar.inverse() * two_hbar == Scalar::one());

    Scalar s = Scalar::one() - Scalar::lam(1);
    CHECK(s * s.inverse() == Scalar::one());
    // geometric series: the lam^k coefficient of 1/(1 - lam) is 1
    CHECK(s.inverse().coeff(0, truncation().order) == GaussRat(1));

    CHECK_THROWS_AS(Scalar::zero().inverse(), NotInvertible);
    // lowest order 1 + hbar is not a monomial
    CHECK_THROWS_AS((Scalar::one() + Scalar::hbar(1)).inverse(), NotInvertible);
}

TEST_CASE("numeric evaluation") {
    Scalar s = Scalar::i() * Scalar::hbar(1) + Scalar::rational(1, 2) * Scalar::lam(1);
    std::complex<double> v = s.eval(2.0, 0.25);
    CHECK(v.real() == doctest::Approx(0.125));
    CHECK(v.imag() == doctest::Approx(2.0));
}

TEST_CASE("string form round trips through sign structure") {
    Scalar s = -Scalar::rational(3, 2) * Scalar::hbar(-2) * Scalar::lam(4);
    CHECK(s.str().find("hbar^-2") != std::string::npos);
    CHECK(s.str().find("lam^4") != std::string::npos);
}
