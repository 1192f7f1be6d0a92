#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace kappad {

using Rational = boost::multiprecision::cpp_rational;

// Truncation context for the lambda series. Set once at startup (or at the
// top of a test); all Scalar arithmetic reads it.
struct Truncation {
    int order = 6;   // powers of lam above this are dropped
    int floor = 1;   // powers of lam below -floor are a configuration error
};

Truncation& truncation();

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact Gaussian rational a + b*i.
struct GaussRat {
    Rational re, im;

    GaussRat() = default;
    GaussRat(Rational r, Rational i = 0) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat inverse() const;
    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }

    std::string str() const;
};

// Exact coefficient: Gaussian-rational combination of hbar^a * lam^b with
// integer a and b, b truncated at truncation().order. lam stands for 1/kappa.
class Scalar {
  public:
    // (hbar power, lam power) -> coefficient; no zero coefficients stored.
    using TermMap = std::map<std::pair<int, int>, GaussRat>;

    Scalar() = default;

    static Scalar zero() { return {}; }
    static Scalar one() { return integer(1); }
    static Scalar i() { return term({0, 1}, 0, 0); }
    static Scalar integer(long v) { return term({Rational(v), 0}, 0, 0); }
    static Scalar rational(long p, long q) { return term({Rational(p) / q, 0}, 0, 0); }
    static Scalar hbar(int n = 1) { return term({1, 0}, n, 0); }
    static Scalar lam(int n = 1) { return term({1, 0}, 0, n); }
    static Scalar term(GaussRat c, int hbar_pow, int lam_pow);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    GaussRat coeff(int hbar_pow, int lam_pow) const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    bool operator==(const Scalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Exact division by lam; every term must have lam power >= 1.
    Scalar divided_by_lambda() const;

    // Multiplicative inverse in the truncated series ring. Requires the
    // lowest lam order part to be a single monomial c * hbar^a.
    Scalar inverse() const;

    // Drop terms with lam power > max_order (lam -> 0 limit at 0).
    Scalar lambda_truncate(int max_order) const;

    int min_lambda_order() const;  // INT_MAX when zero

    std::complex<double> eval(double hbar_val, double lam_val) const;

    std::string str() const;

  private:
    void insert(std::pair<int, int> key, GaussRat c);
    TermMap terms_;
};

Scalar operator*(long v, const Scalar& s);

}  // namespace kappad
