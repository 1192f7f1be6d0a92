#pragma once

#include <array>
#include <map>

#include "kappad/ncalg.hpp"

namespace kappad {

// Commutative polynomial in x0..x3 with Scalar coefficients; the functional
// picture of an ordered NCPoly (all x0 powers to the left).
class XPoly {
  public:
    using Exps = std::array<int, 4>;  // powers of x0, x1, x2, x3
    using TermMap = std::map<Exps, Scalar>;

    XPoly() = default;
    static XPoly zero() { return {}; }
    static XPoly one() { return constant(Scalar::one()); }
    static XPoly constant(const Scalar& c);
    static XPoly var(int mu);

    // requires every word to be a normal-ordered x-word
    static XPoly from_ordered(const NCPoly& p);
    NCPoly to_ordered() const;

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const Exps& e, const Scalar& c);

    XPoly operator+(const XPoly& o) const;
    XPoly operator-(const XPoly& o) const;
    XPoly operator*(const XPoly& o) const;
    XPoly operator*(const Scalar& s) const;
    XPoly& operator+=(const XPoly& o) { return *this = *this + o; }
    bool operator==(const XPoly& o) const { return terms_ == o.terms_; }

    XPoly pow(int n) const;
    XPoly derivative(int mu) const;
    XPoly laplacian() const;              // spatial indices only
    XPoly shift_x0(const Scalar& c) const;  // x0 -> x0 + c
    Scalar at_zero() const;

  private:
    TermMap terms_;
};

// ((kappa/2)(1 - e^{(2i/kappa) d0}) - (1/2 kappa) Lap)^m  d_r^n
// applied to F(x0 - i(m+n)/kappa, xvec), evaluated at x = 0.
// The time shift acts as an exact polynomial substitution and the kappa/2
// prefactor is an exact division by lam.
Scalar finite_difference_apply(const XPoly& F, int m, int n, int r);

// <:psi:, f> = f(-i hbar d0, i hbar grad) psi | x=0 for commuting momenta f.
Scalar pair_by_differentiation(const NCPoly& psi_ordered, const NCPoly& f_momenta);

}  // namespace kappad
