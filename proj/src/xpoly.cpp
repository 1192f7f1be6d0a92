#include "kappad/xpoly.hpp"

#include <stdexcept>

namespace kappad {

XPoly XPoly::constant(const Scalar& c) {
    XPoly p;
    p.add_term({0, 0, 0, 0}, c);
    return p;
}

XPoly XPoly::var(int mu) {
    Exps e{0, 0, 0, 0};
    e[mu] = 1;
    XPoly p;
    p.add_term(e, Scalar::one());
    return p;
}

XPoly XPoly::from_ordered(const NCPoly& p) {
    XPoly out;
    for (const auto& [w, c] : p.terms()) {
        Exps e{0, 0, 0, 0};
        for (char ch : w) {
            GenId g = static_cast<GenId>(ch);
            const auto& gi = gen_info(g);
            if (gi.cls != GenClass::CoordTime && gi.cls != GenClass::CoordSpace)
                throw std::invalid_argument("XPoly: not an x-word: " + gen_name(g));
            if (g > 3) throw std::invalid_argument("XPoly: expected x0..x3");
            ++e[g];
        }
        if (!is_normal_ordered(w))
            throw std::invalid_argument("XPoly: word not normal ordered");
        out.add_term(e, c);
    }
    return out;
}

NCPoly XPoly::to_ordered() const {
    NCPoly out;
    for (const auto& [e, c] : terms_) {
        Word w;
        for (int mu = 0; mu < 4; ++mu)
            for (int k = 0; k < e[mu]; ++k) w.push_back(static_cast<char>(gen_x(mu)));
        out.add_term(w, c);
    }
    return out;
}

void XPoly::add_term(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

XPoly XPoly::operator+(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

XPoly XPoly::operator-(const XPoly& o) const {
    XPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

XPoly XPoly::operator*(const XPoly& o) const {
    XPoly r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_) {
            Exps e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2], ea[3] + eb[3]};
            r.add_term(e, ca * cb);
        }
    return r;
}

XPoly XPoly::operator*(const Scalar& s) const {
    XPoly r;
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
}

XPoly XPoly::pow(int n) const {
    XPoly r = one();
    for (int k = 0; k < n; ++k) r = r * *this;
    return r;
}

XPoly XPoly::derivative(int mu) const {
    XPoly r;
    for (const auto& [e, c] : terms_) {
        if (e[mu] == 0) continue;
        Exps ne = e;
        --ne[mu];
        r.add_term(ne, Scalar::integer(e[mu]) * c);
    }
    return r;
}

XPoly XPoly::laplacian() const {
    XPoly r;
    for (int k = 1; k <= 3; ++k) r += derivative(k).derivative(k);
    return r;
}

XPoly XPoly::shift_x0(const Scalar& c) const {
    // binomial expansion of (x0 + c)^k per term
    XPoly r;
    for (const auto& [e, cf] : terms_) {
        int k = e[0];
        Scalar binom = Scalar::one();  // C(k, j)
        Scalar cpow = Scalar::one();   // c^j
        for (int j = 0; j <= k; ++j) {
            Exps ne = e;
            ne[0] = k - j;
            r.add_term(ne, cf * binom * cpow);
            if (j < k) {
                binom *= Scalar::rational(k - j, j + 1);
                cpow *= c;
            }
        }
    }
    return r;
}

Scalar XPoly::at_zero() const {
    auto it = terms_.find({0, 0, 0, 0});
    return it == terms_.end() ? Scalar::zero() : it->second;
}

static XPoly difference_op(const XPoly& psi) {
    // (kappa/2)(psi(x0) - psi(x0 + 2 i lam)) - (lam/2) Lap psi
    Scalar two_i_lam = Scalar::integer(2) * Scalar::i() * Scalar::lam();
    XPoly diff = psi - psi.shift_x0(two_i_lam);
    XPoly half_diff = diff * Scalar::rational(1, 2);
    XPoly divided;
    for (const auto& [e, c] : half_diff.terms())
        divided.add_term(e, c.divided_by_lambda());
    return divided - psi.laplacian() * (Scalar::rational(1, 2) * Scalar::lam());
}

Scalar finite_difference_apply(const XPoly& F, int m, int n, int r) {
    Scalar shift = Scalar::integer(-(m + n)) * Scalar::i() * Scalar::lam();
    XPoly g = F.shift_x0(shift);
    for (int k = 0; k < n; ++k) g = g.derivative(r);
    for (int k = 0; k < m; ++k) g = difference_op(g);
    return g.at_zero();
}

Scalar pair_by_differentiation(const NCPoly& psi_ordered, const NCPoly& f_momenta) {
    XPoly psi = XPoly::from_ordered(psi_ordered);
    Scalar out = Scalar::zero();
    for (const auto& [w, c] : f_momenta.terms()) {
        std::array<int, 4> pexp{0, 0, 0, 0};  // P0, P1, P2, P3 powers
        for (char ch : w) {
            GenId g = static_cast<GenId>(ch);
            const auto& gi = gen_info(g);
            if (gi.cls != GenClass::MomentumTime && gi.cls != GenClass::MomentumSpace)
                throw std::invalid_argument("pair_by_differentiation: not a P-word");
            ++pexp[gi.idx[0]];
        }
        // P0 -> -i hbar d0, P_r -> i hbar d_r
        XPoly g = psi;
        Scalar factor = Scalar::one();
        for (int k = 0; k < pexp[0]; ++k) {
            g = g.derivative(0);
            factor *= -(Scalar::i() * Scalar::hbar());
        }
        for (int rr = 1; rr <= 3; ++rr)
            for (int k = 0; k < pexp[rr]; ++k) {
                g = g.derivative(rr);
                factor *= Scalar::i() * Scalar::hbar();
            }
        out += c * factor * g.at_zero();
    }
    return out;
}

}  // namespace kappad
