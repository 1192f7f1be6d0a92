#include "kappad/scalar.hpp"

#include <climits>
#include <cmath>
#include <sstream>

namespace kappad {

Truncation& truncation() {
    static Truncation t;
    return t;
}

GaussRat GaussRat::inverse() const {
    Rational n = re * re + im * im;
    if (n == 0) throw NotInvertible("GaussRat: division by zero");
    return {re / n, -im / n};
}

static std::string rat_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string s = "(" + rat_str(re);
    if (im < 0)
        s += "-" + rat_str(Rational(-im)) + " i)";
    else
        s += "+" + rat_str(im) + " i)";
    return s;
}

void Scalar::insert(std::pair<int, int> key, GaussRat c) {
    if (c.is_zero()) return;
    if (key.second > truncation().order) return;
    if (key.second < -truncation().floor)
        throw ConfigError("Scalar: lam power " + std::to_string(key.second) +
                          " below floor -" + std::to_string(truncation().floor));
    auto [it, fresh] = terms_.emplace(key, c);
    if (!fresh) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar Scalar::term(GaussRat c, int hbar_pow, int lam_pow) {
    Scalar s;
    s.insert({hbar_pow, lam_pow}, std::move(c));
    return s;
}

GaussRat Scalar::coeff(int hbar_pow, int lam_pow) const {
    auto it = terms_.find({hbar_pow, lam_pow});
    return it == terms_.end() ? GaussRat{} : it->second;
}

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, c] : o.terms_) r.insert(k, c);
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
    Scalar r = *this;
    for (const auto& [k, c] : o.terms_) r.insert(k, -c);
    return r;
}

Scalar Scalar::operator-() const {
    Scalar r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Scalar Scalar::operator*(const Scalar& o) const {
    Scalar r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.insert({ka.first + kb.first, ka.second + kb.second}, ca * cb);
    return r;
}

Scalar operator*(long v, const Scalar& s) { return Scalar::integer(v) * s; }

Scalar Scalar::divided_by_lambda() const {
    Scalar r;
    for (const auto& [k, c] : terms_) {
        if (k.second < 1)
            throw NotDivisible("Scalar: lam^" + std::to_string(k.second) +
                               " component nonzero");
        r.terms_.emplace(std::make_pair(k.first, k.second - 1), c);
    }
    return r;
}

int Scalar::min_lambda_order() const {
    int m = INT_MAX;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
}

Scalar Scalar::lambda_truncate(int max_order) const {
    Scalar r;
    for (const auto& [k, c] : terms_)
        if (k.second <= max_order) r.terms_.emplace(k, c);
    return r;
}

Scalar Scalar::inverse() const {
    int m = min_lambda_order();
    if (m == INT_MAX) throw NotInvertible("Scalar: zero has no inverse");
    // collect the lowest lam-order part
    Scalar low;
    for (const auto& [k, c] : terms_)
        if (k.second == m) low.terms_.emplace(k, c);
    if (low.terms_.size() != 1)
        throw NotInvertible("Scalar: leading lam order is not a monomial");
    auto [lk, lc] = *low.terms_.begin();
    // inverses are only needed for unit pivots (lam order 0)
    if (m != 0) throw NotInvertible("Scalar: leading lam order nonzero");
    Scalar inv_lead = term(lc.inverse(), -lk.first, -lk.second);
    // s = lead * (1 + t), min lam order of t >= 1
    Scalar t = inv_lead * *this - one();
    Scalar acc = one(), pw = one();
    for (int n = 1; n <= truncation().order && !pw.is_zero(); ++n) {
        pw = pw * -t;
        acc += pw;
    }
    return inv_lead * acc;
}

std::complex<double> Scalar::eval(double hbar_val, double lam_val) const {
    std::complex<double> r = 0;
    for (const auto& [k, c] : terms_) {
        std::complex<double> cc(static_cast<double>(c.re), static_cast<double>(c.im));
        r += cc * std::pow(hbar_val, k.first) * std::pow(lam_val, k.second);
    }
    return r;
}

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string piece = c.str();
        if (k.first != 0) {
            piece += " hbar";
            if (k.first != 1) piece += "^" + std::to_string(k.first);
        }
        if (k.second != 0) {
            piece += " lam";
            if (k.second != 1) piece += "^" + std::to_string(k.second);
        }
        if (first) {
            out = piece;
            first = false;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

}  // namespace kappad
