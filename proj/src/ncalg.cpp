#include "kappad/ncalg.hpp"

#include <climits>
#include <deque>
#include <stdexcept>
#include <vector>

namespace kappad {

bool is_normal_ordered(const Word& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (gen_weight(static_cast<GenId>(w[i])) > gen_weight(static_cast<GenId>(w[i + 1])))
            return false;
    return true;
}

NCPoly NCPoly::scalar(const Scalar& s) {
    NCPoly p;
    p.add_term({}, s);
    return p;
}

NCPoly NCPoly::gen(GenId g, const Scalar& c) {
    NCPoly p;
    p.add_term(Word(1, static_cast<char>(g)), c);
    return p;
}

NCPoly NCPoly::word(const Word& w, const Scalar& c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

void NCPoly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Scalar NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero() : it->second;
}

NCPoly NCPoly::operator+(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& o) const {
    NCPoly r = *this;
    for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
    return r;
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator*(const NCPoly& o) const {
    NCPoly r;
    for (const auto& [wa, ca] : terms_)
        for (const auto& [wb, cb] : o.terms_) r.add_term(wa + wb, ca * cb);
    return r;
}

NCPoly NCPoly::operator*(const Scalar& s) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
}

NCPoly NCPoly::lambda_truncate(int max_order) const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.add_term(w, c.lambda_truncate(max_order));
    return r;
}

int NCPoly::min_lambda_order() const {
    int m = INT_MAX;
    for (const auto& [w, c] : terms_) m = std::min(m, c.min_lambda_order());
    return m;
}

bool NCPoly::normal_ordered() const {
    for (const auto& [w, c] : terms_)
        if (!is_normal_ordered(w)) return false;
    return true;
}

static std::string word_str(const Word& w) {
    std::string out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += " ";
        out += gen_name(static_cast<GenId>(w[i]));
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

static std::string term_str(const Word& w, const Scalar& c) {
    std::string cs = c.str();
    std::string ws = word_str(w);
    if (ws.empty()) return cs;
    if (cs == "1") return ws;
    if (cs == "-1") return "-" + ws;
    // sums of scalar monomials need parentheses in front of a word
    if (c.terms().size() > 1) cs = "(" + cs + ")";
    return cs + " " + ws;
}

static std::string join_terms(const std::vector<std::string>& pieces) {
    if (pieces.empty()) return "0";
    std::string out = pieces[0];
    for (size_t i = 1; i < pieces.size(); ++i) {
        if (!pieces[i].empty() && pieces[i][0] == '-')
            out += " - " + pieces[i].substr(1);
        else
            out += " + " + pieces[i];
    }
    return out;
}

std::string NCPoly::str() const {
    std::vector<std::string> pieces;
    for (const auto& [w, c] : terms_) pieces.push_back(term_str(w, c));
    return join_terms(pieces);
}

TensorPoly TensorPoly::term(const Word& l, const Word& r, const Scalar& c) {
    TensorPoly t;
    t.add_term(l, r, c);
    return t;
}

TensorPoly TensorPoly::of(const NCPoly& l, const NCPoly& r) {
    TensorPoly t;
    for (const auto& [wl, cl] : l.terms())
        for (const auto& [wr, cr] : r.terms()) t.add_term(wl, wr, cl * cr);
    return t;
}

void TensorPoly::add_term(const Word& l, const Word& r, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(std::make_pair(l, r), c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

TensorPoly TensorPoly::operator+(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TensorPoly TensorPoly::operator-(const TensorPoly& o) const {
    TensorPoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, -c);
    return r;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    TensorPoly r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TensorPoly TensorPoly::operator*(const Scalar& s) const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

std::string TensorPoly::str() const {
    std::vector<std::string> pieces;
    for (const auto& [k, c] : terms_) {
        std::string lw = word_str(k.first), rw = word_str(k.second);
        if (lw.empty()) lw = "1";
        if (rw.empty()) rw = "1";
        std::string cs = c.str();
        std::string piece = (cs == "1" ? "" : cs == "-1" ? "-" : cs + " ");
        pieces.push_back(piece + lw + " (x) " + rw);
    }
    return join_terms(pieces);
}

void RewriteSystem::add_rule(GenId g, GenId h, const NCPoly& rhs) {
    if (gen_weight(g) <= gen_weight(h))
        throw std::logic_error("rewrite rule must reorder a descending pair");
    rules_[{g, h}] = rhs;
}

void RewriteSystem::add_bracket(GenId g, GenId h, const NCPoly& bracket) {
    add_rule(g, h, NCPoly::word(word_of({h, g})) + bracket);
}

const NCPoly* RewriteSystem::rule(GenId g, GenId h) const {
    auto it = rules_.find({g, h});
    return it == rules_.end() ? nullptr : &it->second;
}

void RewriteSystem::merge(const RewriteSystem& o) {
    for (const auto& [k, v] : o.rules_) rules_[k] = v;
}

NCPoly normal_order(const NCPoly& p, const RewriteSystem& rs) {
    NCPoly result;
    std::deque<std::pair<Word, Scalar>> pending(p.terms().begin(), p.terms().end());
    // budget proportional to length^2 * truncation order per input term
    long budget = 0;
    for (const auto& [w, c] : p.terms()) {
        long len = static_cast<long>(w.size()) + 2;
        budget += 64 * len * len * (truncation().order + 2);
    }
    long steps = 0;
    while (!pending.empty()) {
        auto [w, c] = std::move(pending.front());
        pending.pop_front();
        if (c.is_zero()) continue;
        size_t i = 0;
        for (; i + 1 < w.size(); ++i)
            if (gen_weight(static_cast<GenId>(w[i])) >
                gen_weight(static_cast<GenId>(w[i + 1])))
                break;
        if (i + 1 >= w.size()) {
            result.add_term(w, c);
            continue;
        }
        GenId g = static_cast<GenId>(w[i]), h = static_cast<GenId>(w[i + 1]);
        const NCPoly* r = rs.rule(g, h);
        if (!r) throw MissingRule(g, h);
        if (++steps > budget)
            throw std::logic_error("normal_order: rewrite step budget exceeded");
        Word prefix = w.substr(0, i), suffix = w.substr(i + 2);
        for (const auto& [rw, rc] : r->terms()) {
            Scalar nc = c * rc;
            if (!nc.is_zero()) pending.emplace_back(prefix + rw + suffix, nc);
        }
    }
    return result;
}

NCPoly commutator(const NCPoly& a, const NCPoly& b, const RewriteSystem& rs) {
    return normal_order(a * b - b * a, rs);
}

NCPoly substitute(const NCPoly& p, const std::map<GenId, NCPoly>& images,
                  const RewriteSystem& target) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = NCPoly::scalar(c);
        for (char ch : w) {
            auto it = images.find(static_cast<GenId>(ch));
            if (it == images.end()) throw MissingImage(static_cast<GenId>(ch));
            prod = prod * it->second;
        }
        out += prod;
    }
    return normal_order(out, target);
}

NCPoly exp_of(const Scalar& c, GenId g) {
    if (!c.is_zero() && c.min_lambda_order() < 1)
        throw std::invalid_argument("exp_of: exponent must vanish at lam order 0");
    NCPoly acc = NCPoly::unit();
    Scalar coeff = Scalar::one();
    Word w;
    for (int n = 1; n <= truncation().order; ++n) {
        coeff = coeff * c * Scalar::rational(1, n);
        if (coeff.is_zero()) break;
        w.push_back(static_cast<char>(g));
        acc.add_term(w, coeff);
    }
    return acc;
}

TensorPoly normalize_legs(const TensorPoly& t, const RewriteSystem& rs) {
    TensorPoly out;
    for (const auto& [k, c] : t.terms()) {
        NCPoly l = normal_order(NCPoly::word(k.first), rs);
        NCPoly r = normal_order(NCPoly::word(k.second), rs);
        out += TensorPoly::of(l, r) * c;
    }
    return out;
}

}  // namespace kappad
