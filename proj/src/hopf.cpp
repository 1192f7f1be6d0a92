#include "kappad/hopf.hpp"

#include <climits>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>

namespace kappad {

const TensorPoly& HopfPresentation::coproduct_of(GenId g) const {
    auto it = coproduct.find(g);
    if (it == coproduct.end())
        throw std::logic_error("no coproduct for " + gen_name(g));
    return it->second;
}

Scalar HopfPresentation::counit_of(GenId g) const {
    auto it = counit.find(g);
    if (it == counit.end()) throw std::logic_error("no counit for " + gen_name(g));
    return it->second;
}

Scalar HopfPresentation::counit_word(const Word& w) const {
    Scalar r = Scalar::one();
    for (char ch : w) {
        r *= counit_of(static_cast<GenId>(ch));
        if (r.is_zero()) break;
    }
    return r;
}

Scalar HopfPresentation::counit_poly(const NCPoly& p) const {
    Scalar r = Scalar::zero();
    for (const auto& [w, c] : p.terms()) r += c * counit_word(w);
    return r;
}

TensorPoly coproduct_extend_word(const Word& w, const HopfPresentation& h) {
    TensorPoly acc = TensorPoly::term({}, {}, Scalar::one());
    for (char ch : w) acc = acc * h.coproduct_of(static_cast<GenId>(ch));
    return normalize_legs(acc, h.rewrite);
}

TensorPoly coproduct_extend(const NCPoly& p, const HopfPresentation& h) {
    TensorPoly acc;
    for (const auto& [w, c] : p.terms()) acc += coproduct_extend_word(w, h) * c;
    return acc;
}

Scalar PairingEngine::base(GenId b, GenId a) const {
    auto it = table_.base.find({b, a});
    if (it == table_.base.end()) throw UnknownBasePair(b, a);
    return it->second;
}

Scalar PairingEngine::pair(const Word& b, const Word& a, Route route) const {
    if (a.empty()) return grp_.counit_word(b);
    if (b.empty()) return alg_.counit_word(a);
    if (a.size() == 1 && b.size() == 1)
        return base(static_cast<GenId>(b[0]), static_cast<GenId>(a[0]));

    static std::mutex cache_mutex;
    std::tuple<Word, Word, int> key{b, a, static_cast<int>(route)};
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
    }

    Scalar r = Scalar::zero();
    bool split_a = a.size() > 1 && (route == Route::SplitAlgebraFirst || b.size() <= 1);
    if (split_a) {
        // <b, a0 rest> = <b(1), a0> <b(2), rest>
        Word head = a.substr(0, 1), rest = a.substr(1);
        TensorPoly db = coproduct_extend_word(b, grp_);
        for (const auto& [k, c] : db.terms()) {
            Scalar left = pair(k.first, head, route);
            if (left.is_zero()) continue;
            r += c * left * pair(k.second, rest, route);
        }
    } else {
        // <b0 rest, a> = <b0, a(1)> <rest, a(2)>
        Word head = b.substr(0, 1), rest = b.substr(1);
        TensorPoly da = coproduct_extend_word(a, alg_);
        for (const auto& [k, c] : da.terms()) {
            Scalar left = pair(head, k.first, route);
            if (left.is_zero()) continue;
            r += c * left * pair(rest, k.second, route);
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache_.emplace(std::move(key), r);
    return r;
}

Scalar PairingEngine::pair(const NCPoly& b, const NCPoly& a, Route route) const {
    Scalar r = Scalar::zero();
    for (const auto& [wb, cb] : b.terms())
        for (const auto& [wa, ca] : a.terms()) r += cb * ca * pair(wb, wa, route);
    return r;
}

NCPoly heisenberg_cross(GenId b, GenId a, const PairingEngine& engine) {
    const TensorPoly& da = engine.algebra_side().coproduct_of(a);
    const TensorPoly& db = engine.group_side().coproduct_of(b);
    NCPoly out;
    for (const auto& [ka, ca] : da.terms())
        for (const auto& [kb, cb] : db.terms()) {
            Scalar p = engine.pair(kb.first, ka.second);
            if (p.is_zero()) continue;
            out.add_term(ka.first + kb.second, ca * cb * p);
        }
    return out;
}

NCPoly cross_commutator(GenId b, GenId a, const PairingEngine& engine) {
    return heisenberg_cross(b, a, engine) - NCPoly::word(word_of({a, b}));
}

RewriteSystem derive_cross_rules(const PairingEngine& engine) {
    RewriteSystem rs;
    const auto& alg = engine.algebra_side();
    const auto& grp = engine.group_side();
    for (GenId a : alg.generators)
        for (GenId b : grp.generators) {
            NCPoly cross = heisenberg_cross(b, a, engine);
            Word w_ab = word_of({a, b});
            if (cross.coeff(w_ab) != Scalar::one())
                throw std::logic_error("cross relation for (" + gen_name(b) + ", " +
                                       gen_name(a) + ") lacks a unit identity term");
            // b a = value(cross) and cross = (a b) + R, hence a b = b a - R
            NCPoly remainder = cross - NCPoly::word(w_ab);
            bool alg_left = true;
            for (const auto& [w, c] : remainder.terms()) {
                bool has_grp = false, has_alg = false;
                for (char ch : w) {
                    bool is_grp = false;
                    for (GenId g : grp.generators)
                        if (g == static_cast<GenId>(ch)) is_grp = true;
                    (is_grp ? has_grp : has_alg) = true;
                }
                if (has_grp && has_alg) alg_left = false;
            }
            if (!alg_left)
                throw std::logic_error("cross remainder for (" + gen_name(b) + ", " +
                                       gen_name(a) + ") contains mixed words");
            rs.add_rule(a, b, NCPoly::word(word_of({b, a})) - remainder);
        }
    return rs;
}

// ---- axiom checks ----

namespace {

using Triple = std::map<std::tuple<Word, Word, Word>, Scalar>;

void triple_add(Triple& t, const Word& a, const Word& b, const Word& c, const Scalar& s) {
    if (s.is_zero()) return;
    auto key = std::make_tuple(a, b, c);
    auto [it, fresh] = t.emplace(key, s);
    if (!fresh) {
        it->second += s;
        if (it->second.is_zero()) t.erase(it);
    }
}

int triple_min_lambda(const Triple& t) {
    int m = INT_MAX;
    for (const auto& [k, c] : t) m = std::min(m, c.min_lambda_order());
    return m == INT_MAX ? -1 : m;
}

std::string triple_str(const Triple& t) {
    std::ostringstream os;
    size_t shown = 0;
    for (const auto& [k, c] : t) {
        if (shown++) os << " + ";
        if (shown > 4) {
            os << "...";
            break;
        }
        os << c.str() << " [" << NCPoly::word(std::get<0>(k)).str() << " (x) "
           << NCPoly::word(std::get<1>(k)).str() << " (x) "
           << NCPoly::word(std::get<2>(k)).str() << "]";
    }
    return os.str();
}

// words over the presentation's generators, lengths 1..max_len
void for_each_word(const std::vector<GenId>& gens, int max_len,
                   const std::function<void(const Word&)>& fn) {
    std::vector<Word> level;
    level.emplace_back();
    for (int len = 1; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (GenId g : gens) {
                Word nw = w;
                nw.push_back(static_cast<char>(g));
                fn(nw);
                next.push_back(std::move(nw));
            }
        level = std::move(next);
    }
}

}  // namespace

namespace {

// quotient a three-leg residual leg by leg
Triple reduce_triple(const Triple& t, const HopfPresentation& h) {
    if (!h.quotient) return t;
    Triple out;
    for (const auto& [k, c] : t) {
        NCPoly a = h.reduce(NCPoly::word(std::get<0>(k)));
        NCPoly b = h.reduce(NCPoly::word(std::get<1>(k)));
        NCPoly d = h.reduce(NCPoly::word(std::get<2>(k)));
        for (const auto& [wa, ca] : a.terms())
            for (const auto& [wb, cb] : b.terms())
                for (const auto& [wd, cd] : d.terms())
                    triple_add(out, wa, wb, wd, c * ca * cb * cd);
    }
    return out;
}

TensorPoly reduce_legs(const TensorPoly& t, const HopfPresentation& h) {
    if (!h.quotient) return t;
    TensorPoly out;
    for (const auto& [k, c] : t.terms()) {
        NCPoly a = h.reduce(NCPoly::word(k.first));
        NCPoly b = h.reduce(NCPoly::word(k.second));
        out += TensorPoly::of(a, b) * c;
    }
    return out;
}

}  // namespace

std::vector<CheckReport> check_coassociativity(const HopfPresentation& h, int max_len) {
    std::vector<CheckReport> out;
    for_each_word(h.generators, max_len, [&](const Word& w) {
        TensorPoly dw = coproduct_extend_word(w, h);
        Triple residual;
        for (const auto& [k, c] : dw.terms()) {
            TensorPoly dl = coproduct_extend_word(k.first, h);
            for (const auto& [kl, cl] : dl.terms())
                triple_add(residual, kl.first, kl.second, k.second, c * cl);
            TensorPoly dr = coproduct_extend_word(k.second, h);
            for (const auto& [kr, cr] : dr.terms())
                triple_add(residual, k.first, kr.first, kr.second, -(c * cr));
        }
        if (!residual.empty()) residual = reduce_triple(residual, h);
        std::string id = "coassoc:" + NCPoly::word(w).str();
        if (residual.empty())
            out.push_back(CheckReport::pass(id, "(D(x)id)D - (id(x)D)D on " + NCPoly::word(w).str()));
        else
            out.push_back(CheckReport::fail(id, triple_str(residual), triple_min_lambda(residual)));
    });
    return out;
}

std::vector<CheckReport> check_counit_axiom(const HopfPresentation& h) {
    std::vector<CheckReport> out;
    for (GenId g : h.generators) {
        NCPoly left, right;
        for (const auto& [k, c] : h.coproduct_of(g).terms()) {
            left += NCPoly::word(k.second, c * h.counit_word(k.first));
            right += NCPoly::word(k.first, c * h.counit_word(k.second));
        }
        NCPoly expect = NCPoly::gen(g);
        NCPoly residual = (left - expect) + (right - expect);
        std::string id = "counit:" + gen_name(g);
        if ((left == expect) && (right == expect))
            out.push_back(CheckReport::pass(id));
        else
            out.push_back(CheckReport::fail(id, residual.str(), residual.min_lambda_order()));
    }
    return out;
}

std::vector<CheckReport> check_bialgebra_compat(const HopfPresentation& h) {
    std::vector<CheckReport> out;
    for (const auto& [key, rhs] : h.rewrite.rules()) {
        auto [g, g2] = key;
        TensorPoly lhs = normalize_legs(h.coproduct_of(g) * h.coproduct_of(g2), h.rewrite);
        TensorPoly residual = lhs - coproduct_extend(rhs, h);
        if (!residual.is_zero()) residual = reduce_legs(residual, h);
        std::string id = "bialg:" + gen_name(g) + "*" + gen_name(g2);
        if (residual.is_zero()) {
            out.push_back(CheckReport::pass(id, "D(g)D(h) - D(rhs)"));
        } else {
            int m = INT_MAX;
            for (const auto& [k, c] : residual.terms())
                m = std::min(m, c.min_lambda_order());
            out.push_back(CheckReport::fail(id, residual.str(), m == INT_MAX ? -1 : m));
        }
    }
    return out;
}

std::vector<CheckReport> check_pairing_bilinearity(const PairingEngine& engine,
                                                   int samples, unsigned long seed) {
    std::vector<CheckReport> out;
    std::mt19937_64 rng(seed);
    const auto& ggens = engine.group_side().generators;
    const auto& agens = engine.algebra_side().generators;
    auto random_word = [&](const std::vector<GenId>& gens) {
        std::uniform_int_distribution<int> len_dist(1, 4);
        std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
        Word w;
        int len = len_dist(rng);
        for (int i = 0; i < len; ++i) w.push_back(static_cast<char>(gens[pick(rng)]));
        return w;
    };
    for (int s = 0; s < samples; ++s) {
        Word b = random_word(ggens), a = random_word(agens);
        Scalar via_a = engine.pair(b, a, PairingEngine::Route::SplitAlgebraFirst);
        Scalar via_b = engine.pair(b, a, PairingEngine::Route::SplitGroupFirst);
        std::string id = "pair-welldef:<" + NCPoly::word(b).str() + ", " +
                         NCPoly::word(a).str() + ">";
        if (via_a == via_b)
            out.push_back(CheckReport::pass(id));
        else
            out.push_back(CheckReport::fail(id, (via_a - via_b).str(),
                                            (via_a - via_b).min_lambda_order()));
    }
    return out;
}

}  // namespace kappad
