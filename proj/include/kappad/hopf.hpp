#pragma once

#include <functional>
#include <vector>

#include "kappad/ncalg.hpp"
#include "kappad/report.hpp"

namespace kappad {

// Generators with rewrite rules, coproducts and counits; one side of a
// dually paired bialgebra.
struct HopfPresentation {
    enum class Side { Algebra, Group };

    std::vector<GenId> generators;
    RewriteSystem rewrite;
    std::map<GenId, TensorPoly> coproduct;
    std::map<GenId, Scalar> counit;
    Side side = Side::Algebra;

    // Relations among commuting generators that are not expressible as
    // ordering rules (matrix-entry constraints); axiom residuals are reduced
    // through this map before the zero test. Null means no extra relations.
    std::function<NCPoly(const NCPoly&)> quotient;

    NCPoly reduce(const NCPoly& p) const { return quotient ? quotient(p) : p; }

    const TensorPoly& coproduct_of(GenId g) const;
    Scalar counit_of(GenId g) const;
    Scalar counit_word(const Word& w) const;   // counit is an algebra map
    Scalar counit_poly(const NCPoly& p) const;
};

// Multiplicative extension of the coproduct to normal-ordered polynomials;
// each tensor leg is rewritten to normal form.
TensorPoly coproduct_extend(const NCPoly& p, const HopfPresentation& h);
TensorPoly coproduct_extend_word(const Word& w, const HopfPresentation& h);

struct UnknownBasePair : std::runtime_error {
    UnknownBasePair(GenId b, GenId a)
        : std::runtime_error("no base pairing for <" + gen_name(b) + ", " +
                             gen_name(a) + ">") {}
};

struct PairingTable {
    // (group generator, algebra generator) -> base value
    std::map<std::pair<GenId, GenId>, Scalar> base;
};

// Recursive duality pairing <b, a> between a group-side word b and an
// algebra-side word a. Multiplication on one side pairs against
// comultiplication on the other:
//   <b, a a~> = <b(1), a> <b(2), a~>     <b b~, a> = <b, a(1)> <b~, a(2)>
class PairingEngine {
  public:
    enum class Route { SplitAlgebraFirst, SplitGroupFirst };

    PairingEngine(const HopfPresentation& group, const HopfPresentation& algebra,
                  PairingTable table)
        : grp_(group), alg_(algebra), table_(std::move(table)) {}

    Scalar pair(const Word& b, const Word& a, Route route = Route::SplitAlgebraFirst) const;
    Scalar pair(const NCPoly& b, const NCPoly& a,
                Route route = Route::SplitAlgebraFirst) const;

    const HopfPresentation& group_side() const { return grp_; }
    const HopfPresentation& algebra_side() const { return alg_; }
    const PairingTable& table() const { return table_; }

  private:
    Scalar base(GenId b, GenId a) const;
    const HopfPresentation& grp_;
    const HopfPresentation& alg_;
    PairingTable table_;
    mutable std::map<std::tuple<Word, Word, int>, Scalar> cache_;
};

// The product b a of a group generator with an algebra generator written in
// algebra-left form: b o a = a(1) <b(1), a(2)> b(2).
NCPoly heisenberg_cross(GenId b, GenId a, const PairingEngine& engine);

// Cross commutator [b, a] = b o a - a b, in algebra-left words.
NCPoly cross_commutator(GenId b, GenId a, const PairingEngine& engine);

// Rewrite rules a*b -> b*a - [b,a] for every (algebra, group) generator pair,
// inverted into the global order (group generators have the lower weights).
RewriteSystem derive_cross_rules(const PairingEngine& engine);

std::vector<CheckReport> check_coassociativity(const HopfPresentation& h, int max_len);
std::vector<CheckReport> check_counit_axiom(const HopfPresentation& h);
std::vector<CheckReport> check_bialgebra_compat(const HopfPresentation& h);
std::vector<CheckReport> check_pairing_bilinearity(const PairingEngine& engine,
                                                   int samples, unsigned long seed);

}  // namespace kappad
