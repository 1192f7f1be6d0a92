#pragma once

#include <functional>
#include <map>
#include <string>

#include "kappad/generators.hpp"
#include "kappad/scalar.hpp"

namespace kappad {

// A word is a sequence of generator ids; the empty word is the unit.
using Word = std::string;

inline Word word_of(std::initializer_list<GenId> gs) {
    Word w;
    for (GenId g : gs) w.push_back(static_cast<char>(g));
    return w;
}

bool is_normal_ordered(const Word& w);

// Noncommutative polynomial: finite Scalar-weighted sum of words.
class NCPoly {
  public:
    using TermMap = std::map<Word, Scalar>;

    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly unit() { return scalar(Scalar::one()); }
    static NCPoly scalar(const Scalar& s);
    static NCPoly gen(GenId g, const Scalar& c = Scalar::one());
    static NCPoly word(const Word& w, const Scalar& c = Scalar::one());

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const Word& w, const Scalar& c);
    Scalar coeff(const Word& w) const;

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator-() const;
    NCPoly operator*(const NCPoly& o) const;  // free concatenation
    NCPoly operator*(const Scalar& s) const;
    NCPoly& operator+=(const NCPoly& o) { return *this = *this + o; }
    NCPoly& operator-=(const NCPoly& o) { return *this = *this - o; }
    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const NCPoly& o) const { return !(*this == o); }

    NCPoly lambda_truncate(int max_order) const;
    int min_lambda_order() const;  // over all coefficients
    bool normal_ordered() const;

    std::string str() const;

  private:
    TermMap terms_;
};

// Finite sum of Scalar-weighted (word (x) word) terms.
class TensorPoly {
  public:
    using TermMap = std::map<std::pair<Word, Word>, Scalar>;

    TensorPoly() = default;
    static TensorPoly zero() { return {}; }
    static TensorPoly term(const Word& l, const Word& r, const Scalar& c);
    static TensorPoly of(const NCPoly& l, const NCPoly& r);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    void add_term(const Word& l, const Word& r, const Scalar& c);

    TensorPoly operator+(const TensorPoly& o) const;
    TensorPoly operator-(const TensorPoly& o) const;
    TensorPoly operator*(const TensorPoly& o) const;  // (a(x)b)(c(x)d) = ac(x)bd
    TensorPoly operator*(const Scalar& s) const;
    TensorPoly& operator+=(const TensorPoly& o) { return *this = *this + o; }
    bool operator==(const TensorPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const TensorPoly& o) const { return !(*this == o); }

    std::string str() const;

  private:
    TermMap terms_;
};

struct MissingRule : std::runtime_error {
    MissingRule(GenId g, GenId h)
        : std::runtime_error("no rewrite rule for " + gen_name(g) + " * " + gen_name(h)),
          left(g),
          right(h) {}
    GenId left, right;
};

struct MissingImage : std::runtime_error {
    explicit MissingImage(GenId g)
        : std::runtime_error("no substitution image for " + gen_name(g)), gen(g) {}
    GenId gen;
};

// Commutation rules g*h -> full right-hand side (h*g + remainder), keyed on
// ordered pairs with weight(g) > weight(h).
class RewriteSystem {
  public:
    void add_rule(GenId g, GenId h, const NCPoly& rhs);
    // [g,h] = bracket; installs g*h -> h*g + bracket
    void add_bracket(GenId g, GenId h, const NCPoly& bracket);
    void add_commuting(GenId g, GenId h) { add_bracket(g, h, NCPoly::zero()); }
    const NCPoly* rule(GenId g, GenId h) const;
    const std::map<std::pair<GenId, GenId>, NCPoly>& rules() const { return rules_; }
    void merge(const RewriteSystem& o);

  private:
    std::map<std::pair<GenId, GenId>, NCPoly> rules_;
};

NCPoly normal_order(const NCPoly& p, const RewriteSystem& rs);
NCPoly commutator(const NCPoly& a, const NCPoly& b, const RewriteSystem& rs);
NCPoly substitute(const NCPoly& p, const std::map<GenId, NCPoly>& images,
                  const RewriteSystem& target);

// exp(c * g) as a truncated lam series; c must have lam order >= 1 so the
// series terminates under truncation.
NCPoly exp_of(const Scalar& c, GenId g);

// Rewrite each tensor leg to normal form.
TensorPoly normalize_legs(const TensorPoly& t, const RewriteSystem& rs);

}  // namespace kappad
