#include "kappad/parser.hpp"

#include <cctype>
#include <vector>

namespace kappad {

namespace {

struct Token {
    enum class Kind { Number, Ident, Sym, End };
    Kind kind;
    std::string text;
    size_t pos;
};

std::pair<int, int> line_col(const std::string& text, size_t pos) {
    int line = 1, col = 1;
    for (size_t k = 0; k < pos && k < text.size(); ++k) {
        if (text[k] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) { lex(); }

    NCPoly parse() {
        NCPoly p = expr();
        expect_end();
        return p;
    }

  private:
    const std::string& text_;
    std::vector<Token> toks_;
    size_t at_ = 0;

    [[noreturn]] void error(const std::string& msg, size_t pos) const {
        auto [line, col] = line_col(text_, pos);
        throw ParseError(msg, line, col);
    }

    void lex() {
        size_t k = 0;
        while (k < text_.size()) {
            char c = text_[k];
            if (std::isspace(static_cast<unsigned char>(c))) {
                ++k;
                continue;
            }
            if (std::isdigit(static_cast<unsigned char>(c))) {
                size_t start = k;
                while (k < text_.size() && std::isdigit(static_cast<unsigned char>(text_[k])))
                    ++k;
                toks_.push_back({Token::Kind::Number, text_.substr(start, k - start), start});
                continue;
            }
            if (std::isalpha(static_cast<unsigned char>(c))) {
                size_t start = k;
                while (k < text_.size() &&
                       std::isalnum(static_cast<unsigned char>(text_[k])))
                    ++k;
                toks_.push_back({Token::Kind::Ident, text_.substr(start, k - start), start});
                continue;
            }
            if (std::string("+-*^()[],/").find(c) != std::string::npos) {
                toks_.push_back({Token::Kind::Sym, std::string(1, c), k});
                ++k;
                continue;
            }
            error(std::string("unexpected character '") + c + "'", k);
        }
        toks_.push_back({Token::Kind::End, "", text_.size()});
    }

    const Token& peek() const { return toks_[at_]; }
    Token take() { return toks_[at_++]; }
    bool is_sym(const char* s) const {
        return peek().kind == Token::Kind::Sym && peek().text == s;
    }
    void expect_sym(const char* s) {
        if (!is_sym(s)) error(std::string("expected '") + s + "'", peek().pos);
        ++at_;
    }
    void expect_end() {
        if (peek().kind != Token::Kind::End) error("trailing input", peek().pos);
    }

    long integer_token() {
        if (peek().kind != Token::Kind::Number) error("expected a number", peek().pos);
        return std::stol(take().text);
    }

    int index_token() {
        long v = integer_token();
        if (v < 0 || v > 3) error("index out of range 0..3", toks_[at_ - 1].pos);
        return static_cast<int>(v);
    }

    long exponent() {  // after '^'
        bool neg = false;
        if (is_sym("-")) {
            neg = true;
            ++at_;
        }
        long v = integer_token();
        return neg ? -v : v;
    }

    NCPoly expr() {
        bool neg = false;
        if (is_sym("-")) {
            neg = true;
            ++at_;
        }
        NCPoly acc = term();
        if (neg) acc = -acc;
        while (is_sym("+") || is_sym("-")) {
            bool minus = peek().text == "-";
            ++at_;
            NCPoly t = term();
            acc = minus ? acc - t : acc + t;
        }
        return acc;
    }

    bool starts_factor() const {
        const Token& t = peek();
        return t.kind == Token::Kind::Number || t.kind == Token::Kind::Ident ||
               (t.kind == Token::Kind::Sym && (t.text == "(" || t.text == "["));
    }

    NCPoly term() {
        NCPoly acc = power();
        while (true) {
            if (is_sym("*")) {
                ++at_;
                acc = acc * power();
            } else if (starts_factor()) {
                acc = acc * power();
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly power() {
        size_t pos = peek().pos;
        // hbar and lam admit negative exponents directly
        if (peek().kind == Token::Kind::Ident &&
            (peek().text == "hbar" || peek().text == "lam")) {
            bool is_h = take().text == "hbar";
            long n = 1;
            if (is_sym("^")) {
                ++at_;
                n = exponent();
            }
            return NCPoly::scalar(is_h ? Scalar::hbar(static_cast<int>(n))
                                       : Scalar::lam(static_cast<int>(n)));
        }
        NCPoly base = primary();
        if (!is_sym("^")) return base;
        ++at_;
        long n = exponent();
        if (n < 0) error("negative exponent is only allowed on hbar and lam", pos);
        NCPoly r = NCPoly::unit();
        for (long k = 0; k < n; ++k) r = r * base;
        return r;
    }

    NCPoly primary() {
        Token t = take();
        switch (t.kind) {
            case Token::Kind::Number: {
                long num = std::stol(t.text);
                if (is_sym("/")) {
                    ++at_;
                    long den = integer_token();
                    if (den == 0) error("zero denominator", t.pos);
                    return NCPoly::scalar(Scalar::rational(num, den));
                }
                return NCPoly::scalar(Scalar::integer(num));
            }
            case Token::Kind::Ident: {
                if (t.text == "i") return NCPoly::scalar(Scalar::i());
                if (t.text == "M" || t.text == "L") {
                    expect_sym("[");
                    int a = index_token();
                    expect_sym(",");
                    int b = index_token();
                    expect_sym("]");
                    if (t.text == "L") return NCPoly::gen(gen_L(a, b));
                    if (a == b) error("M[a,a] vanishes identically", t.pos);
                    auto [id, sign] = gen_M(a, b);
                    return NCPoly::gen(id, Scalar::integer(sign));
                }
                if (auto g = gen_by_name(t.text)) return NCPoly::gen(*g);
                error("unknown generator '" + t.text + "'", t.pos);
            }
            case Token::Kind::Sym:
                if (t.text == "(") {
                    NCPoly p = expr();
                    expect_sym(")");
                    return p;
                }
                if (t.text == "[") {
                    NCPoly a = expr();
                    expect_sym(",");
                    NCPoly b = expr();
                    expect_sym("]");
                    return a * b - b * a;
                }
                if (t.text == "-") return -primary();
                error("unexpected '" + t.text + "'", t.pos);
            default:
                error("unexpected end of input", t.pos);
        }
    }
};

}  // namespace

NCPoly parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string render(const NCPoly& p) { return p.str(); }

}  // namespace kappad
