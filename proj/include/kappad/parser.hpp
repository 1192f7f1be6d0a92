#pragma once

#include <stdexcept>
#include <string>

#include "kappad/ncalg.hpp"

namespace kappad {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg),
          line(line),
          col(col) {}
    int line, col;
};

// Grammar: sums and (juxtaposition or '*') products of powers of
// generators (x0..x3, P0..P3, M[i,j], L[m,n], xh0.., ph0..), constants
// i, hbar, lam, rational literals p/q, parentheses and the commutator
// sugar [A, B] = A B - B A. No normal ordering is applied.
NCPoly parse_expression(const std::string& text);

// canonical text form; parse_expression(render(p)) == p
std::string render(const NCPoly& p);

}  // namespace kappad
