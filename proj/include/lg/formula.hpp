#ifndef LG_FORMULA_HPP
#define LG_FORMULA_HPP

#include <memory>
#include <stdexcept>
#include <string>

namespace lg {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos(pos) {}
};

// Formula connectives. Binary: l op r. Unary: GalR = A^0, GalL = ^0 A,
// DGalR = A^1, DGalL = ^1 A. RDiff is oslash, LDiff is obslash.
enum class FKind {
  Atom,
  Prod,    // *
  Over,    // /
  Under,   // backslash
  Coprod,  // +
  RDiff,   // (/)
  LDiff,   // (\)
  GalR,    // postfix ^0
  GalL,    // prefix ^0
  DGalR,   // postfix ^1
  DGalL,   // prefix ^1
};

struct Formula;
using FormulaP = std::shared_ptr<const Formula>;

struct Formula {
  FKind kind;
  std::string atom;  // Atom only
  FormulaP l, r;     // unary connectives use l
};

FormulaP f_atom(const std::string& name);
FormulaP f_bin(FKind k, FormulaP l, FormulaP r);
FormulaP f_un(FKind k, FormulaP a);

bool is_binary(FKind k);
bool is_unary(FKind k);

bool formula_eq(const FormulaP& a, const FormulaP& b);
int formula_cmp(const FormulaP& a, const FormulaP& b);

// ASCII rendering; show . parse = id.
std::string show(const FormulaP& f);

// Grammar: atoms [a-z][A-Za-z0-9_]* except `r`; unary binds tighter than
// binary; binaries are non-associative and must be parenthesized when nested.
FormulaP parse_formula(const std::string& text);

// Arrow sequent "F -> G".
std::pair<FormulaP, FormulaP> parse_arrow(const std::string& text);

// The two symmetries of the calculus. Both are involutions.
FormulaP bowtie(const FormulaP& f);
FormulaP infinity(const FormulaP& f);

// True iff f avoids Prod/Coprod (the CPS source fragment).
bool in_cps_fragment(const FormulaP& f);

size_t formula_size(const FormulaP& f);

}  // namespace lg

#endif
