#ifndef LG_TYPES_HPP
#define LG_TYPES_HPP

#include <map>
#include <memory>
#include <string>

#include "lg/formula.hpp"

namespace lg {

struct TypeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Simple arrow types over named atoms. Target types draw atoms from the
// source alphabet plus the response atom `r`; semantic types from {e, t}.
struct Type;
using TypeP = std::shared_ptr<const Type>;

struct Type {
  bool arrow = false;
  std::string atom;  // !arrow
  TypeP dom, cod;    // arrow
};

TypeP t_atom(const std::string& name);
TypeP t_arrow(TypeP dom, TypeP cod);
TypeP t_neg(TypeP a);  // A -> r

extern const std::string kResponseAtom;  // "r"

bool type_eq(const TypeP& a, const TypeP& b);
std::string show(const TypeP& t);

// SemType syntax: `e`, `t`, right-associative `->` (also accepts any atom
// name, used for target types in tests).
TypeP parse_type(const std::string& text);

using AtomMap = std::map<std::string, TypeP>;

// Call-by-value CPS type translation. The source fragment excludes
// Prod/Coprod; those raise UnsupportedConnective (a TypeError).
TypeP cps_type(const FormulaP& f);

// Homomorphic image of a target type under the lexical atom map (which must
// cover every atom incl. `r`).
TypeP lex_type(const TypeP& t, const AtomMap& atom_map);

}  // namespace lg

#endif
