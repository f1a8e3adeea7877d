#ifndef LG_TERM_HPP
#define LG_TERM_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "lg/types.hpp"

namespace lg {

// Linear lambda terms over atoms plus `r`. Constants come from the lexicon;
// everything produced by the CPS translation is variables only.
enum class TermKind { Var, Const, Abs, App };

struct Term;
using TermP = std::shared_ptr<const Term>;

struct Term {
  TermKind kind;
  std::string name;  // Var/Const/Abs binder
  TermP a, b;        // Abs: a = body; App: a = fun, b = arg
};

TermP t_var(const std::string& n);
TermP t_const(const std::string& n);
TermP t_abs(const std::string& n, TermP body);
TermP t_app(TermP f, TermP a);
TermP t_app(TermP f, TermP a, TermP b);

std::string show(const TermP& t);

// `\x. M` abstraction, juxtaposition application (left-associative),
// parentheses. All identifiers parse as Var; resolve_constants turns the
// free ones into Const (and rejects undeclared free names).
TermP parse_term(const std::string& text);
TermP resolve_constants(const TermP& t, const std::set<std::string>& constants);

std::set<std::string> free_vars(const TermP& t);

// Capture-avoiding; renames on demand with deterministic fresh names.
TermP substitute(const TermP& t, const std::string& var, const TermP& repl);

TermP beta_normalize(const TermP& t);

bool alpha_eq(const TermP& a, const TermP& b);

// True iff every name in `over` (as a free variable, or at each binder of
// that name) occurs exactly once in its scope.
bool is_linear(const TermP& t, const std::set<std::string>& over);

// All binder and free-variable names, for linearity over the whole term.
std::set<std::string> all_var_names(const TermP& t);

// Principal simple type via unification; env gives types of free variables
// and constants. Throws TypeError on clashes or unbound names.
TypeP typecheck(const TermP& t, const std::map<std::string, TypeP>& env);

// Checks typecheck(t, env) against an expected type.
void typecheck_expect(const TermP& t, const std::map<std::string, TypeP>& env, const TypeP& expected,
                      const std::string& what);

}  // namespace lg

#endif
