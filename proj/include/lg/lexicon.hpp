#ifndef LG_LEXICON_HPP
#define LG_LEXICON_HPP

#include <vector>

#include "lg/cps.hpp"
#include "lg/term.hpp"

namespace lg {

struct LexError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LexEntry {
  std::string word;       // may contain spaces (multiword unit)
  FormulaP source_type;
  TermP sem_term;         // closed over the declared constants
};

struct Lexicon {
  AtomMap atom_map;  // atom -> semantic type; must cover `r`
  std::map<std::string, TypeP> constants;
  std::vector<std::string> words;  // declaration order
  std::map<std::string, std::vector<LexEntry>> entries;

  bool has_word(const std::string& w) const { return entries.count(w) != 0; }
  std::map<std::string, TypeP> const_env() const { return constants; }
};

// Line-oriented format, `#` comments:
//   atom <name> = <SemType>
//   const <name> : <SemType>
//   word <w> : <Formula> = <Term>    (quote multiword keys: word "picture of" : ...)
// Every entry is validated: typecheck(sem_term) = lex_type(cps_type(source)).
Lexicon load_lexicon(const std::string& text);
Lexicon load_lexicon_file(const std::string& path);

// Substitutes lexical recipes for the free variables of a compiled term;
// binding maps each free name to a word, resolved against the entry whose
// CPS type matches the free variable's type.
TermP lex_term(const TypedTerm& t, const Lexicon& lex, const std::map<std::string, std::string>& binding);

}  // namespace lg

#endif
