#ifndef LG_READINGS_HPP
#define LG_READINGS_HPP

#include "lg/lexicon.hpp"
#include "lg/prover.hpp"

namespace lg {

struct NoDerivation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ReadingsOptions {
  RuleConfig cfg;
  std::string brackets;        // empty: right-branching over lexical units
  size_t limit = SIZE_MAX;     // max readings returned
  size_t proof_limit = 4096;   // internal proof enumeration cap
  size_t max_steps = 0;
};

struct Reading {
  TermP term;      // beta-normal, after lexical substitution
  ProofP proof;    // one witness derivation
  TermP cps_term;  // derivational term before lexical substitution
};

// Groups sentence tokens into lexical units by longest match against the
// lexicon, builds the structural product antecedent (right-branching or per
// bracket spec), enumerates proofs of <antecedent> |- goal, compiles and
// lexicalizes each, and returns the alpha-distinct normal readings in
// deterministic order. Throws on unknown words or when nothing derives.
std::vector<Reading> readings(const std::vector<std::string>& tokens, const FormulaP& goal,
                              const Lexicon& lex, const ReadingsOptions& opt);

// beta-normal form of (t \p.p); t must have the sentence-computation type
// (t -> t) -> t under the lexicon's atom map.
TermP evaluate(const TermP& t, const Lexicon& lex);

std::vector<std::string> split_tokens(const std::string& sentence);

}  // namespace lg

#endif
