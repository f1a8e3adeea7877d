#ifndef LG_CPS_HPP
#define LG_CPS_HPP

#include "lg/proof.hpp"
#include "lg/term.hpp"

namespace lg {

struct TypedTerm {
  TermP term;
  TypeP type;
  std::map<std::string, TypeP> free_env;  // passive labels of the conclusion
};

// r for X |- Y, |A|'' for X |- A, |A|' for A |- Y.
TypeP sequent_target_type(const Sequent& s);

// Typing environment of a sequent's passive leaves: x -> |A|, a' -> |A|'.
std::map<std::string, TypeP> sequent_env(const Sequent& s);

// Compiles a proof rule by rule. Structural nodes leave the term of their
// premise unchanged; logical Prod/Coprod nodes raise UnsupportedRule
// (a ProofError). By default the result is beta-normalized.
TypedTerm cps_proof(const ProofP& p, bool normalize = true);

// The raw rule-by-rule term, no normalization.
TermP cps_proof_raw(const ProofP& p);

}  // namespace lg

#endif
