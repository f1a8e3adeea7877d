#ifndef LG_PROVER_HPP
#define LG_PROVER_HPP

#include <optional>

#include "lg/proof.hpp"

namespace lg {

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SearchStats {
  size_t nodes = 0;  // distinct canonicalized states expanded
};

// Embeds the arrow sequent A -> B as x1:A |- [B].
Sequent embed_arrow(const FormulaP& a, const FormulaP& b);

// Backward focused search. The verdict is exhaustive: the finite space of
// label-normalized sequents reachable by focused moves is closed and marked
// by a least fixed point. max_steps = 0 means no explicit bound; a nonzero
// bound below exhaustion raises ResourceLimit.
std::optional<ProofP> prove(const Sequent& goal, const RuleConfig& cfg, size_t max_steps = 0,
                            SearchStats* stats = nullptr);
std::optional<ProofP> prove(const std::string& arrow, const RuleConfig& cfg, size_t max_steps = 0);

// Up to `limit` distinct cycle-free proofs in deterministic order
// (closures, then the logical rule, then activations, defocusing and
// structural moves; rule-id tiebreak).
std::vector<ProofP> enumerate_proofs(const Sequent& goal, const RuleConfig& cfg, size_t limit,
                                     size_t max_steps = 0, SearchStats* stats = nullptr);
std::vector<ProofP> enumerate_proofs(const std::string& arrow, const RuleConfig& cfg, size_t limit,
                                     size_t max_steps = 0);

}  // namespace lg

#endif
