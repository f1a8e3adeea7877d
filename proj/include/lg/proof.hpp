#ifndef LG_PROOF_HPP
#define LG_PROOF_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lg/structure.hpp"

namespace lg {

struct ProofError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rule applications. Focus is the derived activation of a displayed labeled
// formula (an axiom-cut); AxLink is the atomic closure of x:p |- a':p.
enum class RK {
  Ax,          // x:A |- [A]
  CoAx,        // [A] |- a':A
  AxLink,      // x:p |- a':p, atoms only
  Cut,         // X |- [A]  and  [A] |- Y  gives  X |- Y
  Mu,          // X |- [A]  from  X |- a':A
  MuTilde,     // [A] |- Y  from  x:A |- Y
  Focus,       // x:A |- Y  from  [A] |- Y   (or X |- a':A  from  X |- [A])
  Structural,  // display or distributivity step
  Logical,     // connective rule on the active formula
};

// Logical rule identity: connective + side. Side L acts on an active input
// formula, side R on an active output formula.
struct RuleApp {
  RK kind;
  std::string name;      // Structural: rule id; Mu/MuTilde/Focus: label
  bool left = false;     // Logical: side L; Focus: input-side activation
  FKind conn{};          // Logical
  FormulaP cut_formula;  // Cut
};

std::string rule_name(const RuleApp& r);

struct Proof;
using ProofP = std::shared_ptr<const Proof>;

struct Proof {
  Sequent conclusion;
  RuleApp rule;
  std::vector<ProofP> premises;
};

ProofP mk_proof(Sequent conclusion, RuleApp rule, std::vector<ProofP> premises = {});

// -------- backward rule instances --------

// A backward step: the rule applied at the conclusion plus its premises.
struct BackStep {
  RuleApp rule;
  std::vector<Sequent> premises;
};

// Fresh-label source; x1,x2,.. and a1,a2,.. in rule-application order.
struct LabelGen {
  int nv = 0, nc = 0;
  std::string var() { return "x" + std::to_string(++nv); }
  std::string covar() { return "a" + std::to_string(++nc); }
};

// Advances the counters past every numeric label suffix in s, so labels
// generated next cannot collide with labels already present.
void bump_gen_past(const Sequent& s, LabelGen& gen);

// The logical rule decomposing the active formula of `s`, if its shape
// conditions are met. Fresh labels are drawn from `gen`.
std::optional<BackStep> logical_backward(const Sequent& s, LabelGen& gen);

// Ax/CoAx closure at an atomic active formula against the matching leaf.
std::optional<RuleApp> closure_rule(const Sequent& s);

// -------- derived node constructors --------

ProofP ax(const std::string& label, const FormulaP& a);
ProofP co_ax(const FormulaP& a, const std::string& label);
ProofP ax_link(const std::string& var, const std::string& covar, const FormulaP& atom);

// -------- replay / composition / reduction --------

// True iff every node instance-matches its rule schema (polarities, labels,
// freshness included).
bool replay(const ProofP& p);
bool replay(const ProofP& p, std::string* why);

// Cut composition; relabels the right proof if labels collide. Throws on
// formula mismatch or wrong sequent kinds.
ProofP cut(const ProofP& left, const ProofP& right);

// Reduces a root redex: a principal cut on one of the four negations, a
// mu/mu~ cut (by substitution), or Cut(Ax,CoAx) on an atom. Throws
// ProofError("NotARedex: ...") otherwise.
ProofP reduce_principal_cut(const ProofP& p);

// Renames labels throughout a proof (sequents and rule payloads).
ProofP rename_labels(const ProofP& p, const std::map<std::string, std::string>& m);
std::set<std::string> proof_labels(const ProofP& p);

// Indented text rendering: one "rule: sequent" line per node.
std::string show(const ProofP& p);

}  // namespace lg

#endif
