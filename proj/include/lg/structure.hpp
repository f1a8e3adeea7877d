#ifndef LG_STRUCTURE_HPP
#define LG_STRUCTURE_HPP

#include <set>
#include <string>
#include <vector>

#include "lg/formula.hpp"

namespace lg {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural counterparts of the connectives, plus labeled passive leaves.
// Input structures: LeafIn | SProd | SRDiff | SLDiff | SDGalL | SDGalR.
// Output structures: LeafOut | SCoprod | SUnder | SOver | SGalR | SGalL.
enum class SKind {
  LeafIn,   // x:A
  LeafOut,  // a':A
  SProd,    // I .*. I
  SRDiff,   // I .(/). O
  SLDiff,   // O .(\). I
  SDGalL,   // .^1 O
  SDGalR,   // O ^1.
  SCoprod,  // O .+. O
  SUnder,   // I .\. O
  SOver,    // O ./. I
  SGalR,    // I ^0.
  SGalL,    // .^0 I
};

struct Structure;
using StructureP = std::shared_ptr<const Structure>;

struct Structure {
  SKind kind;
  std::string label;  // leaves
  FormulaP formula;   // leaves
  StructureP a, b;    // unary kinds use a
};

StructureP s_leaf_in(const std::string& label, FormulaP f);
StructureP s_leaf_out(const std::string& label, FormulaP f);
StructureP s_node(SKind k, StructureP a, StructureP b = nullptr);

// True iff structures of this kind are input structures.
bool input_kind(SKind k);
// Checks the polarity discipline of the grammar.
bool well_polarized(const StructureP& s);

// Exactly three kinds of sequent: X |- Y, X |- A, A |- Y.
struct Sequent {
  StructureP left;    // null iff active input
  StructureP right;   // null iff active output
  FormulaP active;    // null iff passive
  bool active_left = false;

  bool passive() const { return active == nullptr; }
  bool active_in() const { return active && active_left; }
  bool active_out() const { return active && !active_left; }

  static Sequent make_passive(StructureP x, StructureP y);
  static Sequent make_active_in(FormulaP a, StructureP y);
  static Sequent make_active_out(StructureP x, FormulaP a);
};

bool sequent_eq(const Sequent& a, const Sequent& b);  // syntactic, labels included

// Rendering with dotted structural connectives; covariable labels get a
// trailing tick. The active formula prints unlabeled in brackets.
std::string show(const StructureP& s);
std::string show(const Sequent& s);

// Label-normalized print (variables -> v1.., covariables -> c1.. in
// left-to-right order); the engine's state key.
std::string normalized_key(const Sequent& s);

// All labels, left to right; .second true for covariables.
std::vector<std::pair<std::string, bool>> sequent_labels(const Sequent& s);
bool labels_distinct(const Sequent& s);

// -------- rule configuration --------

struct RuleConfig {
  bool distr_binary = true;   // product/coproduct interaction
  bool distr_unary = true;    // generalization to the negations
  bool distr_inverse = false; // converses of the binary group
  bool allow_both_groups = false;

  void validate() const {
    if (distr_binary && distr_inverse && !allow_both_groups)
      throw ConfigError(
          "ConfigViolation: distr and distr-inv enabled together; pass --allow-both "
          "to accept that product/coproduct non-associativity and non-commutativity "
          "are no longer preserved");
  }
  bool both_groups() const { return distr_binary && distr_inverse; }
};

// -------- structural moves --------

struct Move {
  std::string rule;  // "rp", "drp", "gc", "dgc", "distr1".."distr4",
                     // "gdistr1".."gdistr12", "distr-inv1".."distr-inv4"
  Sequent result;
};

// One-step images under the invertible display postulates (rp, drp, gc,
// dgc). Empty for sequents with an active side or bare leaves.
std::vector<Move> display_moves(const Sequent& s);

// Reflexive-transitive closure of display_moves.
std::vector<Sequent> display_orbit(const Sequent& s);

// One-step images of the enabled distributivity rules, premise to
// conclusion. Not invertible.
std::vector<Move> distr_moves(const Sequent& s, const RuleConfig& cfg);

// Premises p with s among distr_moves(p); used by backward search.
std::vector<Move> distr_premises(const Sequent& s, const RuleConfig& cfg);

// Deterministic orbit representative: lexicographically least
// label-normalized print. Equal for display-equivalent sequents only.
Sequent canonical(const Sequent& s);
std::string canonical_key(const Sequent& s);

size_t count_formula_occurrences(const Sequent& s);

}  // namespace lg

#endif
