#include "lg/readings.hpp"

#include <sstream>

namespace lg {

std::vector<std::string> split_tokens(const std::string& sentence) {
  std::istringstream in(sentence);
  std::vector<std::string> out;
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

namespace {

// lexical units: longest token run matching a lexicon key
std::vector<std::string> group_units(const std::vector<std::string>& tokens, const Lexicon& lex) {
  std::vector<std::string> units;
  size_t i = 0;
  while (i < tokens.size()) {
    size_t best = 0;
    std::string best_key;
    std::string key;
    for (size_t j = i; j < tokens.size(); j++) {
      if (j > i) key += " ";
      key += tokens[j];
      if (lex.has_word(key)) {
        best = j - i + 1;
        best_key = key;
      }
    }
    if (best == 0) throw LexError("unknown word: " + tokens[i]);
    units.push_back(best_key);
    i += best;
  }
  return units;
}

struct BTree {
  int unit = -1;  // leaf
  std::unique_ptr<BTree> l, r;
};

std::unique_ptr<BTree> leaf(int u) {
  auto t = std::make_unique<BTree>();
  t->unit = u;
  return t;
}

std::unique_ptr<BTree> pair_node(std::unique_ptr<BTree> a, std::unique_ptr<BTree> b) {
  auto t = std::make_unique<BTree>();
  t->l = std::move(a);
  t->r = std::move(b);
  return t;
}

std::unique_ptr<BTree> fold_right(std::vector<std::unique_ptr<BTree>> items) {
  auto t = std::move(items.back());
  for (size_t i = items.size() - 1; i-- > 0;) t = pair_node(std::move(items[i]), std::move(t));
  return t;
}

// bracket spec: ( ... ) groups fold right-branching; a group whose tokens
// spell a single lexical unit is a leaf
struct BracketParser {
  std::vector<std::string> toks;
  size_t pos = 0;
  const std::vector<std::string>& units;  // unit key strings
  size_t unit_idx = 0;
  std::string pending;  // tokens consumed of the current unit

  BracketParser(const std::string& spec, const std::vector<std::string>& units) : units(units) {
    std::string cur;
    for (char c : spec) {
      if (c == '(' || c == ')') {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
        toks.push_back(std::string(1, c));
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        if (!cur.empty()) toks.push_back(cur), cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) toks.push_back(cur);
  }

  // consume one word token; returns a completed leaf or null if mid-unit
  std::unique_ptr<BTree> word(const std::string& w) {
    if (unit_idx >= units.size()) throw LexError("brackets: more words than the sentence has");
    pending = pending.empty() ? w : pending + " " + w;
    const std::string& target = units[unit_idx];
    if (pending == target) {
      pending.clear();
      return leaf(static_cast<int>(unit_idx++));
    }
    if (target.rfind(pending + " ", 0) == 0) return nullptr;  // still inside the unit
    throw LexError("brackets: '" + pending + "' does not match the sentence unit '" + target + "'");
  }

  std::unique_ptr<BTree> group() {
    std::vector<std::unique_ptr<BTree>> items;
    while (pos < toks.size() && toks[pos] != ")") {
      if (toks[pos] == "(") {
        pos++;
        auto g = group();
        if (pos >= toks.size() || toks[pos] != ")") throw LexError("brackets: missing ')'");
        pos++;
        items.push_back(std::move(g));
      } else {
        auto lf = word(toks[pos++]);
        if (lf) items.push_back(std::move(lf));
      }
    }
    if (!pending.empty())
      throw LexError("brackets: group boundary splits the lexical unit '" + units[unit_idx] + "'");
    if (items.empty()) throw LexError("brackets: empty group");
    if (items.size() == 1) return std::move(items[0]);
    return fold_right(std::move(items));
  }

  std::unique_ptr<BTree> parse() {
    auto t = group();
    if (pos != toks.size()) throw LexError("brackets: trailing input");
    if (unit_idx != units.size()) throw LexError("brackets: fewer words than the sentence has");
    return t;
  }
};

StructureP build_structure(const BTree& t, const std::vector<StructureP>& leaves) {
  if (t.unit >= 0) return leaves[static_cast<size_t>(t.unit)];
  return s_node(SKind::SProd, build_structure(*t.l, leaves), build_structure(*t.r, leaves));
}

}  // namespace

std::vector<Reading> readings(const std::vector<std::string>& tokens, const FormulaP& goal,
                              const Lexicon& lex, const ReadingsOptions& opt) {
  if (tokens.empty()) throw LexError("empty sentence");
  auto units = group_units(tokens, lex);

  std::unique_ptr<BTree> shape;
  if (opt.brackets.empty()) {
    std::vector<std::unique_ptr<BTree>> items;
    for (size_t i = 0; i < units.size(); i++) items.push_back(leaf(static_cast<int>(i)));
    shape = fold_right(std::move(items));
  } else {
    BracketParser bp(opt.brackets, units);
    shape = bp.parse();
  }

  // entry choices per unit, in declaration order
  std::vector<const std::vector<LexEntry>*> choices;
  for (auto& u : units) choices.push_back(&lex.entries.at(u));

  TypeP expected = lex_type(t_neg(t_neg(cps_type(goal))), lex.atom_map);
  std::vector<Reading> out;
  std::vector<size_t> pick(units.size(), 0);
  bool any_derivation = false;

  for (;;) {
    // build the goal sequent for this entry combination
    std::vector<StructureP> leaves;
    std::map<std::string, std::string> binding;
    for (size_t i = 0; i < units.size(); i++) {
      std::string label = "x" + std::to_string(i + 1);
      leaves.push_back(s_leaf_in(label, (*choices[i])[pick[i]].source_type));
      binding[label] = units[i];
    }
    Sequent sgoal = units.size() == 1
                        ? Sequent::make_active_out(leaves[0], goal)
                        : Sequent::make_active_out(build_structure(*shape, leaves), goal);

    auto proofs = enumerate_proofs(sgoal, opt.cfg, opt.proof_limit, opt.max_steps);
    if (!proofs.empty()) any_derivation = true;
    for (auto& p : proofs) {
      TypedTerm tt = cps_proof(p);
      // entries are resolved per leaf type, so the combination's own entry is used
      TermP lexed;
      try {
        lexed = lex_term(tt, lex, binding);
      } catch (const LexError&) {
        continue;  // a different combination covers this leaf typing
      }
      TermP norm = beta_normalize(lexed);
      typecheck_expect(norm, lex.const_env(), expected, "reading");
      bool dup = false;
      for (auto& r : out)
        if (alpha_eq(r.term, norm)) {
          dup = true;
          break;
        }
      if (!dup) out.push_back(Reading{norm, p, tt.term});
      if (out.size() >= opt.limit) return out;
    }

    // next entry combination
    size_t i = 0;
    for (; i < pick.size(); i++) {
      if (++pick[i] < choices[i]->size()) break;
      pick[i] = 0;
    }
    if (i == pick.size()) break;
  }

  if (out.empty() && !any_derivation)
    throw NoDerivation("no derivation for the sentence at goal " + show(goal));
  return out;
}

TermP evaluate(const TermP& t, const Lexicon& lex) {
  auto rt = lex.atom_map.find(kResponseAtom);
  if (rt == lex.atom_map.end()) throw TypeError("atom map lacks r");
  TypeP expected = t_arrow(t_arrow(rt->second, rt->second), rt->second);
  typecheck_expect(t, lex.const_env(), expected, "evaluate");
  return beta_normalize(t_app(t, t_abs("p", t_var("p"))));
}

}  // namespace lg
