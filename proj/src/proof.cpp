#include "lg/proof.hpp"

#include <cctype>
#include <cstdlib>
#include <functional>
#include <map>

namespace lg {

ProofP mk_proof(Sequent conclusion, RuleApp rule, std::vector<ProofP> premises) {
  auto p = std::make_shared<Proof>();
  p->conclusion = std::move(conclusion);
  p->rule = std::move(rule);
  p->premises = std::move(premises);
  return p;
}

static const char* conn_tok(FKind k) {
  switch (k) {
    case FKind::Prod: return "*";
    case FKind::Over: return "/";
    case FKind::Under: return "\\";
    case FKind::Coprod: return "+";
    case FKind::RDiff: return "(/)";
    case FKind::LDiff: return "(\\)";
    case FKind::GalR: return "^0.";
    case FKind::GalL: return ".^0";
    case FKind::DGalR: return "^1.";
    case FKind::DGalL: return ".^1";
    default: return "?";
  }
}

std::string rule_name(const RuleApp& r) {
  switch (r.kind) {
    case RK::Ax: return "ax";
    case RK::CoAx: return "co-ax";
    case RK::AxLink: return "ax-link";
    case RK::Cut: return "cut";
    case RK::Mu: return "mu " + r.name;
    case RK::MuTilde: return "mu~ " + r.name;
    case RK::Focus: return "focus " + r.name;
    case RK::Structural: return r.name;
    case RK::Logical: return std::string(conn_tok(r.conn)) + (r.left ? "L" : "R");
  }
  return "?";
}

std::string show(const ProofP& p) {
  std::string out;
  std::function<void(const ProofP&, int)> rec = [&](const ProofP& q, int depth) {
    out += std::string(static_cast<size_t>(depth) * 2, ' ');
    out += rule_name(q->rule) + ": " + show(q->conclusion) + "\n";
    for (auto& pr : q->premises) rec(pr, depth + 1);
  };
  rec(p, 0);
  return out;
}

// -------- backward logical instances --------

void bump_gen_past(const Sequent& s, LabelGen& gen) {
  for (auto& [name, co] : sequent_labels(s)) {
    size_t i = name.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(name[i - 1]))) i--;
    if (i == name.size()) continue;
    int v = atoi(name.c_str() + i);
    gen.nv = std::max(gen.nv, v);
    gen.nc = std::max(gen.nc, v);
  }
}

std::optional<RuleApp> closure_rule(const Sequent& s) {
  if (!s.active || s.active->kind != FKind::Atom) return std::nullopt;
  if (s.active_out()) {
    if (s.left->kind == SKind::LeafIn && formula_eq(s.left->formula, s.active))
      return RuleApp{RK::Ax, "", false, {}, nullptr};
  } else {
    if (s.right->kind == SKind::LeafOut && formula_eq(s.right->formula, s.active))
      return RuleApp{RK::CoAx, "", false, {}, nullptr};
  }
  return std::nullopt;
}

std::optional<BackStep> logical_backward(const Sequent& s, LabelGen& gen) {
  if (!s.active) return std::nullopt;
  const FormulaP& F = s.active;
  auto logical = [&](FKind c, bool left) { return RuleApp{RK::Logical, "", left, c, nullptr}; };

  if (s.active_out()) {
    const StructureP& X = s.left;
    switch (F->kind) {
      case FKind::Under: {  // \R: premise X |- (x:A) .\. (b':B)
        auto x = gen.var();
        auto b = gen.covar();
        Sequent prem = Sequent::make_passive(
            X, s_node(SKind::SUnder, s_leaf_in(x, F->l), s_leaf_out(b, F->r)));
        return BackStep{logical(FKind::Under, false), {prem}};
      }
      case FKind::Over: {  // /R: premise X |- (b':C) ./. (x:D)
        auto b = gen.covar();
        auto x = gen.var();
        Sequent prem = Sequent::make_passive(
            X, s_node(SKind::SOver, s_leaf_out(b, F->l), s_leaf_in(x, F->r)));
        return BackStep{logical(FKind::Over, false), {prem}};
      }
      case FKind::RDiff: {  // (/)R: X = X1 .(/). Y1; premises X1 |- [A], [B] |- Y1
        if (X->kind != SKind::SRDiff) return std::nullopt;
        return BackStep{logical(FKind::RDiff, false),
                        {Sequent::make_active_out(X->a, F->l), Sequent::make_active_in(F->r, X->b)}};
      }
      case FKind::LDiff: {  // (\)R: X = Y1 .(\). X1; premises X1 |- [r], [l] |- Y1
        if (X->kind != SKind::SLDiff) return std::nullopt;
        return BackStep{logical(FKind::LDiff, false),
                        {Sequent::make_active_out(X->b, F->r), Sequent::make_active_in(F->l, X->a)}};
      }
      case FKind::DGalR: {  // ^1.R: X = Y1 ^1.; premise [A] |- Y1
        if (X->kind != SKind::SDGalR) return std::nullopt;
        return BackStep{logical(FKind::DGalR, false), {Sequent::make_active_in(F->l, X->a)}};
      }
      case FKind::DGalL: {  // .^1R: X = .^1 Y1; premise [A] |- Y1
        if (X->kind != SKind::SDGalL) return std::nullopt;
        return BackStep{logical(FKind::DGalL, false), {Sequent::make_active_in(F->l, X->a)}};
      }
      case FKind::GalR: {  // ^0.R: premise X |- (x:A) ^0.
        auto x = gen.var();
        Sequent prem = Sequent::make_passive(X, s_node(SKind::SGalR, s_leaf_in(x, F->l)));
        return BackStep{logical(FKind::GalR, false), {prem}};
      }
      case FKind::GalL: {  // .^0R: premise X |- .^0 (x:A)
        auto x = gen.var();
        Sequent prem = Sequent::make_passive(X, s_node(SKind::SGalL, s_leaf_in(x, F->l)));
        return BackStep{logical(FKind::GalL, false), {prem}};
      }
      case FKind::Prod: {  // *R: X = X1 .*. X2; premises X1 |- [A], X2 |- [B]
        if (X->kind != SKind::SProd) return std::nullopt;
        return BackStep{logical(FKind::Prod, false),
                        {Sequent::make_active_out(X->a, F->l), Sequent::make_active_out(X->b, F->r)}};
      }
      case FKind::Coprod: {  // +R: premise X |- (a':A) .+. (b':B)
        auto a = gen.covar();
        auto b = gen.covar();
        Sequent prem = Sequent::make_passive(
            X, s_node(SKind::SCoprod, s_leaf_out(a, F->l), s_leaf_out(b, F->r)));
        return BackStep{logical(FKind::Coprod, false), {prem}};
      }
      default:
        return std::nullopt;
    }
  }

  const StructureP& Y = s.right;
  switch (F->kind) {
    case FKind::Under: {  // \L: Y = X1 .\. Y1; premises X1 |- [A], [B] |- Y1
      if (Y->kind != SKind::SUnder) return std::nullopt;
      return BackStep{logical(FKind::Under, true),
                      {Sequent::make_active_out(Y->a, F->l), Sequent::make_active_in(F->r, Y->b)}};
    }
    case FKind::Over: {  // /L: Y = Y1 ./. X1; premises X1 |- [D], [C] |- Y1
      if (Y->kind != SKind::SOver) return std::nullopt;
      return BackStep{logical(FKind::Over, true),
                      {Sequent::make_active_out(Y->b, F->r), Sequent::make_active_in(F->l, Y->a)}};
    }
    case FKind::RDiff: {  // (/)L: premise (x:A) .(/). (b':B) |- Y
      auto x = gen.var();
      auto b = gen.covar();
      Sequent prem = Sequent::make_passive(
          s_node(SKind::SRDiff, s_leaf_in(x, F->l), s_leaf_out(b, F->r)), Y);
      return BackStep{logical(FKind::RDiff, true), {prem}};
    }
    case FKind::LDiff: {  // (\)L: premise (b':l) .(\). (x:r) |- Y
      auto b = gen.covar();
      auto x = gen.var();
      Sequent prem = Sequent::make_passive(
          s_node(SKind::SLDiff, s_leaf_out(b, F->l), s_leaf_in(x, F->r)), Y);
      return BackStep{logical(FKind::LDiff, true), {prem}};
    }
    case FKind::DGalR: {  // ^1.L: premise (a':A) ^1. |- Y
      auto a = gen.covar();
      Sequent prem = Sequent::make_passive(s_node(SKind::SDGalR, s_leaf_out(a, F->l)), Y);
      return BackStep{logical(FKind::DGalR, true), {prem}};
    }
    case FKind::DGalL: {  // .^1L: premise .^1 (a':A) |- Y
      auto a = gen.covar();
      Sequent prem = Sequent::make_passive(s_node(SKind::SDGalL, s_leaf_out(a, F->l)), Y);
      return BackStep{logical(FKind::DGalL, true), {prem}};
    }
    case FKind::GalR: {  // ^0.L: Y = X1 ^0.; premise X1 |- [A]
      if (Y->kind != SKind::SGalR) return std::nullopt;
      return BackStep{logical(FKind::GalR, true), {Sequent::make_active_out(Y->a, F->l)}};
    }
    case FKind::GalL: {  // .^0L: Y = .^0 X1; premise X1 |- [A]
      if (Y->kind != SKind::SGalL) return std::nullopt;
      return BackStep{logical(FKind::GalL, true), {Sequent::make_active_out(Y->a, F->l)}};
    }
    case FKind::Prod: {  // *L: premise (x:A) .*. (y:B) |- Y
      auto x = gen.var();
      auto y = gen.var();
      Sequent prem = Sequent::make_passive(
          s_node(SKind::SProd, s_leaf_in(x, F->l), s_leaf_in(y, F->r)), Y);
      return BackStep{logical(FKind::Prod, true), {prem}};
    }
    case FKind::Coprod: {  // +L: Y = Y1 .+. Y2; premises [A] |- Y1, [B] |- Y2
      if (Y->kind != SKind::SCoprod) return std::nullopt;
      return BackStep{logical(FKind::Coprod, true),
                      {Sequent::make_active_in(F->l, Y->a), Sequent::make_active_in(F->r, Y->b)}};
    }
    default:
      return std::nullopt;
  }
}

// -------- derived constructors --------

ProofP ax(const std::string& label, const FormulaP& a) {
  return mk_proof(Sequent::make_active_out(s_leaf_in(label, a), a), RuleApp{RK::Ax, "", false, {}, nullptr});
}

ProofP co_ax(const FormulaP& a, const std::string& label) {
  return mk_proof(Sequent::make_active_in(a, s_leaf_out(label, a)), RuleApp{RK::CoAx, "", false, {}, nullptr});
}

ProofP ax_link(const std::string& var, const std::string& covar, const FormulaP& atom) {
  return mk_proof(Sequent::make_passive(s_leaf_in(var, atom), s_leaf_out(covar, atom)),
                  RuleApp{RK::AxLink, "", false, {}, nullptr});
}

// -------- replay --------

namespace {

bool structure_identical(const StructureP& a, const StructureP& b) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  if (a->kind == SKind::LeafIn || a->kind == SKind::LeafOut)
    return a->label == b->label && formula_eq(a->formula, b->formula);
  if (a->b || b->b) {
    if (!a->b || !b->b) return false;
    return structure_identical(a->a, b->a) && structure_identical(a->b, b->b);
  }
  return structure_identical(a->a, b->a);
}

bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

bool replay_node(const ProofP& p, std::string* why);

bool replay_rec(const ProofP& p, std::string* why) {
  if (!replay_node(p, why)) return false;
  for (auto& q : p->premises)
    if (!replay_rec(q, why)) return false;
  return true;
}

bool check_sequent_sane(const Sequent& s, std::string* why) {
  if (s.left && !well_polarized(s.left)) return fail(why, "antecedent violates polarity discipline");
  if (s.right && !well_polarized(s.right)) return fail(why, "succedent violates polarity discipline");
  if (s.left && !input_kind(s.left->kind)) return fail(why, "antecedent is not an input structure");
  if (s.right && input_kind(s.right->kind)) return fail(why, "succedent is not an output structure");
  if (!labels_distinct(s)) return fail(why, "duplicate labels in sequent");
  return true;
}

bool replay_node(const ProofP& p, std::string* why) {
  const Sequent& c = p->conclusion;
  if (!check_sequent_sane(c, why)) return false;
  const auto& ps = p->premises;
  auto arity = [&](size_t n) {
    if (ps.size() != n) return fail(why, rule_name(p->rule) + ": expected " + std::to_string(n) + " premises");
    return true;
  };

  switch (p->rule.kind) {
    case RK::Ax:
      if (!arity(0)) return false;
      if (!c.active_out() || c.left->kind != SKind::LeafIn || !formula_eq(c.left->formula, c.active))
        return fail(why, "ax: conclusion must be x:A |- [A]");
      return true;
    case RK::CoAx:
      if (!arity(0)) return false;
      if (!c.active_in() || c.right->kind != SKind::LeafOut || !formula_eq(c.right->formula, c.active))
        return fail(why, "co-ax: conclusion must be [A] |- a':A");
      return true;
    case RK::AxLink:
      if (!arity(0)) return false;
      if (!c.passive() || c.left->kind != SKind::LeafIn || c.right->kind != SKind::LeafOut)
        return fail(why, "ax-link: conclusion must be x:p |- a':p");
      if (c.left->formula->kind != FKind::Atom || !formula_eq(c.left->formula, c.right->formula))
        return fail(why, "ax-link: needs matching atomic formulas");
      return true;
    case RK::Cut: {
      if (!arity(2)) return false;
      const Sequent& l = ps[0]->conclusion;
      const Sequent& r = ps[1]->conclusion;
      if (!c.passive() || !l.active_out() || !r.active_in()) return fail(why, "cut: wrong sequent kinds");
      if (!p->rule.cut_formula || !formula_eq(l.active, p->rule.cut_formula) ||
          !formula_eq(r.active, p->rule.cut_formula))
        return fail(why, "cut: formula mismatch");
      if (!structure_identical(c.left, l.left) || !structure_identical(c.right, r.right))
        return fail(why, "cut: contexts do not match");
      return true;
    }
    case RK::Mu: {
      if (!arity(1)) return false;
      const Sequent& q = ps[0]->conclusion;
      if (!c.active_out() || !q.passive()) return fail(why, "mu: wrong sequent kinds");
      if (q.right->kind != SKind::LeafOut || q.right->label != p->rule.name ||
          !formula_eq(q.right->formula, c.active))
        return fail(why, "mu: premise must label the active formula");
      if (!structure_identical(c.left, q.left)) return fail(why, "mu: context changed");
      return true;
    }
    case RK::MuTilde: {
      if (!arity(1)) return false;
      const Sequent& q = ps[0]->conclusion;
      if (!c.active_in() || !q.passive()) return fail(why, "mu~: wrong sequent kinds");
      if (q.left->kind != SKind::LeafIn || q.left->label != p->rule.name ||
          !formula_eq(q.left->formula, c.active))
        return fail(why, "mu~: premise must label the active formula");
      if (!structure_identical(c.right, q.right)) return fail(why, "mu~: context changed");
      return true;
    }
    case RK::Focus: {
      if (!arity(1)) return false;
      const Sequent& q = ps[0]->conclusion;
      if (!c.passive()) return fail(why, "focus: conclusion must be passive");
      if (p->rule.left) {
        if (!q.active_in() || c.left->kind != SKind::LeafIn || c.left->label != p->rule.name ||
            !formula_eq(c.left->formula, q.active) || !structure_identical(c.right, q.right))
          return fail(why, "focus: input activation mismatch");
      } else {
        if (!q.active_out() || c.right->kind != SKind::LeafOut || c.right->label != p->rule.name ||
            !formula_eq(c.right->formula, q.active) || !structure_identical(c.left, q.left))
          return fail(why, "focus: output activation mismatch");
      }
      return true;
    }
    case RK::Structural: {
      if (!arity(1)) return false;
      const Sequent& q = ps[0]->conclusion;
      RuleConfig all;
      all.distr_inverse = true;
      all.allow_both_groups = true;
      for (auto& m : display_moves(q))
        if (m.rule == p->rule.name && sequent_eq(m.result, c)) return true;
      for (auto& m : distr_moves(q, all))
        if (m.rule == p->rule.name && sequent_eq(m.result, c)) return true;
      return fail(why, "structural: " + p->rule.name + " does not map premise to conclusion");
    }
    case RK::Logical: {
      // regenerate the schema and match modulo the premise's label choices
      LabelGen gen;
      auto step = logical_backward(c, gen);
      if (!step) return fail(why, "logical: rule not applicable to conclusion");
      if (step->rule.conn != p->rule.conn || step->rule.left != p->rule.left)
        return fail(why, "logical: wrong rule for active formula");
      if (!arity(step->premises.size())) return false;
      // premises with fresh labels: rename expected labels to the actual ones
      for (size_t i = 0; i < ps.size(); i++) {
        const Sequent& actual = ps[i]->conclusion;
        const Sequent& expect = step->premises[i];
        if (actual.passive() != expect.passive() || actual.active_in() != expect.active_in())
          return fail(why, "logical: premise kind mismatch");
        if (!check_sequent_sane(actual, why)) return false;
        // structural comparison ignoring the labels of freshly introduced leaves
        std::function<bool(const StructureP&, const StructureP&, bool)> match =
            [&](const StructureP& a, const StructureP& e, bool fresh_zone) -> bool {
          if (!a || !e) return a == e;
          if (a->kind != e->kind) return false;
          if (a->kind == SKind::LeafIn || a->kind == SKind::LeafOut) {
            if (!formula_eq(a->formula, e->formula)) return false;
            // labels introduced by the rule (gen names xN/aN) may differ
            bool e_is_fresh = fresh_zone && (e->label[0] == 'x' || e->label[0] == 'a');
            return e_is_fresh || a->label == e->label;
          }
          bool sub_fresh = fresh_zone;
          if (a->b) return match(a->a, e->a, sub_fresh) && match(a->b, e->b, sub_fresh);
          return match(a->a, e->a, sub_fresh);
        };
        // fresh labels only appear in the structural image of the active formula;
        // identify it as the side that differs from the conclusion's passive side
        bool ok = true;
        if (expect.active) {
          ok = formula_eq(actual.active, expect.active);
          const StructureP& as = expect.active_in() ? actual.right : actual.left;
          const StructureP& es = expect.active_in() ? expect.right : expect.left;
          ok = ok && match(as, es, false);
        } else if (p->rule.left) {
          // L rules with a passive premise carry the succedent; the fresh
          // leaves sit in the structural image of the active formula
          ok = match(actual.right, expect.right, false) && match(actual.left, expect.left, true);
        } else {
          ok = match(actual.left, expect.left, false) && match(actual.right, expect.right, true);
        }
        if (!ok) return fail(why, "logical: premise does not match schema");
      }
      return true;
    }
  }
  return fail(why, "unknown rule");
}

}  // namespace

bool replay(const ProofP& p, std::string* why) { return replay_rec(p, why); }
bool replay(const ProofP& p) { return replay_rec(p, nullptr); }

// -------- label utilities --------

static StructureP rename_structure(const StructureP& s, const std::map<std::string, std::string>& m) {
  if (!s) return nullptr;
  if (s->kind == SKind::LeafIn || s->kind == SKind::LeafOut) {
    auto it = m.find(s->label);
    if (it == m.end()) return s;
    return s->kind == SKind::LeafIn ? s_leaf_in(it->second, s->formula) : s_leaf_out(it->second, s->formula);
  }
  return s_node(s->kind, rename_structure(s->a, m), rename_structure(s->b, m));
}

static Sequent rename_sequent(const Sequent& s, const std::map<std::string, std::string>& m) {
  Sequent t = s;
  t.left = rename_structure(s.left, m);
  t.right = rename_structure(s.right, m);
  return t;
}

ProofP rename_labels(const ProofP& p, const std::map<std::string, std::string>& m) {
  RuleApp r = p->rule;
  if (r.kind == RK::Mu || r.kind == RK::MuTilde || r.kind == RK::Focus) {
    auto it = m.find(r.name);
    if (it != m.end()) r.name = it->second;
  }
  std::vector<ProofP> prems;
  prems.reserve(p->premises.size());
  for (auto& q : p->premises) prems.push_back(rename_labels(q, m));
  return mk_proof(rename_sequent(p->conclusion, m), std::move(r), std::move(prems));
}

std::set<std::string> proof_labels(const ProofP& p) {
  std::set<std::string> out;
  std::function<void(const ProofP&)> rec = [&](const ProofP& q) {
    for (auto& [n, co] : sequent_labels(q->conclusion)) out.insert(n);
    if (q->rule.kind == RK::Mu || q->rule.kind == RK::MuTilde || q->rule.kind == RK::Focus)
      out.insert(q->rule.name);
    for (auto& r : q->premises) rec(r);
  };
  rec(p);
  return out;
}

// -------- cut --------

ProofP cut(const ProofP& left, const ProofP& right) {
  const Sequent& l = left->conclusion;
  const Sequent& r = right->conclusion;
  if (!l.active_out()) throw ProofError("cut: left proof must conclude X |- [A]");
  if (!r.active_in()) throw ProofError("cut: right proof must conclude [A] |- Y");
  if (!formula_eq(l.active, r.active))
    throw ProofError("cut: formula mismatch: " + show(l.active) + " vs " + show(r.active));
  auto left_labels = proof_labels(left);
  auto right_labels = proof_labels(right);
  std::map<std::string, std::string> ren;
  for (auto& n : right_labels) {
    if (!left_labels.count(n)) continue;
    int k = 1;
    std::string cand;
    do {
      cand = n + "_" + std::to_string(++k);
    } while (left_labels.count(cand) || right_labels.count(cand));
    ren[n] = cand;
  }
  ProofP rr = ren.empty() ? right : rename_labels(right, ren);
  Sequent conc = Sequent::make_passive(l.left, rr->conclusion.right);
  return mk_proof(std::move(conc), RuleApp{RK::Cut, "", false, {}, l.active}, {left, rr});
}

// -------- substitution of (co)variables into derivations --------

namespace {

bool sequent_has_label(const Sequent& s, const std::string& n) {
  for (auto& [l, co] : sequent_labels(s))
    if (l == n) return true;
  return false;
}

StructureP replace_leaf(const StructureP& s, const std::string& label, const StructureP& repl) {
  if (!s) return nullptr;
  if ((s->kind == SKind::LeafIn || s->kind == SKind::LeafOut) && s->label == label) return repl;
  if (s->kind == SKind::LeafIn || s->kind == SKind::LeafOut) return s;
  return s_node(s->kind, replace_leaf(s->a, label, repl), replace_leaf(s->b, label, repl));
}

Sequent replace_in_sequent(const Sequent& s, const std::string& label, const StructureP& repl) {
  Sequent t = s;
  t.left = replace_leaf(s.left, label, repl);
  t.right = replace_leaf(s.right, label, repl);
  return t;
}

// substitute proof M : X_M |- [A] for the input leaf x:A throughout S
ProofP subst_var(const ProofP& S, const std::string& x, const ProofP& M);
// substitute proof K : [A] |- Y_K for the output leaf a':A throughout S
ProofP subst_covar(const ProofP& S, const std::string& al, const ProofP& K);

ProofP subst_var(const ProofP& S, const std::string& x, const ProofP& M) {
  if (!sequent_has_label(S->conclusion, x)) return S;
  const StructureP& XM = M->conclusion.left;
  const FormulaP& A = M->conclusion.active;
  // consuming nodes
  if (S->rule.kind == RK::Ax && S->conclusion.left->kind == SKind::LeafIn &&
      S->conclusion.left->label == x)
    return M;
  if (S->rule.kind == RK::Focus && S->rule.left && S->rule.name == x) {
    return mk_proof(replace_in_sequent(S->conclusion, x, XM), RuleApp{RK::Cut, "", false, {}, A},
                    {M, S->premises[0]});
  }
  if (S->rule.kind == RK::AxLink && S->conclusion.left->label == x) {
    // x:p |- b':p  becomes  X_M |- b':p, the activation of b'
    const auto& out_leaf = S->conclusion.right;
    return mk_proof(Sequent::make_passive(XM, out_leaf),
                    RuleApp{RK::Focus, out_leaf->label, false, {}, nullptr}, {M});
  }
  std::vector<ProofP> prems;
  prems.reserve(S->premises.size());
  for (auto& q : S->premises) prems.push_back(subst_var(q, x, M));
  return mk_proof(replace_in_sequent(S->conclusion, x, XM), S->rule, std::move(prems));
}

ProofP subst_covar(const ProofP& S, const std::string& al, const ProofP& K) {
  if (!sequent_has_label(S->conclusion, al)) return S;
  const StructureP& YK = K->conclusion.right;
  const FormulaP& A = K->conclusion.active;
  if (S->rule.kind == RK::CoAx && S->conclusion.right->kind == SKind::LeafOut &&
      S->conclusion.right->label == al)
    return K;
  if (S->rule.kind == RK::Focus && !S->rule.left && S->rule.name == al) {
    return mk_proof(replace_in_sequent(S->conclusion, al, YK), RuleApp{RK::Cut, "", false, {}, A},
                    {S->premises[0], K});
  }
  if (S->rule.kind == RK::AxLink && S->conclusion.right->label == al) {
    // x:p |- a':p  becomes  x:p |- Y_K, the activation of x
    const auto& in_leaf = S->conclusion.left;
    return mk_proof(Sequent::make_passive(in_leaf, YK),
                    RuleApp{RK::Focus, in_leaf->label, true, {}, nullptr}, {K});
  }
  std::vector<ProofP> prems;
  prems.reserve(S->premises.size());
  for (auto& q : S->premises) prems.push_back(subst_covar(q, al, K));
  return mk_proof(replace_in_sequent(S->conclusion, al, YK), S->rule, std::move(prems));
}

ProofP structural_node(const std::string& rule, Sequent conc, ProofP prem) {
  return mk_proof(std::move(conc), RuleApp{RK::Structural, rule, false, {}, nullptr}, {std::move(prem)});
}

}  // namespace

ProofP reduce_principal_cut(const ProofP& p) {
  if (p->rule.kind != RK::Cut) throw ProofError("NotARedex: root is not a cut");
  const ProofP& L = p->premises[0];
  const ProofP& R = p->premises[1];
  const FormulaP& A = p->rule.cut_formula;

  // principal cut on a negation: both sides introduce the cut formula
  if (is_unary(A->kind) && L->rule.kind == RK::Logical && R->rule.kind == RK::Logical &&
      L->rule.conn == A->kind && !L->rule.left && R->rule.conn == A->kind && R->rule.left) {
    const FormulaP& B = A->l;
    if (A->kind == FKind::GalL || A->kind == FKind::GalR) {
      // left:  X |- [0B]      from  S: X |- .^0(x:B)   (resp. (x:B)^0.)
      // right: [0B] |- .^0 Y  from  M: Y |- [B]
      const ProofP& Sp = L->premises[0];
      const ProofP& Mp = R->premises[0];
      const StructureP& X = L->conclusion.left;
      const StructureP& Y = Mp->conclusion.left;
      const StructureP& leaf = Sp->conclusion.right->a;
      // gc step: x:B |- X^0. (resp .^0 X) from S
      SKind inner = A->kind == FKind::GalL ? SKind::SGalR : SKind::SGalL;
      ProofP gc1 = structural_node("gc", Sequent::make_passive(leaf, s_node(inner, X)), Sp);
      ProofP mt = mk_proof(Sequent::make_active_in(B, s_node(inner, X)),
                           RuleApp{RK::MuTilde, leaf->label, false, {}, nullptr}, {gc1});
      ProofP c = mk_proof(Sequent::make_passive(Y, s_node(inner, X)),
                          RuleApp{RK::Cut, "", false, {}, B}, {Mp, mt});
      SKind outer = A->kind == FKind::GalL ? SKind::SGalL : SKind::SGalR;
      ProofP gc2 = structural_node("gc", Sequent::make_passive(X, s_node(outer, Y)), c);
      if (!sequent_eq(gc2->conclusion, p->conclusion))
        throw ProofError("NotARedex: principal cut shape mismatch");
      return gc2;
    }
    // dual galois: A = B^1 or ^1 B
    // left:  Y0^1. |- [B^1]  from  K: [B] |- Y0
    // right: [B^1] |- Y      from  S: (a':B)^1. |- Y
    const ProofP& Kp = L->premises[0];
    const ProofP& Sp = R->premises[0];
    const StructureP& Y0 = Kp->conclusion.right;
    const StructureP& Y = R->premises[0]->conclusion.right;
    const StructureP& leaf = Sp->conclusion.left->a;
    SKind inner = A->kind == FKind::DGalR ? SKind::SDGalL : SKind::SDGalR;
    ProofP dgc1 = structural_node("dgc", Sequent::make_passive(s_node(inner, Y), leaf), Sp);
    ProofP mu = mk_proof(Sequent::make_active_out(s_node(inner, Y), A->l),
                         RuleApp{RK::Mu, leaf->label, false, {}, nullptr}, {dgc1});
    ProofP c = mk_proof(Sequent::make_passive(s_node(inner, Y), Y0),
                        RuleApp{RK::Cut, "", false, {}, A->l}, {mu, Kp});
    SKind outer = A->kind == FKind::DGalR ? SKind::SDGalR : SKind::SDGalL;
    ProofP dgc2 = structural_node("dgc", Sequent::make_passive(s_node(outer, Y0), Y), c);
    if (!sequent_eq(dgc2->conclusion, p->conclusion))
      throw ProofError("NotARedex: principal cut shape mismatch");
    return dgc2;
  }

  // mu cut: Cut(Mu(a){S}, K) -> S[a := K]
  if (L->rule.kind == RK::Mu) return subst_covar(L->premises[0], L->rule.name, R);
  // mu~ cut: Cut(M, MuTilde(x){S}) -> S[x := M]
  if (R->rule.kind == RK::MuTilde) return subst_var(R->premises[0], R->rule.name, L);
  // atomic ax against co-ax
  if (L->rule.kind == RK::Ax && R->rule.kind == RK::CoAx && A->kind == FKind::Atom)
    return ax_link(L->conclusion.left->label, R->conclusion.right->label, A);
  // ax against an arbitrary right proof: the activation of that leaf
  if (L->rule.kind == RK::Ax)
    return mk_proof(p->conclusion, RuleApp{RK::Focus, L->conclusion.left->label, true, {}, nullptr}, {R});
  if (R->rule.kind == RK::CoAx)
    return mk_proof(p->conclusion, RuleApp{RK::Focus, R->conclusion.right->label, false, {}, nullptr}, {L});
  throw ProofError("NotARedex: no documented reduction applies");
}

}  // namespace lg
