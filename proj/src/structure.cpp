#include "lg/structure.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace lg {

StructureP s_leaf_in(const std::string& label, FormulaP f) {
  auto s = std::make_shared<Structure>();
  s->kind = SKind::LeafIn;
  s->label = label;
  s->formula = std::move(f);
  return s;
}

StructureP s_leaf_out(const std::string& label, FormulaP f) {
  auto s = std::make_shared<Structure>();
  s->kind = SKind::LeafOut;
  s->label = label;
  s->formula = std::move(f);
  return s;
}

StructureP s_node(SKind k, StructureP a, StructureP b) {
  auto s = std::make_shared<Structure>();
  s->kind = k;
  s->a = std::move(a);
  s->b = std::move(b);
  return s;
}

bool input_kind(SKind k) {
  switch (k) {
    case SKind::LeafIn:
    case SKind::SProd:
    case SKind::SRDiff:
    case SKind::SLDiff:
    case SKind::SDGalL:
    case SKind::SDGalR:
      return true;
    default:
      return false;
  }
}

bool well_polarized(const StructureP& s) {
  switch (s->kind) {
    case SKind::LeafIn:
    case SKind::LeafOut:
      return true;
    case SKind::SProd:  // in * in
      return input_kind(s->a->kind) && input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SRDiff:  // in (/) out
      return input_kind(s->a->kind) && !input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SLDiff:  // out (\) in
      return !input_kind(s->a->kind) && input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SDGalL:  // .^1 out
    case SKind::SDGalR:  // out ^1.
      return !input_kind(s->a->kind) && well_polarized(s->a);
    case SKind::SCoprod:  // out + out
      return !input_kind(s->a->kind) && !input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SUnder:  // in \ out
      return input_kind(s->a->kind) && !input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SOver:  // out / in
      return !input_kind(s->a->kind) && input_kind(s->b->kind) && well_polarized(s->a) && well_polarized(s->b);
    case SKind::SGalR:  // in ^0.
    case SKind::SGalL:  // .^0 in
      return input_kind(s->a->kind) && well_polarized(s->a);
  }
  return false;
}

Sequent Sequent::make_passive(StructureP x, StructureP y) {
  Sequent s;
  s.left = std::move(x);
  s.right = std::move(y);
  return s;
}

Sequent Sequent::make_active_in(FormulaP a, StructureP y) {
  Sequent s;
  s.active = std::move(a);
  s.active_left = true;
  s.right = std::move(y);
  return s;
}

Sequent Sequent::make_active_out(StructureP x, FormulaP a) {
  Sequent s;
  s.left = std::move(x);
  s.active = std::move(a);
  s.active_left = false;
  return s;
}

static int structure_cmp(const StructureP& a, const StructureP& b) {
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == SKind::LeafIn || a->kind == SKind::LeafOut) {
    int c = a->label.compare(b->label);
    if (c != 0) return c;
    return formula_cmp(a->formula, b->formula);
  }
  int c = structure_cmp(a->a, b->a);
  if (c != 0) return c;
  if (a->b && b->b) return structure_cmp(a->b, b->b);
  return 0;
}

bool sequent_eq(const Sequent& a, const Sequent& b) {
  if (a.passive() != b.passive()) return false;
  if (!a.passive()) {
    if (a.active_left != b.active_left) return false;
    if (!formula_eq(a.active, b.active)) return false;
    const StructureP& sa = a.active_left ? a.right : a.left;
    const StructureP& sb = b.active_left ? b.right : b.left;
    return structure_cmp(sa, sb) == 0;
  }
  return structure_cmp(a.left, b.left) == 0 && structure_cmp(a.right, b.right) == 0;
}

// -------- printing --------

static std::string show_formula_for_label(const FormulaP& f) {
  std::string body = show(f);
  if (is_binary(f->kind)) return "(" + body + ")";
  return body;
}

static void show_struct(const StructureP& s, std::string& out) {
  auto child = [&](const StructureP& c) {
    bool paren = c->kind != SKind::LeafIn && c->kind != SKind::LeafOut;
    if (paren) out += "(";
    show_struct(c, out);
    if (paren) out += ")";
  };
  auto uchild = [&](const StructureP& c) {  // unary connectives always bracket
    out += "(";
    show_struct(c, out);
    out += ")";
  };
  switch (s->kind) {
    case SKind::LeafIn:
      out += s->label + ":" + show_formula_for_label(s->formula);
      return;
    case SKind::LeafOut:
      out += s->label + "':" + show_formula_for_label(s->formula);
      return;
    case SKind::SProd: child(s->a); out += " .*. "; child(s->b); return;
    case SKind::SRDiff: child(s->a); out += " .(/). "; child(s->b); return;
    case SKind::SLDiff: child(s->a); out += " .(\\). "; child(s->b); return;
    case SKind::SCoprod: child(s->a); out += " .+. "; child(s->b); return;
    case SKind::SUnder: child(s->a); out += " .\\. "; child(s->b); return;
    case SKind::SOver: child(s->a); out += " ./. "; child(s->b); return;
    case SKind::SDGalL: out += ".^1 "; uchild(s->a); return;
    case SKind::SDGalR: uchild(s->a); out += " ^1."; return;
    case SKind::SGalL: out += ".^0 "; uchild(s->a); return;
    case SKind::SGalR: uchild(s->a); out += " ^0."; return;
  }
}

std::string show(const StructureP& s) {
  std::string out;
  show_struct(s, out);
  return out;
}

std::string show(const Sequent& s) {
  std::string out;
  if (s.active_in()) {
    out += "[" + show(s.active) + "]";
  } else {
    show_struct(s.left, out);
  }
  out += " |- ";
  if (s.active_out()) {
    out += "[" + show(s.active) + "]";
  } else {
    show_struct(s.right, out);
  }
  return out;
}

// -------- labels --------

static void collect_labels(const StructureP& s, std::vector<std::pair<std::string, bool>>& out) {
  if (!s) return;
  if (s->kind == SKind::LeafIn) {
    out.emplace_back(s->label, false);
    return;
  }
  if (s->kind == SKind::LeafOut) {
    out.emplace_back(s->label, true);
    return;
  }
  collect_labels(s->a, out);
  collect_labels(s->b, out);
}

std::vector<std::pair<std::string, bool>> sequent_labels(const Sequent& s) {
  std::vector<std::pair<std::string, bool>> out;
  collect_labels(s.left, out);
  collect_labels(s.right, out);
  return out;
}

bool labels_distinct(const Sequent& s) {
  auto ls = sequent_labels(s);
  std::set<std::string> seen;
  for (auto& [n, co] : ls)
    if (!seen.insert(n).second) return false;
  return true;
}

static StructureP relabel(const StructureP& s, std::map<std::string, std::string>& map, int& nv, int& nc) {
  if (!s) return nullptr;
  if (s->kind == SKind::LeafIn || s->kind == SKind::LeafOut) {
    auto it = map.find(s->label);
    std::string fresh;
    if (it != map.end()) {
      fresh = it->second;
    } else {
      fresh = s->kind == SKind::LeafIn ? "v" + std::to_string(++nv) : "c" + std::to_string(++nc);
      map[s->label] = fresh;
    }
    return s->kind == SKind::LeafIn ? s_leaf_in(fresh, s->formula) : s_leaf_out(fresh, s->formula);
  }
  auto a = relabel(s->a, map, nv, nc);
  auto b = relabel(s->b, map, nv, nc);
  return s_node(s->kind, a, b);
}

std::string normalized_key(const Sequent& s) {
  std::map<std::string, std::string> map;
  int nv = 0, nc = 0;
  Sequent t = s;
  t.left = relabel(s.left, map, nv, nc);
  t.right = relabel(s.right, map, nv, nc);
  return show(t);
}

size_t count_formula_occurrences(const Sequent& s) {
  size_t n = sequent_labels(s).size();
  if (s.active) n++;
  return n;
}

// -------- display postulates --------

// All moves act at the roots of the two sides; they slide the turnstile
// across one structural connective.
std::vector<Move> display_moves(const Sequent& s) {
  std::vector<Move> out;
  if (!s.passive()) return out;
  const StructureP& X = s.left;
  const StructureP& Y = s.right;

  // rp: A .*. B |- Z <=> A |- Z ./. B <=> B |- A .\. Z
  switch (X->kind) {
    case SKind::SProd:
      out.push_back({"rp", Sequent::make_passive(X->a, s_node(SKind::SOver, Y, X->b))});
      out.push_back({"rp", Sequent::make_passive(X->b, s_node(SKind::SUnder, X->a, Y))});
      break;
    // drp: Y .(\). Z |- X <=> Z |- Y .+. X <=> Z .(/). X |- Y
    case SKind::SLDiff:
      out.push_back({"drp", Sequent::make_passive(X->b, s_node(SKind::SCoprod, X->a, Y))});
      break;
    case SKind::SRDiff:
      out.push_back({"drp", Sequent::make_passive(X->a, s_node(SKind::SCoprod, Y, X->b))});
      break;
    // dgc: .^1 Y |- X <=> X ^1. |- Y
    case SKind::SDGalL:
      out.push_back({"dgc", Sequent::make_passive(s_node(SKind::SDGalR, Y), X->a)});
      break;
    case SKind::SDGalR:
      out.push_back({"dgc", Sequent::make_passive(s_node(SKind::SDGalL, Y), X->a)});
      break;
    default:
      break;
  }

  switch (Y->kind) {
    // rp inverses: X |- Z ./. B => X .*. B |- Z ; X |- A .\. Z => A .*. X |- Z
    case SKind::SOver:
      out.push_back({"rp", Sequent::make_passive(s_node(SKind::SProd, X, Y->b), Y->a)});
      break;
    case SKind::SUnder:
      out.push_back({"rp", Sequent::make_passive(s_node(SKind::SProd, Y->a, X), Y->b)});
      break;
    // drp: Z |- Y .+. X <=> Y .(\). Z |- X <=> Z .(/). X |- Y
    case SKind::SCoprod:
      out.push_back({"drp", Sequent::make_passive(s_node(SKind::SLDiff, Y->a, X), Y->b)});
      out.push_back({"drp", Sequent::make_passive(s_node(SKind::SRDiff, X, Y->b), Y->a)});
      break;
    // gc: X |- Y ^0. <=> Y |- .^0 X
    case SKind::SGalR:
      out.push_back({"gc", Sequent::make_passive(Y->a, s_node(SKind::SGalL, X))});
      break;
    case SKind::SGalL:
      out.push_back({"gc", Sequent::make_passive(Y->a, s_node(SKind::SGalR, X))});
      break;
    default:
      break;
  }
  return out;
}

std::vector<Sequent> display_orbit(const Sequent& s) {
  std::vector<Sequent> orbit;
  std::set<std::string> seen;
  std::deque<Sequent> todo{s};
  seen.insert(show(s));
  while (!todo.empty()) {
    Sequent cur = todo.front();
    todo.pop_front();
    orbit.push_back(cur);
    for (auto& m : display_moves(cur)) {
      auto key = show(m.result);
      if (seen.insert(key).second) todo.push_back(m.result);
    }
  }
  return orbit;
}

// -------- distributivity --------

namespace {


// binary group, premise X .*. Y |- Z .+. W:
//   distr1: Z .(\). X |- W ./. Y
//   distr2: Y .(/). W |- X .\. Z
//   distr3: Z .(\). Y |- X .\. W
//   distr4: X .(/). W |- Z ./. Y
void binary_distr_conclusions(const StructureP& X, const StructureP& Y, const StructureP& Z,
                      const StructureP& W, std::vector<Move>& out) {
  out.push_back({"distr1", Sequent::make_passive(s_node(SKind::SLDiff, Z, X), s_node(SKind::SOver, W, Y))});
  out.push_back({"distr2", Sequent::make_passive(s_node(SKind::SRDiff, Y, W), s_node(SKind::SUnder, X, Z))});
  out.push_back({"distr3", Sequent::make_passive(s_node(SKind::SLDiff, Z, Y), s_node(SKind::SUnder, X, W))});
  out.push_back({"distr4", Sequent::make_passive(s_node(SKind::SRDiff, X, W), s_node(SKind::SOver, Z, Y))});
}

}  // namespace

std::vector<Move> distr_moves(const Sequent& s, const RuleConfig& cfg) {
  cfg.validate();
  std::vector<Move> out;
  if (!s.passive()) return out;
  const StructureP& L = s.left;
  const StructureP& R = s.right;

  if (cfg.distr_binary && L->kind == SKind::SProd && R->kind == SKind::SCoprod)
    binary_distr_conclusions(L->a, L->b, R->a, R->b, out);

  if (cfg.distr_unary) {
    // unary group, negation row: premise X |- Y
    out.push_back({"gdistr1", Sequent::make_passive(s_node(SKind::SDGalL, R), s_node(SKind::SGalR, L))});
    out.push_back({"gdistr2", Sequent::make_passive(s_node(SKind::SDGalL, R), s_node(SKind::SGalL, L))});
    out.push_back({"gdistr3", Sequent::make_passive(s_node(SKind::SDGalR, R), s_node(SKind::SGalL, L))});
    out.push_back({"gdistr4", Sequent::make_passive(s_node(SKind::SDGalR, R), s_node(SKind::SGalR, L))});
    // unary group, coproduct row: premise X |- Y .+. Z
    if (R->kind == SKind::SCoprod) {
      const StructureP &X = L, &Y = R->a, &Z = R->b;
      out.push_back({"gdistr5", Sequent::make_passive(s_node(SKind::SDGalR, Y), s_node(SKind::SUnder, X, Z))});
      out.push_back({"gdistr6", Sequent::make_passive(s_node(SKind::SDGalR, Y), s_node(SKind::SOver, Z, X))});
      out.push_back({"gdistr7", Sequent::make_passive(s_node(SKind::SDGalL, Z), s_node(SKind::SUnder, X, Y))});
      out.push_back({"gdistr8", Sequent::make_passive(s_node(SKind::SDGalL, Z), s_node(SKind::SOver, Y, X))});
    }
    // unary group, product row: premise X .*. Y |- Z
    if (L->kind == SKind::SProd) {
      const StructureP &X = L->a, &Y = L->b, &Z = R;
      out.push_back({"gdistr9", Sequent::make_passive(s_node(SKind::SLDiff, Z, X), s_node(SKind::SGalL, Y))});
      out.push_back({"gdistr10", Sequent::make_passive(s_node(SKind::SRDiff, X, Z), s_node(SKind::SGalL, Y))});
      out.push_back({"gdistr11", Sequent::make_passive(s_node(SKind::SLDiff, Z, Y), s_node(SKind::SGalR, X))});
      out.push_back({"gdistr12", Sequent::make_passive(s_node(SKind::SRDiff, Y, Z), s_node(SKind::SGalR, X))});
    }
  }

  if (cfg.distr_inverse) {
    // inverse group: from each binary conclusion shape back to X .*. Y |- Z .+. W
    auto conc = [&](SKind lk, SKind rk, auto extract) {
      if (L->kind == lk && R->kind == rk) extract();
    };
    conc(SKind::SLDiff, SKind::SOver, [&] {  // Z (\) X |- W / Y
      out.push_back({"distr-inv1",
                     Sequent::make_passive(s_node(SKind::SProd, L->b, R->b), s_node(SKind::SCoprod, L->a, R->a))});
    });
    conc(SKind::SRDiff, SKind::SUnder, [&] {  // Y (/) W |- X \ Z
      out.push_back({"distr-inv2",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->a), s_node(SKind::SCoprod, R->b, L->b))});
    });
    conc(SKind::SLDiff, SKind::SUnder, [&] {  // Z (\) Y |- X \ W
      out.push_back({"distr-inv3",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->b), s_node(SKind::SCoprod, L->a, R->b))});
    });
    conc(SKind::SRDiff, SKind::SOver, [&] {  // X (/) W |- Z / Y
      out.push_back({"distr-inv4",
                     Sequent::make_passive(s_node(SKind::SProd, L->a, R->b), s_node(SKind::SCoprod, R->a, L->b))});
    });
  }
  return out;
}

std::vector<Move> distr_premises(const Sequent& s, const RuleConfig& cfg) {
  cfg.validate();
  std::vector<Move> out;
  if (!s.passive()) return out;
  const StructureP& L = s.left;
  const StructureP& R = s.right;

  if (cfg.distr_binary) {
    // match each binary-group conclusion shape, recover the premise
    if (L->kind == SKind::SLDiff && R->kind == SKind::SOver)  // Z(\)X |- W/Y
      out.push_back({"distr1",
                     Sequent::make_passive(s_node(SKind::SProd, L->b, R->b), s_node(SKind::SCoprod, L->a, R->a))});
    if (L->kind == SKind::SRDiff && R->kind == SKind::SUnder)  // Y(/)W |- X\Z
      out.push_back({"distr2",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->a), s_node(SKind::SCoprod, R->b, L->b))});
    if (L->kind == SKind::SLDiff && R->kind == SKind::SUnder)  // Z(\)Y |- X\W
      out.push_back({"distr3",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->b), s_node(SKind::SCoprod, L->a, R->b))});
    if (L->kind == SKind::SRDiff && R->kind == SKind::SOver)  // X(/)W |- Z/Y
      out.push_back({"distr4",
                     Sequent::make_passive(s_node(SKind::SProd, L->a, R->b), s_node(SKind::SCoprod, R->a, L->b))});
  }

  if (cfg.distr_unary) {
    // negation-row conclusions
    if (L->kind == SKind::SDGalL && R->kind == SKind::SGalR)
      out.push_back({"gdistr1", Sequent::make_passive(R->a, L->a)});
    if (L->kind == SKind::SDGalL && R->kind == SKind::SGalL)
      out.push_back({"gdistr2", Sequent::make_passive(R->a, L->a)});
    if (L->kind == SKind::SDGalR && R->kind == SKind::SGalL)
      out.push_back({"gdistr3", Sequent::make_passive(R->a, L->a)});
    if (L->kind == SKind::SDGalR && R->kind == SKind::SGalR)
      out.push_back({"gdistr4", Sequent::make_passive(R->a, L->a)});
    // coproduct-row conclusions: Y^1. |- X\Z ; Y^1. |- Z/X ; .^1Z |- X\Y ; .^1Z |- Y/X
    if (L->kind == SKind::SDGalR && R->kind == SKind::SUnder)
      out.push_back({"gdistr5",
                     Sequent::make_passive(R->a, s_node(SKind::SCoprod, L->a, R->b))});
    if (L->kind == SKind::SDGalR && R->kind == SKind::SOver)
      out.push_back({"gdistr6",
                     Sequent::make_passive(R->b, s_node(SKind::SCoprod, L->a, R->a))});
    if (L->kind == SKind::SDGalL && R->kind == SKind::SUnder)
      out.push_back({"gdistr7",
                     Sequent::make_passive(R->a, s_node(SKind::SCoprod, R->b, L->a))});
    if (L->kind == SKind::SDGalL && R->kind == SKind::SOver)
      out.push_back({"gdistr8",
                     Sequent::make_passive(R->b, s_node(SKind::SCoprod, R->a, L->a))});
    // product-row conclusions: Z(\)X |- .^0Y ; X(/)Z |- .^0Y ; Z(\)Y |- X^0. ; Y(/)Z |- X^0.
    if (L->kind == SKind::SLDiff && R->kind == SKind::SGalL)
      out.push_back({"gdistr9",
                     Sequent::make_passive(s_node(SKind::SProd, L->b, R->a), L->a)});
    if (L->kind == SKind::SRDiff && R->kind == SKind::SGalL)
      out.push_back({"gdistr10",
                     Sequent::make_passive(s_node(SKind::SProd, L->a, R->a), L->b)});
    if (L->kind == SKind::SLDiff && R->kind == SKind::SGalR)
      out.push_back({"gdistr11",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->b), L->a)});
    if (L->kind == SKind::SRDiff && R->kind == SKind::SGalR)
      out.push_back({"gdistr12",
                     Sequent::make_passive(s_node(SKind::SProd, R->a, L->a), L->b)});
  }

  if (cfg.distr_inverse && L->kind == SKind::SProd && R->kind == SKind::SCoprod) {
    std::vector<Move> f1;
    binary_distr_conclusions(L->a, L->b, R->a, R->b, f1);
    for (auto& m : f1) out.push_back({"distr-inv" + m.rule.substr(5), m.result});
  }
  return out;
}

Sequent canonical(const Sequent& s) {
  if (!s.passive()) {
    return s;  // active sequents admit no display moves
  }
  auto orbit = display_orbit(s);
  const Sequent* best = &orbit[0];
  std::string best_key = normalized_key(orbit[0]);
  for (size_t i = 1; i < orbit.size(); i++) {
    std::string k = normalized_key(orbit[i]);
    if (k < best_key) {
      best_key = k;
      best = &orbit[i];
    }
  }
  return *best;
}

std::string canonical_key(const Sequent& s) { return normalized_key(canonical(s)); }

}  // namespace lg
