#include "lg/types.hpp"

#include <cctype>

namespace lg {

const std::string kResponseAtom = "r";

TypeP t_atom(const std::string& name) {
  auto t = std::make_shared<Type>();
  t->atom = name;
  return t;
}

TypeP t_arrow(TypeP dom, TypeP cod) {
  auto t = std::make_shared<Type>();
  t->arrow = true;
  t->dom = std::move(dom);
  t->cod = std::move(cod);
  return t;
}

TypeP t_neg(TypeP a) { return t_arrow(std::move(a), t_atom(kResponseAtom)); }

bool type_eq(const TypeP& a, const TypeP& b) {
  if (a.get() == b.get()) return true;
  if (a->arrow != b->arrow) return false;
  if (!a->arrow) return a->atom == b->atom;
  return type_eq(a->dom, b->dom) && type_eq(a->cod, b->cod);
}

std::string show(const TypeP& t) {
  if (!t->arrow) return t->atom;
  std::string d = show(t->dom);
  if (t->dom->arrow) d = "(" + d + ")";
  return d + " -> " + show(t->cod);
}

namespace {
struct TypeParser {
  const std::string& s;
  size_t i = 0;
  explicit TypeParser(const std::string& s) : s(s) {}

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }

  TypeP primary() {
    ws();
    if (i < s.size() && s[i] == '(') {
      i++;
      auto t = type();
      ws();
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
      i++;
      return t;
    }
    size_t j = i;
    while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) j++;
    if (j == i) throw ParseError("expected type atom or '('", i);
    auto t = t_atom(s.substr(i, j - i));
    i = j;
    return t;
  }

  TypeP type() {
    auto l = primary();
    ws();
    if (i + 1 < s.size() && s[i] == '-' && s[i + 1] == '>') {
      i += 2;
      return t_arrow(l, type());
    }
    return l;
  }
};
}  // namespace

TypeP parse_type(const std::string& text) {
  TypeParser p(text);
  auto t = p.type();
  p.ws();
  if (p.i != text.size()) throw ParseError("trailing input", p.i);
  return t;
}

TypeP cps_type(const FormulaP& f) {
  switch (f->kind) {
    case FKind::Atom:
      return t_atom(f->atom);
    case FKind::Under:  // |A\B| = |B|' -> |A|'
      return t_arrow(t_neg(cps_type(f->r)), t_neg(cps_type(f->l)));
    case FKind::Over:  // |C/D| = |C|' -> |D|'
      return t_arrow(t_neg(cps_type(f->l)), t_neg(cps_type(f->r)));
    case FKind::RDiff:  // |A(/)B| = |A\B|'
      return t_neg(t_arrow(t_neg(cps_type(f->r)), t_neg(cps_type(f->l))));
    case FKind::LDiff:  // |D(\)C| = |C(/)D|
      return t_neg(t_arrow(t_neg(cps_type(f->l)), t_neg(cps_type(f->r))));
    case FKind::GalR:
    case FKind::GalL:
    case FKind::DGalR:
    case FKind::DGalL:
      return t_neg(cps_type(f->l));
    case FKind::Prod:
    case FKind::Coprod:
      throw TypeError("UnsupportedConnective: " + show(f) +
                      " is outside the CPS source fragment");
  }
  throw std::logic_error("cps_type: bad kind");
}

TypeP lex_type(const TypeP& t, const AtomMap& atom_map) {
  if (t->arrow) return t_arrow(lex_type(t->dom, atom_map), lex_type(t->cod, atom_map));
  auto it = atom_map.find(t->atom);
  if (it == atom_map.end()) throw TypeError("unmapped atom in lexical translation: " + t->atom);
  return it->second;
}

}  // namespace lg
