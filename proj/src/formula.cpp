#include "lg/formula.hpp"

#include <cctype>
#include <vector>

namespace lg {

FormulaP f_atom(const std::string& name) {
  auto f = std::make_shared<Formula>();
  f->kind = FKind::Atom;
  f->atom = name;
  return f;
}

FormulaP f_bin(FKind k, FormulaP l, FormulaP r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->l = std::move(l);
  f->r = std::move(r);
  return f;
}

FormulaP f_un(FKind k, FormulaP a) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->l = std::move(a);
  return f;
}

bool is_binary(FKind k) {
  switch (k) {
    case FKind::Prod:
    case FKind::Over:
    case FKind::Under:
    case FKind::Coprod:
    case FKind::RDiff:
    case FKind::LDiff:
      return true;
    default:
      return false;
  }
}

bool is_unary(FKind k) {
  return k == FKind::GalR || k == FKind::GalL || k == FKind::DGalR || k == FKind::DGalL;
}

int formula_cmp(const FormulaP& a, const FormulaP& b) {
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  if (a->kind == FKind::Atom) return a->atom.compare(b->atom);
  if (is_unary(a->kind)) return formula_cmp(a->l, b->l);
  int c = formula_cmp(a->l, b->l);
  if (c != 0) return c;
  return formula_cmp(a->r, b->r);
}

bool formula_eq(const FormulaP& a, const FormulaP& b) {
  if (a.get() == b.get()) return true;
  return formula_cmp(a, b) == 0;
}

size_t formula_size(const FormulaP& f) {
  if (f->kind == FKind::Atom) return 1;
  if (is_unary(f->kind)) return 1 + formula_size(f->l);
  return 1 + formula_size(f->l) + formula_size(f->r);
}

// -------- printing --------

static const char* bin_tok(FKind k) {
  switch (k) {
    case FKind::Prod: return "*";
    case FKind::Over: return "/";
    case FKind::Under: return "\\";
    case FKind::Coprod: return "+";
    case FKind::RDiff: return "(/)";
    case FKind::LDiff: return "(\\)";
    default: return "?";
  }
}

// Children of a binary or of a mixed-direction unary get parentheses; the
// printed form re-parses to the same tree.
static void show_rec(const FormulaP& f, std::string& out) {
  switch (f->kind) {
    case FKind::Atom:
      out += f->atom;
      return;
    case FKind::GalL:
    case FKind::DGalL: {
      out += f->kind == FKind::GalL ? "^0" : "^1";
      bool paren = is_binary(f->l->kind) || f->l->kind == FKind::GalR || f->l->kind == FKind::DGalR;
      out += paren ? "(" : " ";
      show_rec(f->l, out);
      if (paren) out += ")";
      return;
    }
    case FKind::GalR:
    case FKind::DGalR: {
      bool paren = is_binary(f->l->kind) || f->l->kind == FKind::GalL || f->l->kind == FKind::DGalL;
      if (paren) out += "(";
      show_rec(f->l, out);
      if (paren) out += ")";
      out += f->kind == FKind::GalR ? "^0" : "^1";
      return;
    }
    default: {
      auto side = [&](const FormulaP& c) {
        bool paren = is_binary(c->kind);
        if (paren) out += "(";
        show_rec(c, out);
        if (paren) out += ")";
      };
      side(f->l);
      out += " ";
      out += bin_tok(f->kind);
      out += " ";
      side(f->r);
      return;
    }
  }
}

std::string show(const FormulaP& f) {
  std::string out;
  show_rec(f, out);
  return out;
}

// -------- parsing --------

namespace {

enum class Tok { Atom, Star, Slash, Backslash, Plus, RDiff, LDiff, Hat0, Hat1, LParen, RParen, Arrow, End };

struct Lexer {
  const std::string& s;
  size_t i = 0;
  Tok tok = Tok::End;
  std::string text;
  size_t tok_pos = 0;

  explicit Lexer(const std::string& s) : s(s) { next(); }

  void next() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
    tok_pos = i;
    if (i >= s.size()) {
      tok = Tok::End;
      return;
    }
    char c = s[i];
    if (c == '(') {
      if (i + 2 < s.size() && s[i + 1] == '/' && s[i + 2] == ')') {
        tok = Tok::RDiff;
        i += 3;
        return;
      }
      if (i + 2 < s.size() && s[i + 1] == '\\' && s[i + 2] == ')') {
        tok = Tok::LDiff;
        i += 3;
        return;
      }
      tok = Tok::LParen;
      i++;
      return;
    }
    if (c == ')') { tok = Tok::RParen; i++; return; }
    if (c == '*') { tok = Tok::Star; i++; return; }
    if (c == '/') { tok = Tok::Slash; i++; return; }
    if (c == '\\') { tok = Tok::Backslash; i++; return; }
    if (c == '+') { tok = Tok::Plus; i++; return; }
    if (c == '-') {
      if (i + 1 < s.size() && s[i + 1] == '>') {
        tok = Tok::Arrow;
        i += 2;
        return;
      }
      throw ParseError("unexpected '-'", i);
    }
    if (c == '^') {
      if (i + 1 < s.size() && (s[i + 1] == '0' || s[i + 1] == '1')) {
        tok = s[i + 1] == '0' ? Tok::Hat0 : Tok::Hat1;
        i += 2;
        return;
      }
      throw ParseError("expected ^0 or ^1", i);
    }
    if (std::islower(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) j++;
      text = s.substr(i, j - i);
      i = j;
      tok = Tok::Atom;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
};

struct FormulaParser {
  Lexer lx;
  explicit FormulaParser(const std::string& s) : lx(s) {}

  FormulaP primary() {
    if (lx.tok == Tok::Atom) {
      if (lx.text == "r")
        throw ParseError("atom 'r' is reserved for the target language", lx.tok_pos);
      auto f = f_atom(lx.text);
      lx.next();
      return f;
    }
    if (lx.tok == Tok::LParen) {
      lx.next();
      auto f = formula();
      if (lx.tok != Tok::RParen) throw ParseError("expected ')'", lx.tok_pos);
      lx.next();
      return f;
    }
    throw ParseError("expected atom or '('", lx.tok_pos);
  }

  FormulaP unary() {
    if (lx.tok == Tok::Hat0 || lx.tok == Tok::Hat1) {
      FKind k = lx.tok == Tok::Hat0 ? FKind::GalL : FKind::DGalL;
      lx.next();
      return f_un(k, unary());
    }
    FormulaP f = primary();
    while (lx.tok == Tok::Hat0 || lx.tok == Tok::Hat1) {
      f = f_un(lx.tok == Tok::Hat0 ? FKind::GalR : FKind::DGalR, f);
      lx.next();
    }
    return f;
  }

  FormulaP formula() {
    FormulaP l = unary();
    FKind k;
    switch (lx.tok) {
      case Tok::Star: k = FKind::Prod; break;
      case Tok::Slash: k = FKind::Over; break;
      case Tok::Backslash: k = FKind::Under; break;
      case Tok::Plus: k = FKind::Coprod; break;
      case Tok::RDiff: k = FKind::RDiff; break;
      case Tok::LDiff: k = FKind::LDiff; break;
      default: return l;
    }
    size_t op_pos = lx.tok_pos;
    lx.next();
    FormulaP r = unary();
    // at most one binary per parenthesis level
    switch (lx.tok) {
      case Tok::Star:
      case Tok::Slash:
      case Tok::Backslash:
      case Tok::Plus:
      case Tok::RDiff:
      case Tok::LDiff:
        throw ParseError("binary operators are non-associative; parenthesize", lx.tok_pos);
      default:
        break;
    }
    (void)op_pos;
    return f_bin(k, l, r);
  }
};

}  // namespace

FormulaP parse_formula(const std::string& text) {
  FormulaParser p(text);
  auto f = p.formula();
  if (p.lx.tok != Tok::End) throw ParseError("trailing input", p.lx.tok_pos);
  return f;
}

std::pair<FormulaP, FormulaP> parse_arrow(const std::string& text) {
  FormulaParser p(text);
  auto l = p.formula();
  if (p.lx.tok != Tok::Arrow) throw ParseError("expected '->'", p.lx.tok_pos);
  p.lx.next();
  auto r = p.formula();
  if (p.lx.tok != Tok::End) throw ParseError("trailing input", p.lx.tok_pos);
  return {l, r};
}

// -------- symmetries --------

FormulaP bowtie(const FormulaP& f) {
  switch (f->kind) {
    case FKind::Atom: return f;
    case FKind::Over: return f_bin(FKind::Under, bowtie(f->r), bowtie(f->l));
    case FKind::Under: return f_bin(FKind::Over, bowtie(f->r), bowtie(f->l));
    case FKind::Prod: return f_bin(FKind::Prod, bowtie(f->r), bowtie(f->l));
    case FKind::Coprod: return f_bin(FKind::Coprod, bowtie(f->r), bowtie(f->l));
    case FKind::LDiff: return f_bin(FKind::RDiff, bowtie(f->r), bowtie(f->l));
    case FKind::RDiff: return f_bin(FKind::LDiff, bowtie(f->r), bowtie(f->l));
    case FKind::GalR: return f_un(FKind::GalL, bowtie(f->l));
    case FKind::GalL: return f_un(FKind::GalR, bowtie(f->l));
    case FKind::DGalR: return f_un(FKind::DGalL, bowtie(f->l));
    case FKind::DGalL: return f_un(FKind::DGalR, bowtie(f->l));
  }
  throw std::logic_error("bowtie: bad kind");
}

FormulaP infinity(const FormulaP& f) {
  switch (f->kind) {
    case FKind::Atom: return f;
    // C/B ~ B(\)C ; A*B ~ B+A ; A\C ~ C(/)A, and the inverses
    case FKind::Over: return f_bin(FKind::LDiff, infinity(f->r), infinity(f->l));
    case FKind::LDiff: return f_bin(FKind::Over, infinity(f->r), infinity(f->l));
    case FKind::Prod: return f_bin(FKind::Coprod, infinity(f->r), infinity(f->l));
    case FKind::Coprod: return f_bin(FKind::Prod, infinity(f->r), infinity(f->l));
    case FKind::Under: return f_bin(FKind::RDiff, infinity(f->r), infinity(f->l));
    case FKind::RDiff: return f_bin(FKind::Under, infinity(f->r), infinity(f->l));
    // A^0 ~ ^1(A) ; ^0 A ~ A^1, and the inverses
    case FKind::GalR: return f_un(FKind::DGalL, infinity(f->l));
    case FKind::DGalL: return f_un(FKind::GalR, infinity(f->l));
    case FKind::GalL: return f_un(FKind::DGalR, infinity(f->l));
    case FKind::DGalR: return f_un(FKind::GalL, infinity(f->l));
  }
  throw std::logic_error("infinity: bad kind");
}

bool in_cps_fragment(const FormulaP& f) {
  if (f->kind == FKind::Prod || f->kind == FKind::Coprod) return false;
  if (f->kind == FKind::Atom) return true;
  if (is_unary(f->kind)) return in_cps_fragment(f->l);
  return in_cps_fragment(f->l) && in_cps_fragment(f->r);
}

}  // namespace lg
