#include "lg/term.hpp"

#include <cctype>
#include <functional>

namespace lg {

TermP t_var(const std::string& n) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Var;
  t->name = n;
  return t;
}

TermP t_const(const std::string& n) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Const;
  t->name = n;
  return t;
}

TermP t_abs(const std::string& n, TermP body) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::Abs;
  t->name = n;
  t->a = std::move(body);
  return t;
}

TermP t_app(TermP f, TermP a) {
  auto t = std::make_shared<Term>();
  t->kind = TermKind::App;
  t->a = std::move(f);
  t->b = std::move(a);
  return t;
}

TermP t_app(TermP f, TermP a, TermP b) { return t_app(t_app(std::move(f), std::move(a)), std::move(b)); }

// -------- printing --------

static void show_rec(const TermP& t, std::string& out, bool app_left) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      out += t->name;
      return;
    case TermKind::Abs:
      if (app_left) out += "(";
      out += "\\" + t->name + ". ";
      show_rec(t->a, out, false);
      if (app_left) out += ")";
      return;
    case TermKind::App: {
      // f a1 a2, parenthesizing argument applications and abstractions
      show_rec(t->a, out, true);
      out += " ";
      bool paren = t->b->kind == TermKind::App || t->b->kind == TermKind::Abs;
      if (paren) out += "(";
      show_rec(t->b, out, false);
      if (paren) out += ")";
      return;
    }
  }
}

std::string show(const TermP& t) {
  std::string out;
  show_rec(t, out, false);
  return out;
}

// -------- parsing --------

namespace {
struct TermParser {
  const std::string& s;
  size_t i = 0;
  explicit TermParser(const std::string& s) : s(s) {}

  void ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) i++;
  }

  bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '+';
  }

  std::string ident() {
    ws();
    size_t j = i;
    while (j < s.size() && ident_char(s[j])) j++;
    if (j == i) throw ParseError("expected identifier", i);
    std::string name = s.substr(i, j - i);
    i = j;
    return name;
  }

  TermP atom_or_null() {
    ws();
    if (i >= s.size()) return nullptr;
    char c = s[i];
    if (c == '(') {
      i++;
      auto t = term();
      ws();
      if (i >= s.size() || s[i] != ')') throw ParseError("expected ')'", i);
      i++;
      return t;
    }
    if (c == '\\') {
      i++;
      std::string v = ident();
      ws();
      if (i >= s.size() || s[i] != '.') throw ParseError("expected '.' after binder", i);
      i++;
      return t_abs(v, term());
    }
    if (ident_char(c) && c != '\'' && c != '+') return t_var(ident());
    return nullptr;
  }

  TermP term() {
    auto t = atom_or_null();
    if (!t) throw ParseError("expected term", i);
    for (;;) {
      auto arg = peek_atom();
      if (!arg) return t;
      t = t_app(t, arg);
    }
  }

  TermP peek_atom() {
    ws();
    if (i >= s.size() || s[i] == ')') return nullptr;
    return atom_or_null();
  }
};
}  // namespace

TermP parse_term(const std::string& text) {
  TermParser p(text);
  auto t = p.term();
  p.ws();
  if (p.i != text.size()) throw ParseError("trailing input", p.i);
  return t;
}

static TermP resolve_rec(const TermP& t, const std::set<std::string>& constants,
                         std::set<std::string>& bound) {
  switch (t->kind) {
    case TermKind::Const:
      return t;
    case TermKind::Var:
      if (bound.count(t->name)) return t;
      if (constants.count(t->name)) return t_const(t->name);
      throw TypeError("unbound name '" + t->name + "' (not a declared constant)");
    case TermKind::Abs: {
      bool fresh = bound.insert(t->name).second;
      auto b = resolve_rec(t->a, constants, bound);
      if (fresh) bound.erase(t->name);
      return t_abs(t->name, b);
    }
    case TermKind::App:
      return t_app(resolve_rec(t->a, constants, bound), resolve_rec(t->b, constants, bound));
  }
  throw std::logic_error("resolve: bad kind");
}

TermP resolve_constants(const TermP& t, const std::set<std::string>& constants) {
  std::set<std::string> bound;
  return resolve_rec(t, constants, bound);
}

static void free_vars_rec(const TermP& t, std::set<std::string>& bound, std::set<std::string>& out) {
  switch (t->kind) {
    case TermKind::Var:
      if (!bound.count(t->name)) out.insert(t->name);
      return;
    case TermKind::Const:
      return;
    case TermKind::Abs: {
      bool fresh = bound.insert(t->name).second;
      free_vars_rec(t->a, bound, out);
      if (fresh) bound.erase(t->name);
      return;
    }
    case TermKind::App:
      free_vars_rec(t->a, bound, out);
      free_vars_rec(t->b, bound, out);
      return;
  }
}

std::set<std::string> free_vars(const TermP& t) {
  std::set<std::string> bound, out;
  free_vars_rec(t, bound, out);
  return out;
}

static std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string n = base;
  int k = 0;
  while (avoid.count(n)) n = base + "_" + std::to_string(++k);
  return n;
}

static TermP subst_rec(const TermP& t, const std::string& var, const TermP& repl,
                       const std::set<std::string>& repl_fv) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == var ? repl : t;
    case TermKind::Const:
      return t;
    case TermKind::App:
      return t_app(subst_rec(t->a, var, repl, repl_fv), subst_rec(t->b, var, repl, repl_fv));
    case TermKind::Abs: {
      if (t->name == var) return t;
      if (repl_fv.count(t->name)) {
        // rename the binder away from the replacement's free variables
        std::set<std::string> avoid = repl_fv;
        auto body_fv = free_vars(t->a);
        avoid.insert(body_fv.begin(), body_fv.end());
        avoid.insert(var);
        std::string n = fresh_name(t->name, avoid);
        auto body = subst_rec(t->a, t->name, t_var(n), {n});
        return t_abs(n, subst_rec(body, var, repl, repl_fv));
      }
      return t_abs(t->name, subst_rec(t->a, var, repl, repl_fv));
    }
  }
  throw std::logic_error("subst: bad kind");
}

TermP substitute(const TermP& t, const std::string& var, const TermP& repl) {
  return subst_rec(t, var, repl, free_vars(repl));
}

// normal-order reduction; terminates on simply typed terms
TermP beta_normalize(const TermP& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return t;
    case TermKind::Abs:
      return t_abs(t->name, beta_normalize(t->a));
    case TermKind::App: {
      TermP f = t->a;
      // reduce the head to expose redexes
      while (true) {
        if (f->kind == TermKind::Abs) {
          return beta_normalize(substitute(f->a, f->name, t->b));
        }
        TermP f2 = (f->kind == TermKind::App) ? beta_normalize(f) : f;
        if (f2->kind == TermKind::Abs) {
          f = f2;
          continue;
        }
        return t_app(f2, beta_normalize(t->b));
      }
    }
  }
  throw std::logic_error("beta: bad kind");
}

static bool alpha_rec(const TermP& a, const TermP& b, std::vector<std::pair<std::string, std::string>>& env) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::Const:
      return a->name == b->name;
    case TermKind::Var: {
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == a->name || it->second == b->name)
          return it->first == a->name && it->second == b->name;
      }
      return a->name == b->name;  // both free
    }
    case TermKind::Abs: {
      env.emplace_back(a->name, b->name);
      bool ok = alpha_rec(a->a, b->a, env);
      env.pop_back();
      return ok;
    }
    case TermKind::App:
      return alpha_rec(a->a, b->a, env) && alpha_rec(a->b, b->b, env);
  }
  return false;
}

bool alpha_eq(const TermP& a, const TermP& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return alpha_rec(a, b, env);
}

// counts occurrences of `name` referring to the binding currently in scope
static size_t count_occ(const TermP& t, const std::string& name) {
  switch (t->kind) {
    case TermKind::Var:
      return t->name == name ? 1 : 0;
    case TermKind::Const:
      return 0;
    case TermKind::Abs:
      return t->name == name ? 0 : count_occ(t->a, name);
    case TermKind::App:
      return count_occ(t->a, name) + count_occ(t->b, name);
  }
  return 0;
}

static bool linear_rec(const TermP& t, const std::set<std::string>& over) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return true;
    case TermKind::Abs:
      if (over.count(t->name) && count_occ(t->a, t->name) != 1) return false;
      return linear_rec(t->a, over);
    case TermKind::App:
      return linear_rec(t->a, over) && linear_rec(t->b, over);
  }
  return true;
}

bool is_linear(const TermP& t, const std::set<std::string>& over) {
  for (const auto& n : over) {
    // free occurrences of n must be exactly one if n occurs free at all;
    // names in `over` that are only binders are checked at their binder.
    size_t free_occ = 0;
    std::function<void(const TermP&)> walk = [&](const TermP& u) {
      switch (u->kind) {
        case TermKind::Var:
          if (u->name == n) free_occ++;
          return;
        case TermKind::Const:
          return;
        case TermKind::Abs:
          if (u->name == n) return;  // inner binding, counted by linear_rec
          walk(u->a);
          return;
        case TermKind::App:
          walk(u->a);
          walk(u->b);
          return;
      }
    };
    walk(t);
    if (free_occ > 1) return false;
  }
  return linear_rec(t, over);
}

std::set<std::string> all_var_names(const TermP& t) {
  std::set<std::string> out;
  std::function<void(const TermP&)> walk = [&](const TermP& u) {
    switch (u->kind) {
      case TermKind::Var:
        out.insert(u->name);
        return;
      case TermKind::Const:
        return;
      case TermKind::Abs:
        out.insert(u->name);
        walk(u->a);
        return;
      case TermKind::App:
        walk(u->a);
        walk(u->b);
        return;
    }
  };
  walk(t);
  return out;
}

// -------- typechecking (unification) --------

namespace {

struct Unifier {
  // node: arrow(dom,cod), atom(name), or unbound metavariable
  struct Node {
    int kind = 0;  // 0 = meta, 1 = atom, 2 = arrow
    std::string atom;
    int dom = -1, cod = -1;
    int link = -1;  // union-find for metas
  };
  std::vector<Node> nodes;

  int meta() {
    nodes.push_back({});
    return static_cast<int>(nodes.size()) - 1;
  }
  int atom(const std::string& n) {
    nodes.push_back({1, n, -1, -1, -1});
    return static_cast<int>(nodes.size()) - 1;
  }
  int arrow(int d, int c) {
    nodes.push_back({2, "", d, c, -1});
    return static_cast<int>(nodes.size()) - 1;
  }

  int find(int i) {
    while (nodes[i].kind == 0 && nodes[i].link != -1) i = nodes[i].link;
    return i;
  }

  bool occurs(int m, int t) {
    t = find(t);
    if (t == m) return true;
    if (nodes[t].kind == 2) return occurs(m, nodes[t].dom) || occurs(m, nodes[t].cod);
    return false;
  }

  void unify(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (nodes[a].kind == 0) {
      if (occurs(a, b)) throw TypeError("type mismatch (cyclic type)");
      nodes[a].link = b;
      return;
    }
    if (nodes[b].kind == 0) {
      unify(b, a);
      return;
    }
    if (nodes[a].kind != nodes[b].kind) throw TypeError("type mismatch");
    if (nodes[a].kind == 1) {
      if (nodes[a].atom != nodes[b].atom)
        throw TypeError("type mismatch: " + nodes[a].atom + " vs " + nodes[b].atom);
      return;
    }
    unify(nodes[a].dom, nodes[b].dom);
    unify(nodes[a].cod, nodes[b].cod);
  }

  int of_type(const TypeP& t) {
    if (!t->arrow) return atom(t->atom);
    int d = of_type(t->dom);
    int c = of_type(t->cod);
    return arrow(d, c);
  }

  TypeP to_type(int i) {
    i = find(i);
    if (nodes[i].kind == 0) throw TypeError("ambiguous type (unconstrained)");
    if (nodes[i].kind == 1) return t_atom(nodes[i].atom);
    return t_arrow(to_type(nodes[i].dom), to_type(nodes[i].cod));
  }
};

int infer(Unifier& u, const TermP& t, const std::map<std::string, TypeP>& env,
          std::vector<std::pair<std::string, int>>& bound) {
  switch (t->kind) {
    case TermKind::Var: {
      for (auto it = bound.rbegin(); it != bound.rend(); ++it)
        if (it->first == t->name) return it->second;
      auto e = env.find(t->name);
      if (e == env.end()) throw TypeError("unbound name: " + t->name);
      return u.of_type(e->second);
    }
    case TermKind::Const: {
      auto e = env.find(t->name);
      if (e == env.end()) throw TypeError("undeclared constant: " + t->name);
      return u.of_type(e->second);
    }
    case TermKind::Abs: {
      int d = u.meta();
      bound.emplace_back(t->name, d);
      int c = infer(u, t->a, env, bound);
      bound.pop_back();
      return u.arrow(d, c);
    }
    case TermKind::App: {
      int f = infer(u, t->a, env, bound);
      int a = infer(u, t->b, env, bound);
      int c = u.meta();
      u.unify(f, u.arrow(a, c));
      return c;
    }
  }
  throw std::logic_error("infer: bad kind");
}

}  // namespace

TypeP typecheck(const TermP& t, const std::map<std::string, TypeP>& env) {
  Unifier u;
  std::vector<std::pair<std::string, int>> bound;
  int i = infer(u, t, env, bound);
  return u.to_type(i);
}

void typecheck_expect(const TermP& t, const std::map<std::string, TypeP>& env, const TypeP& expected,
                      const std::string& what) {
  Unifier u;
  std::vector<std::pair<std::string, int>> bound;
  int i = infer(u, t, env, bound);
  int e = u.of_type(expected);
  try {
    u.unify(i, e);
  } catch (const TypeError&) {
    throw TypeError(what + ": expected type " + show(expected));
  }
  // force full instantiation against the expectation
  (void)u.to_type(i);
}

}  // namespace lg
