#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "lg/term.hpp"

using namespace lg;

TEST_CASE("term parse and print round-trip") {
  auto t = parse_term("\\v. \\y. v (\\c. \\x. c (like y x))");
  CHECK(t->kind == TermKind::Abs);
  auto again = parse_term(show(t));
  CHECK(alpha_eq(t, again));
}

TEST_CASE("alpha equivalence") {
  CHECK(alpha_eq(parse_term("\\x. x"), parse_term("\\y. y")));
  CHECK(alpha_eq(parse_term("\\x. \\y. x y"), parse_term("\\y. \\x. y x")));
  CHECK(!alpha_eq(parse_term("\\x. \\y. x y"), parse_term("\\x. \\y. y x")));
  CHECK(!alpha_eq(parse_term("\\x. x"), parse_term("\\x. y")));
}

TEST_CASE("substitution avoids capture") {
  // (\y. x y)[x := y]  must not capture the bound y
  auto body = t_abs("y", t_app(t_var("x"), t_var("y")));
  auto r = substitute(body, "x", t_var("y"));
  CHECK(alpha_eq(r, parse_term("\\z. y z")));
}

TEST_CASE("beta normalization examples") {
  // (\k. k x) a  ->  a x
  auto t1 = t_app(t_abs("k", t_app(t_var("k"), t_var("x"))), t_var("a"));
  CHECK(alpha_eq(beta_normalize(t1), parse_term("a x")));
  // (\k. k (\x. s0 x)) m  ->  m (\x. s0 x)
  auto inner = t_abs("x", t_app(t_var("s0"), t_var("x")));
  auto t2 = t_app(t_abs("k", t_app(t_var("k"), inner)), t_var("m"));
  CHECK(alpha_eq(beta_normalize(t2), t_app(t_var("m"), inner)));
  // normal form is fixed
  auto n = parse_term("\\x. \\y. x y");
  CHECK(alpha_eq(beta_normalize(n), n));
}

namespace {
// applicative-order normalizer used as a second route for confluence checks
TermP applicative(const TermP& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Const:
      return t;
    case TermKind::Abs:
      return t_abs(t->name, applicative(t->a));
    case TermKind::App: {
      auto f = applicative(t->a);
      auto a = applicative(t->b);
      if (f->kind == TermKind::Abs) return applicative(substitute(f->a, f->name, a));
      return t_app(f, a);
    }
  }
  return t;
}
}  // namespace

TEST_CASE("normalization is confluent across reduction orders") {
  std::vector<std::string> corpus = {
      "(\\k. k x) a",
      "(\\v. \\y. v (\\c. \\x. c (like y x))) (\\u. u k0) z",
      "(\\q. \\p. f (\\x. g (p x) (q x))) (\\w. h w)",
      "(\\a. (\\b. b a) (\\c. c)) d",
  };
  for (auto& s : corpus) {
    auto t = parse_term(s);
    CHECK(alpha_eq(beta_normalize(t), applicative(t)));
  }
}

TEST_CASE("linearity") {
  auto t = parse_term("\\k. k x0");
  CHECK(is_linear(t, {"k", "x0"}));
  // the lexical recipe of a universal determiner uses its variable twice
  auto every = parse_term("\\q. \\p. forall (\\x. impl (p x) (q x))");
  CHECK(!is_linear(every, {"x"}));
  CHECK(is_linear(every, {"q", "p"}));
  // a variable that never occurs fails the exactly-once test
  auto drop = parse_term("\\x. y");
  CHECK(!is_linear(drop, {"x"}));
}

TEST_CASE("typecheck infers simple types") {
  std::map<std::string, TypeP> env;
  env["x0"] = parse_type("np");
  auto t = parse_term("\\k. k x0");
  typecheck_expect(t, env, parse_type("(np -> r) -> r"), "ax image");
  CHECK_THROWS_AS(typecheck_expect(t, env, parse_type("(s -> r) -> r"), "wrong"), TypeError);

  std::map<std::string, TypeP> env2;
  env2["a0"] = parse_type("s -> r");
  CHECK(type_eq(typecheck(t_var("a0"), env2), parse_type("s -> r")));

  std::map<std::string, TypeP> env3;
  env3["m"] = parse_type("(np -> r) -> r");
  env3["k"] = parse_type("np -> r");
  CHECK(type_eq(typecheck(parse_term("m k"), env3), parse_type("r")));
  CHECK_THROWS_AS(typecheck(parse_term("k m"), env3), TypeError);
  CHECK_THROWS_AS(typecheck(parse_term("zz"), env3), TypeError);
}

TEST_CASE("subject reduction") {
  std::map<std::string, TypeP> env;
  env["m"] = parse_type("((s -> r) -> r)");
  env["q"] = parse_type("s -> r");
  auto t = parse_term("(\\k. k (\\x. q x)) (\\h. m h)");
  auto ty = typecheck(t, env);
  auto n = beta_normalize(t);
  CHECK(type_eq(typecheck(n, env), ty));
}

TEST_CASE("resolve constants") {
  auto t = parse_term("\\x. f x");
  auto r = resolve_constants(t, {"f"});
  CHECK(r->a->a->kind == TermKind::Const);
  CHECK_THROWS_AS(resolve_constants(parse_term("\\x. g x"), {"f"}), TypeError);
}
