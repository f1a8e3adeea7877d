#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "gen.hpp"
#include "lg/structure.hpp"

using namespace lg;

namespace {
Sequent leaf_arrow(const std::string& a, const std::string& b) {
  return Sequent::make_passive(s_leaf_in("x", parse_formula(a)), s_leaf_out("g", parse_formula(b)));
}

bool orbit_contains(const std::vector<Sequent>& orbit, const std::string& printed) {
  for (auto& s : orbit)
    if (show(s) == printed) return true;
  return false;
}

// random well-polarized structure sequent over leaves drawn from rng
StructureP random_struct(std::mt19937_64& rng, int depth, bool input, int& n) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 0 : 5);
  int k = pick(rng);
  auto lf = [&]() -> StructureP {
    auto f = gen::formula(rng, 1, {"p", "q"});
    n++;
    return input ? s_leaf_in("x" + std::to_string(n), f) : s_leaf_out("a" + std::to_string(n), f);
  };
  if (k == 0) return lf();
  if (input) {
    switch (k) {
      case 1: return s_node(SKind::SProd, random_struct(rng, depth - 1, true, n), random_struct(rng, depth - 1, true, n));
      case 2: return s_node(SKind::SRDiff, random_struct(rng, depth - 1, true, n), random_struct(rng, depth - 1, false, n));
      case 3: return s_node(SKind::SLDiff, random_struct(rng, depth - 1, false, n), random_struct(rng, depth - 1, true, n));
      case 4: return s_node(SKind::SDGalL, random_struct(rng, depth - 1, false, n));
      default: return s_node(SKind::SDGalR, random_struct(rng, depth - 1, false, n));
    }
  }
  switch (k) {
    case 1: return s_node(SKind::SCoprod, random_struct(rng, depth - 1, false, n), random_struct(rng, depth - 1, false, n));
    case 2: return s_node(SKind::SUnder, random_struct(rng, depth - 1, true, n), random_struct(rng, depth - 1, false, n));
    case 3: return s_node(SKind::SOver, random_struct(rng, depth - 1, false, n), random_struct(rng, depth - 1, true, n));
    case 4: return s_node(SKind::SGalR, random_struct(rng, depth - 1, true, n));
    default: return s_node(SKind::SGalL, random_struct(rng, depth - 1, true, n));
  }
}

Sequent random_sequent(std::mt19937_64& rng, int depth) {
  int n = 0;
  return Sequent::make_passive(random_struct(rng, depth, true, n), random_struct(rng, depth, false, n));
}
}  // namespace

TEST_CASE("display of a product: rp example") {
  // x:a .*. y:b |- g':c  displays  x:a |- g':c ./. y:b
  Sequent s = Sequent::make_passive(
      s_node(SKind::SProd, s_leaf_in("x", parse_formula("a")), s_leaf_in("y", parse_formula("b"))),
      s_leaf_out("g", parse_formula("c")));
  auto moves = display_moves(s);
  bool found = false;
  for (auto& m : moves)
    if (show(m.result) == "x:a |- g':c ./. y:b") found = true;
  CHECK(found);
  auto orbit = display_orbit(s);
  CHECK(orbit.size() == 3);
  CHECK(orbit_contains(orbit, "y:b |- x:a .\\. g':c"));
}

TEST_CASE("gc display example") {
  // x:p |- (y:q) ^0.  <->  y:q |- .^0 (x:p)
  Sequent s = Sequent::make_passive(s_leaf_in("x", parse_formula("p")),
                                    s_node(SKind::SGalR, s_leaf_in("y", parse_formula("q"))));
  auto moves = display_moves(s);
  REQUIRE(moves.size() == 1);
  CHECK(show(moves[0].result) == "y:q |- .^0 (x:p)");
  CHECK(moves[0].rule == "gc");
}

TEST_CASE("leaf sequent has no display moves") {
  CHECK(display_moves(leaf_arrow("p", "p")).empty());
  CHECK(display_orbit(leaf_arrow("p", "q")).size() == 1);
}

TEST_CASE("display moves are invertible") {
  std::mt19937_64 rng(411);
  for (int i = 0; i < 100; i++) {
    Sequent s = random_sequent(rng, 3);
    for (auto& m : display_moves(s)) {
      bool back = false;
      for (auto& m2 : display_moves(m.result))
        if (sequent_eq(m2.result, s)) back = true;
      CHECK(back);
    }
  }
}

namespace {
size_t unary_nodes(const StructureP& s) {
  if (!s || s->kind == SKind::LeafIn || s->kind == SKind::LeafOut) return 0;
  size_t self = (s->b == nullptr) ? 1 : 0;
  return self + unary_nodes(s->a) + (s->b ? unary_nodes(s->b) : 0);
}
}  // namespace

TEST_CASE("orbits are small and preserve polarity and leaves") {
  // each binary structural node contributes at most two orbit members, each
  // unary node one; with u = 0 this is the plain 2n+1 bound
  std::mt19937_64 rng(1213);
  for (int i = 0; i < 100; i++) {
    Sequent s = random_sequent(rng, 3);
    auto orbit = display_orbit(s);
    size_t occurrences = count_formula_occurrences(s);
    size_t u = unary_nodes(s.left) + unary_nodes(s.right);
    CHECK(orbit.size() <= 2 * occurrences + 1 + u);
    if (u == 0) CHECK(orbit.size() <= 2 * occurrences + 1);
    auto base = sequent_labels(s);
    std::sort(base.begin(), base.end());
    for (auto& m : orbit) {
      CHECK(well_polarized(m.left));
      CHECK(well_polarized(m.right));
      auto ls = sequent_labels(m);
      std::sort(ls.begin(), ls.end());
      CHECK(ls == base);
    }
  }
}

TEST_CASE("distr moves: Fig 1 first rule") {
  Sequent s = Sequent::make_passive(
      s_node(SKind::SProd, s_leaf_in("x", parse_formula("a")), s_leaf_in("y", parse_formula("b"))),
      s_node(SKind::SCoprod, s_leaf_out("z", parse_formula("c")), s_leaf_out("w", parse_formula("d"))));
  RuleConfig cfg;
  auto moves = distr_moves(s, cfg);
  bool found = false;
  for (auto& m : moves)
    if (m.rule == "distr1" && show(m.result) == "z':c .(\\). x:a |- w':d ./. y:b") found = true;
  CHECK(found);
}

TEST_CASE("distr moves: Fig 2 row 1 on a leaf sequent") {
  Sequent s = leaf_arrow("p", "q");
  RuleConfig cfg;
  auto moves = distr_moves(s, cfg);
  bool found = false;
  for (auto& m : moves)
    if (m.rule == "gdistr1" && show(m.result) == ".^1 (g':q) |- (x:p) ^0.") found = true;
  CHECK(found);
  RuleConfig off;
  off.distr_binary = off.distr_unary = false;
  CHECK(distr_moves(s, off).empty());
}

TEST_CASE("distr premises invert distr moves") {
  std::mt19937_64 rng(997);
  RuleConfig cfg;
  cfg.distr_inverse = true;
  cfg.allow_both_groups = true;
  for (int i = 0; i < 100; i++) {
    Sequent s = random_sequent(rng, 3);
    for (auto& m : distr_moves(s, cfg)) {
      bool back = false;
      for (auto& b : distr_premises(m.result, cfg))
        if (b.rule == m.rule && sequent_eq(b.result, s)) back = true;
      CHECK(back);
    }
  }
}

TEST_CASE("distr preserves the leaf multiset and polarity") {
  std::mt19937_64 rng(333);
  RuleConfig cfg;
  for (int i = 0; i < 100; i++) {
    Sequent s = random_sequent(rng, 3);
    auto base = sequent_labels(s);
    std::sort(base.begin(), base.end());
    for (auto& m : distr_moves(s, cfg)) {
      auto ls = sequent_labels(m.result);
      std::sort(ls.begin(), ls.end());
      CHECK(ls == base);
      CHECK(well_polarized(m.result.left));
      CHECK(well_polarized(m.result.right));
    }
  }
}

TEST_CASE("config interlock") {
  RuleConfig cfg;
  cfg.distr_inverse = true;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.allow_both_groups = true;
  CHECK_NOTHROW(cfg.validate());
  RuleConfig inv_only;
  inv_only.distr_binary = false;
  inv_only.distr_unary = false;
  inv_only.distr_inverse = true;
  CHECK_NOTHROW(inv_only.validate());
}

TEST_CASE("orbit of the scope endsequent displays the subject") {
  // su:^1(np^1) .*. (tv:(np\s)/np .*. do:^1(np^1)) |- a':s
  auto qp = parse_formula("^1(np^1)");
  auto tv = parse_formula("(np \\ s) / np");
  Sequent s = Sequent::make_passive(
      s_node(SKind::SProd, s_leaf_in("su", qp),
             s_node(SKind::SProd, s_leaf_in("tv", tv), s_leaf_in("do", qp))),
      s_leaf_out("a", parse_formula("s")));
  auto orbit = display_orbit(s);
  bool found = false;
  for (auto& m : orbit)
    if (m.left->kind == SKind::LeafIn && m.left->label == "su") found = true;
  CHECK(found);
}

TEST_CASE("canonical representative") {
  Sequent leaf = leaf_arrow("p", "q");
  CHECK(sequent_eq(canonical(leaf), leaf));
  // both sides of the rp example share a representative
  Sequent s = Sequent::make_passive(
      s_node(SKind::SProd, s_leaf_in("x", parse_formula("a")), s_leaf_in("y", parse_formula("b"))),
      s_leaf_out("g", parse_formula("c")));
  auto moves = display_moves(s);
  REQUIRE(!moves.empty());
  CHECK(canonical_key(s) == canonical_key(moves[0].result));
  CHECK(canonical_key(s) != canonical_key(leaf));
}

TEST_CASE("canonical is idempotent on random sequents") {
  std::mt19937_64 rng(555);
  for (int i = 0; i < 100; i++) {
    Sequent s = random_sequent(rng, 3);
    Sequent c = canonical(s);
    CHECK(normalized_key(canonical(c)) == normalized_key(c));
    CHECK(canonical_key(s) == canonical_key(c));
  }
}
