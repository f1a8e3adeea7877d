#include "oracle.hpp"

#include <deque>
#include <unordered_map>

namespace lg::oracle {

namespace {

struct State {
  Sequent rep;  // some orbit member
  std::vector<std::vector<int>> moves;  // each move: all premises must hold
  bool provable = false;
  bool closed = false;  // an axiom link closes some orbit member
};

struct Closure {
  const RuleConfig& cfg;
  std::vector<State> states;
  std::unordered_map<std::string, int> index;
  int fresh = 0;

  explicit Closure(const RuleConfig& cfg) : cfg(cfg) {}

  Sequent passivize(const Sequent& s) {
    if (s.passive()) return s;
    std::string l = "o" + std::to_string(++fresh);
    if (s.active_out()) return Sequent::make_passive(s.left, s_leaf_out(l, s.active));
    return Sequent::make_passive(s_leaf_in(l, s.active), s.right);
  }

  int intern(const Sequent& s, std::deque<int>& todo) {
    std::string key = canonical_key(s);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(states.size());
    states.push_back(State{s, {}, false, false});
    index.emplace(std::move(key), id);
    todo.push_back(id);
    return id;
  }

  void expand(int id, std::deque<int>& todo) {
    Sequent rep = states[id].rep;  // copy: intern() may reallocate states
    bool closed = false;
    std::vector<std::vector<int>> moves;
    for (auto& m : display_orbit(rep)) {
      // closure
      if (m.left->kind == SKind::LeafIn && m.right->kind == SKind::LeafOut &&
          m.left->formula->kind == FKind::Atom && formula_eq(m.left->formula, m.right->formula)) {
        closed = true;
        continue;
      }
      // distributivity, backward
      for (auto& d : distr_premises(m, cfg)) moves.push_back({intern(d.result, todo)});
      // composite logical steps at displayed leaves; fresh labels must stay
      // clear of the member's own
      LabelGen gen;
      bump_gen_past(m, gen);
      if (m.left->kind == SKind::LeafIn && m.left->formula->kind != FKind::Atom) {
        Sequent act = Sequent::make_active_in(m.left->formula, m.right);
        if (auto step = logical_backward(act, gen)) {
          std::vector<int> prems;
          for (auto& q : step->premises) prems.push_back(intern(passivize(q), todo));
          moves.push_back(std::move(prems));
        }
      }
      if (m.right->kind == SKind::LeafOut && m.right->formula->kind != FKind::Atom) {
        Sequent act = Sequent::make_active_out(m.left, m.right->formula);
        if (auto step = logical_backward(act, gen)) {
          std::vector<int> prems;
          for (auto& q : step->premises) prems.push_back(intern(passivize(q), todo));
          moves.push_back(std::move(prems));
        }
      }
    }
    states[id].closed = closed;
    states[id].moves = std::move(moves);
  }

  bool run(const Sequent& goal) {
    std::deque<int> todo;
    intern(goal, todo);
    while (!todo.empty()) {
      int id = todo.front();
      todo.pop_front();
      expand(id, todo);
    }
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& st : states) {
        if (st.provable) continue;
        if (st.closed) {
          st.provable = true;
          changed = true;
          continue;
        }
        for (auto& mv : st.moves) {
          bool all = true;
          for (int c : mv)
            if (!states[c].provable) {
              all = false;
              break;
            }
          if (all) {
            st.provable = true;
            changed = true;
            break;
          }
        }
      }
    }
    return states[0].provable;
  }
};

}  // namespace

bool derivable_sequent(const Sequent& passive_goal, const RuleConfig& cfg) {
  cfg.validate();
  Closure c(cfg);
  return c.run(passive_goal);
}

bool derivable(const FormulaP& a, const FormulaP& b, const RuleConfig& cfg) {
  Sequent goal = Sequent::make_passive(s_leaf_in("x0", a), s_leaf_out("a0", b));
  return derivable_sequent(goal, cfg);
}

bool derivable(const std::string& arrow, const RuleConfig& cfg) {
  auto [a, b] = parse_arrow(arrow);
  return derivable(a, b, cfg);
}

}  // namespace lg::oracle
