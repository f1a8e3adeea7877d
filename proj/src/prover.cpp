#include "lg/prover.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace lg {

Sequent embed_arrow(const FormulaP& a, const FormulaP& b) {
  return Sequent::make_active_out(s_leaf_in("x1", a), b);
}

namespace {

enum class EK { Close, AxLink, Logical, Defocus, FocusIn, FocusOut, Distr, Display };

struct GEdge {
  EK kind;
  int idx = 0;  // Distr/Display: index into the move list
  std::vector<int> children;
};

struct GNode {
  Sequent seq;  // label-normalized representative
  std::vector<GEdge> edges;
  bool provable = false;
};

struct Graph {
  const RuleConfig& cfg;
  size_t max_steps;
  std::vector<GNode> nodes;
  std::unordered_map<std::string, int> index;

  explicit Graph(const RuleConfig& cfg, size_t max_steps) : cfg(cfg), max_steps(max_steps) {}

  int intern(const Sequent& s, std::deque<int>& todo) {
    std::string key = normalized_key(s);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(nodes.size());
    nodes.push_back(GNode{s, {}, false});
    index.emplace(std::move(key), id);
    todo.push_back(id);
    return id;
  }

  void build(const Sequent& goal) {
    std::deque<int> todo;
    intern(goal, todo);
    size_t expanded = 0;
    while (!todo.empty()) {
      int id = todo.front();
      todo.pop_front();
      if (max_steps && ++expanded > max_steps)
        throw ResourceLimit("ResourceLimit: step bound " + std::to_string(max_steps) +
                            " reached before the search space was exhausted");
      expand(id, todo);
    }
  }

  void expand(int id, std::deque<int>& todo) {
    Sequent s = nodes[id].seq;  // copy: nodes may reallocate
    std::vector<GEdge> edges;

    if (s.active) {
      if (closure_rule(s)) {
        edges.push_back(GEdge{EK::Close, 0, {}});
      } else {
        // placeholder labels, normalized away in node keys; kept clear of the
        // labels already in s so premises stay label-distinct
        LabelGen gen;
        bump_gen_past(s, gen);
        if (auto step = logical_backward(s, gen)) {
          GEdge e{EK::Logical, 0, {}};
          for (auto& prem : step->premises) e.children.push_back(intern(prem, todo));
          edges.push_back(std::move(e));
        }
        // defocus: mu / mu~
        std::string t = "t" + std::to_string(gen.nv + 1);
        Sequent prem = s.active_out()
                           ? Sequent::make_passive(s.left, s_leaf_out(t, s.active))
                           : Sequent::make_passive(s_leaf_in(t, s.active), s.right);
        edges.push_back(GEdge{EK::Defocus, 0, {intern(prem, todo)}});
      }
    } else {
      bool leaf_left = s.left->kind == SKind::LeafIn;
      bool leaf_right = s.right->kind == SKind::LeafOut;
      bool atomic_link = leaf_left && leaf_right && s.left->formula->kind == FKind::Atom &&
                         formula_eq(s.left->formula, s.right->formula);
      if (atomic_link) {
        edges.push_back(GEdge{EK::AxLink, 0, {}});
      } else {
        if (leaf_left) {
          Sequent prem = Sequent::make_active_in(s.left->formula, s.right);
          edges.push_back(GEdge{EK::FocusIn, 0, {intern(prem, todo)}});
        }
        if (leaf_right) {
          Sequent prem = Sequent::make_active_out(s.left, s.right->formula);
          edges.push_back(GEdge{EK::FocusOut, 0, {intern(prem, todo)}});
        }
        auto distr = distr_premises(s, cfg);
        for (size_t i = 0; i < distr.size(); i++)
          edges.push_back(GEdge{EK::Distr, static_cast<int>(i), {intern(distr[i].result, todo)}});
        auto disp = display_moves(s);
        for (size_t i = 0; i < disp.size(); i++)
          edges.push_back(GEdge{EK::Display, static_cast<int>(i), {intern(disp[i].result, todo)}});
      }
    }
    nodes[id].edges = std::move(edges);
  }

  void mark() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (auto& n : nodes) {
        if (n.provable) continue;
        for (auto& e : n.edges) {
          bool all = true;
          for (int c : e.children)
            if (!nodes[c].provable) {
              all = false;
              break;
            }
          if (all) {
            n.provable = true;
            changed = true;
            break;
          }
        }
      }
    }
  }
};

struct Extractor {
  Graph& g;
  size_t limit;

  // proofs of the concrete sequent s (node `id`), avoiding nodes on `path`
  std::vector<std::pair<ProofP, LabelGen>> extract(int id, const Sequent& s,
                                                   std::unordered_set<int>& path, size_t want,
                                                   LabelGen gen) {
    std::vector<std::pair<ProofP, LabelGen>> out;
    if (!g.nodes[id].provable || want == 0) return out;
    if (path.count(id)) return out;
    path.insert(id);
    for (auto& e : g.nodes[id].edges) {
      if (out.size() >= want) break;
      bool ok = true;
      for (int c : e.children)
        if (!g.nodes[c].provable) {
          ok = false;
          break;
        }
      if (!ok) continue;
      step(e, s, path, want - out.size(), gen, out);
    }
    path.erase(id);
    return out;
  }

  void step(const GEdge& e, const Sequent& s, std::unordered_set<int>& path, size_t want,
            LabelGen gen, std::vector<std::pair<ProofP, LabelGen>>& out) {
    switch (e.kind) {
      case EK::Close: {
        auto r = closure_rule(s);
        if (r) out.emplace_back(mk_proof(s, *r), gen);
        return;
      }
      case EK::AxLink: {
        out.emplace_back(mk_proof(s, RuleApp{RK::AxLink, "", false, {}, nullptr}), gen);
        return;
      }
      case EK::Logical: {
        size_t start = out.size();
        auto step = logical_backward(s, gen);
        if (!step) return;
        // enumerate cross products of premise proofs
        std::vector<std::pair<std::vector<ProofP>, LabelGen>> partial{{{}, gen}};
        for (size_t i = 0; i < step->premises.size(); i++) {
          std::vector<std::pair<std::vector<ProofP>, LabelGen>> next;
          for (auto& [pre, pgen] : partial) {
            auto subs = extract(e.children[i], step->premises[i], path, want, pgen);
            for (auto& [sp, sgen] : subs) {
              auto v = pre;
              v.push_back(sp);
              next.emplace_back(std::move(v), sgen);
              if (next.size() > want * 4 + 8) break;  // keep products bounded
            }
          }
          partial = std::move(next);
        }
        for (auto& [pre, pgen] : partial) {
          if (out.size() - start >= want) break;
          out.emplace_back(mk_proof(s, step->rule, pre), pgen);
        }
        return;
      }
      case EK::Defocus: {
        RuleApp r;
        Sequent prem;
        LabelGen g2 = gen;
        if (s.active_out()) {
          std::string a = g2.covar();
          r = RuleApp{RK::Mu, a, false, {}, nullptr};
          prem = Sequent::make_passive(s.left, s_leaf_out(a, s.active));
        } else {
          std::string x = g2.var();
          r = RuleApp{RK::MuTilde, x, false, {}, nullptr};
          prem = Sequent::make_passive(s_leaf_in(x, s.active), s.right);
        }
        for (auto& [sp, sgen] : extract(e.children[0], prem, path, want, g2))
          out.emplace_back(mk_proof(s, r, {sp}), sgen);
        return;
      }
      case EK::FocusIn: {
        Sequent prem = Sequent::make_active_in(s.left->formula, s.right);
        RuleApp r{RK::Focus, s.left->label, true, {}, nullptr};
        for (auto& [sp, sgen] : extract(e.children[0], prem, path, want, gen))
          out.emplace_back(mk_proof(s, r, {sp}), sgen);
        return;
      }
      case EK::FocusOut: {
        Sequent prem = Sequent::make_active_out(s.left, s.right->formula);
        RuleApp r{RK::Focus, s.right->label, false, {}, nullptr};
        for (auto& [sp, sgen] : extract(e.children[0], prem, path, want, gen))
          out.emplace_back(mk_proof(s, r, {sp}), sgen);
        return;
      }
      case EK::Distr: {
        auto moves = distr_premises(s, g.cfg);
        if (e.idx >= static_cast<int>(moves.size())) return;
        const Move& m = moves[e.idx];
        RuleApp r{RK::Structural, m.rule, false, {}, nullptr};
        for (auto& [sp, sgen] : extract(e.children[0], m.result, path, want, gen))
          out.emplace_back(mk_proof(s, r, {sp}), sgen);
        return;
      }
      case EK::Display: {
        auto moves = display_moves(s);
        if (e.idx >= static_cast<int>(moves.size())) return;
        const Move& m = moves[e.idx];
        RuleApp r{RK::Structural, m.rule, false, {}, nullptr};
        for (auto& [sp, sgen] : extract(e.children[0], m.result, path, want, gen))
          out.emplace_back(mk_proof(s, r, {sp}), sgen);
        return;
      }
    }
  }
};

std::vector<ProofP> run(const Sequent& goal, const RuleConfig& cfg, size_t limit, size_t max_steps,
                        SearchStats* stats) {
  cfg.validate();
  if (!labels_distinct(goal)) throw ProofError("goal sequent has duplicate labels");
  Graph g(cfg, max_steps);
  g.build(goal);
  g.mark();
  if (stats) stats->nodes = g.nodes.size();
  if (!g.nodes[0].provable) return {};
  Extractor ex{g, limit};
  std::unordered_set<int> path;
  LabelGen gen;
  // continue the fresh-name sequence past any labels already in the goal
  for (auto& [n, co] : sequent_labels(goal)) {
    if (n.size() > 1 && (n[0] == 'x' || n[0] == 'a')) {
      int v = atoi(n.c_str() + 1);
      if (n[0] == 'x' && v > gen.nv) gen.nv = v;
      if (n[0] == 'a' && v > gen.nc) gen.nc = v;
    }
  }
  auto found = ex.extract(0, goal, path, limit, gen);
  std::vector<ProofP> out;
  out.reserve(found.size());
  for (auto& [p, pgen] : found) out.push_back(p);
  return out;
}

}  // namespace

std::optional<ProofP> prove(const Sequent& goal, const RuleConfig& cfg, size_t max_steps,
                            SearchStats* stats) {
  auto proofs = run(goal, cfg, 1, max_steps, stats);
  if (proofs.empty()) return std::nullopt;
  return proofs[0];
}

std::optional<ProofP> prove(const std::string& arrow, const RuleConfig& cfg, size_t max_steps) {
  auto [a, b] = parse_arrow(arrow);
  return prove(embed_arrow(a, b), cfg, max_steps);
}

std::vector<ProofP> enumerate_proofs(const Sequent& goal, const RuleConfig& cfg, size_t limit,
                                     size_t max_steps, SearchStats* stats) {
  return run(goal, cfg, limit, max_steps, stats);
}

std::vector<ProofP> enumerate_proofs(const std::string& arrow, const RuleConfig& cfg, size_t limit,
                                     size_t max_steps) {
  auto [a, b] = parse_arrow(arrow);
  return enumerate_proofs(embed_arrow(a, b), cfg, limit, max_steps);
}

}  // namespace lg
