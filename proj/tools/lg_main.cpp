#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lg/cps.hpp"
#include "lg/readings.hpp"

using nlohmann::json;

namespace {

lg::RuleConfig parse_rules(const std::string& spec, bool allow_both) {
  lg::RuleConfig cfg;
  cfg.allow_both_groups = allow_both;
  if (spec.empty()) return cfg;
  cfg.distr_binary = cfg.distr_unary = cfg.distr_inverse = false;
  std::string cur;
  auto eat = [&](const std::string& name) {
    if (name.empty() || name == "none") return;
    if (name == "distr")
      cfg.distr_binary = true;
    else if (name == "distr-unary")
      cfg.distr_unary = true;
    else if (name == "distr-inv")
      cfg.distr_inverse = true;
    else
      throw CLI::ValidationError("--rules", "unknown rule group: " + name);
  };
  for (char c : spec) {
    if (c == ',') {
      eat(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  eat(cur);
  return cfg;
}

void warn_both_groups(const lg::RuleConfig& cfg) {
  if (cfg.both_groups())
    std::cerr << "warning: distr and distr-inv enabled together; the combined system no "
                 "longer preserves the non-associativity/non-commutativity of * and +\n";
}

json proof_json(const lg::ProofP& p) {
  json j;
  j["rule"] = lg::rule_name(p->rule);
  j["conclusion"] = lg::show(p->conclusion);
  j["premises"] = json::array();
  for (auto& q : p->premises) j["premises"].push_back(proof_json(q));
  return j;
}

int run(int argc, char** argv) {
  CLI::App app{"Proof search and CPS semantics for the Lambek-Grishin calculus with Galois negations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string rules_spec;
  bool allow_both = false;
  bool as_json = false;
  size_t max_steps = 0;
  app.add_option("--rules", rules_spec,
                 "comma list of rule groups: distr,distr-unary,distr-inv (or none)");
  app.add_flag("--allow-both", allow_both, "permit distr together with distr-inv");
  app.add_flag("--json", as_json, "JSON output");
  app.add_option("--max-steps", max_steps, "abort search after this many expanded states");

  // prove
  auto* c_prove = app.add_subcommand("prove", "decide an arrow sequent 'F -> G'");
  std::string arrow;
  c_prove->add_option("sequent", arrow, "arrow sequent")->required();

  // proofs
  auto* c_proofs = app.add_subcommand("proofs", "enumerate proofs of an arrow sequent");
  std::string arrow2;
  size_t limit = 16;
  bool with_terms = false;
  c_proofs->add_option("sequent", arrow2)->required();
  c_proofs->add_option("--limit", limit, "maximum number of proofs");
  c_proofs->add_flag("--terms", with_terms, "print the CPS term of each proof");

  // readings
  auto* c_read = app.add_subcommand("readings", "semantic readings of a sentence");
  std::string lexicon_path, goal_text, sentence, brackets;
  bool do_eval = false;
  size_t rlimit = SIZE_MAX;
  c_read->add_option("--lexicon", lexicon_path)->required();
  c_read->add_option("--goal", goal_text)->required();
  c_read->add_option("--sentence", sentence)->required();
  c_read->add_option("--brackets", brackets, "explicit constituent structure");
  c_read->add_option("--limit", rlimit, "maximum number of readings");
  c_read->add_flag("--eval", do_eval, "apply the trivial continuation");

  // sym
  auto* c_sym = app.add_subcommand("sym", "apply a symmetry to a formula");
  std::string sym_formula;
  bool sym_bowtie = false, sym_infinity = false;
  c_sym->add_option("formula", sym_formula)->required();
  c_sym->add_flag("--bowtie", sym_bowtie);
  c_sym->add_flag("--infinity", sym_infinity);

  // check-lexicon
  auto* c_check = app.add_subcommand("check-lexicon", "validate a lexicon file");
  std::string check_path;
  c_check->add_option("file", check_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  lg::RuleConfig cfg = parse_rules(rules_spec, allow_both);
  cfg.validate();
  warn_both_groups(cfg);

  if (c_prove->parsed()) {
    auto proof = lg::prove(arrow, cfg, max_steps);
    if (!proof) {
      std::cerr << "not derivable\n";
      return 1;
    }
    if (as_json)
      std::cout << proof_json(*proof).dump(2) << "\n";
    else
      std::cout << lg::show(*proof);
    return 0;
  }

  if (c_proofs->parsed()) {
    auto proofs = lg::enumerate_proofs(arrow2, cfg, limit, max_steps);
    if (proofs.empty()) {
      std::cerr << "not derivable\n";
      return 1;
    }
    json all = json::array();
    for (size_t i = 0; i < proofs.size(); i++) {
      if (as_json) {
        json j = proof_json(proofs[i]);
        if (with_terms) {
          auto tt = lg::cps_proof(proofs[i]);
          j["term"] = lg::show(tt.term);
          j["type"] = lg::show(tt.type);
        }
        all.push_back(std::move(j));
      } else {
        std::cout << "-- proof " << i + 1 << " --\n" << lg::show(proofs[i]);
        if (with_terms) {
          auto tt = lg::cps_proof(proofs[i]);
          std::cout << "term: " << lg::show(tt.term) << " : " << lg::show(tt.type) << "\n";
        }
      }
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return 0;
  }

  if (c_read->parsed()) {
    auto lex = lg::load_lexicon_file(lexicon_path);
    auto goal = lg::parse_formula(goal_text);
    lg::ReadingsOptions opt;
    opt.cfg = cfg;
    opt.brackets = brackets;
    opt.limit = rlimit;
    opt.max_steps = max_steps;
    auto rs = lg::readings(lg::split_tokens(sentence), goal, lex, opt);
    if (rs.empty()) {
      std::cerr << "no readings\n";
      return 1;
    }
    json all = json::array();
    for (auto& r : rs) {
      lg::TermP t = do_eval ? lg::evaluate(r.term, lex) : r.term;
      if (as_json)
        all.push_back(lg::show(t));
      else
        std::cout << lg::show(t) << "\n";
    }
    if (as_json) std::cout << all.dump(2) << "\n";
    return 0;
  }

  if (c_sym->parsed()) {
    if (sym_bowtie == sym_infinity)
      throw CLI::ValidationError("sym", "pass exactly one of --bowtie / --infinity");
    auto f = lg::parse_formula(sym_formula);
    std::cout << lg::show(sym_bowtie ? lg::bowtie(f) : lg::infinity(f)) << "\n";
    return 0;
  }

  if (c_check->parsed()) {
    auto lex = lg::load_lexicon_file(check_path);
    size_t n = 0;
    for (auto& [w, es] : lex.entries) n += es.size();
    std::cout << "lexicon ok: " << lex.atom_map.size() << " atoms, " << lex.constants.size()
              << " constants, " << n << " entries\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const lg::NoDerivation& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
