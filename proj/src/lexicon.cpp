#include "lg/lexicon.hpp"

#include <fstream>
#include <sstream>

namespace lg {

namespace {

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Lexicon load_lexicon(const std::string& text) {
  Lexicon lex;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::set<std::string> const_names;

  while (std::getline(in, line)) {
    lineno++;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto err = [&](const std::string& msg) {
      throw LexError("lexicon line " + std::to_string(lineno) + ": " + msg);
    };

    std::istringstream ls(line);
    std::string kw;
    ls >> kw;
    if (kw == "atom") {
      std::string name, eq;
      ls >> name >> eq;
      if (eq != "=") err("expected 'atom <name> = <type>'");
      std::string rest;
      std::getline(ls, rest);
      lex.atom_map[name] = parse_type(strip(rest));
    } else if (kw == "const") {
      std::string name, colon;
      ls >> name >> colon;
      if (colon != ":") err("expected 'const <name> : <type>'");
      std::string rest;
      std::getline(ls, rest);
      lex.constants[name] = parse_type(strip(rest));
      const_names.insert(name);
    } else if (kw == "word") {
      std::string rest;
      std::getline(ls, rest);
      rest = strip(rest);
      std::string w;
      size_t after = 0;
      if (!rest.empty() && rest[0] == '"') {
        auto close = rest.find('"', 1);
        if (close == std::string::npos) err("unterminated quoted word");
        w = rest.substr(1, close - 1);
        after = close + 1;
      } else {
        auto sp = rest.find_first_of(" \t:");
        if (sp == std::string::npos) err("expected 'word <w> : <formula> = <term>'");
        w = rest.substr(0, sp);
        after = sp;
      }
      auto colon = rest.find(':', after);
      if (colon == std::string::npos) err("expected ':' after word");
      auto eq = rest.find('=', colon);
      if (eq == std::string::npos) err("expected '=' after source type");
      FormulaP src;
      try {
        src = parse_formula(strip(rest.substr(colon + 1, eq - colon - 1)));
      } catch (const ParseError& e) {
        err(std::string("bad source type: ") + e.what());
      }
      TermP term;
      try {
        term = parse_term(strip(rest.substr(eq + 1)));
      } catch (const ParseError& e) {
        err(std::string("bad term: ") + e.what());
      }
      LexEntry entry{w, src, term};
      if (!lex.entries.count(w)) lex.words.push_back(w);
      for (auto& prev : lex.entries[w])
        if (formula_eq(prev.source_type, src))
          err("duplicate entry for '" + w + "' at the same source type");
      lex.entries[w].push_back(std::move(entry));
    } else {
      err("unknown directive '" + kw + "'");
    }
  }

  if (!lex.atom_map.count(kResponseAtom))
    throw LexError("lexicon must declare 'atom r = ...' (the response type)");

  // validate entries against the declared constants and atom map
  for (auto& w : lex.words) {
    for (auto& e : lex.entries[w]) {
      TermP resolved;
      try {
        resolved = resolve_constants(e.sem_term, const_names);
      } catch (const TypeError& ex) {
        throw LexError("word '" + w + "': " + ex.what());
      }
      TypeP expected;
      try {
        expected = lex_type(cps_type(e.source_type), lex.atom_map);
      } catch (const TypeError& ex) {
        throw LexError("word '" + w + "': " + ex.what());
      }
      TypeP actual;
      try {
        actual = typecheck(resolved, lex.constants);
      } catch (const TypeError& ex) {
        // fall back to checking against the expectation for a precise message
        try {
          typecheck_expect(resolved, lex.constants, expected, "word '" + w + "'");
          actual = expected;
        } catch (const TypeError&) {
          throw LexError("word '" + w + "': term does not typecheck (" + ex.what() +
                         "); expected " + show(expected));
        }
      }
      if (!type_eq(actual, expected))
        throw LexError("word '" + w + "': expected " + show(expected) + ", got " + show(actual));
      e.sem_term = resolved;
    }
  }
  return lex;
}

Lexicon load_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LexError("cannot open lexicon file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_lexicon(ss.str());
}

TermP lex_term(const TypedTerm& t, const Lexicon& lex, const std::map<std::string, std::string>& binding) {
  TermP out = t.term;
  for (auto& [name, ty] : t.free_env) {
    auto bit = binding.find(name);
    if (bit == binding.end()) throw LexError("no word bound to free variable " + name);
    const std::string& w = bit->second;
    auto eit = lex.entries.find(w);
    if (eit == lex.entries.end()) throw LexError("unknown word: " + w);
    const LexEntry* chosen = nullptr;
    for (auto& e : eit->second) {
      if (type_eq(cps_type(e.source_type), ty)) {
        if (chosen) throw LexError("ambiguous entries for '" + w + "' at type " + show(ty));
        chosen = &e;
      }
    }
    if (!chosen) throw LexError("no entry for '" + w + "' matches type " + show(ty));
    out = substitute(out, name, chosen->sem_term);
  }
  return out;
}

}  // namespace lg
