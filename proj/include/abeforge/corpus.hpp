/*
 *   Copyright 2026 The abeforge Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * A corpus bundles statements, named axiom systems and proof scripts. This
 * header holds the in-memory type, the JSON file format and corpus-level
 * replay. The built-in corpus lives in builtin_corpus.hpp.
 */

#ifndef ABEFORGE_CORPUS_HPP
#define ABEFORGE_CORPUS_HPP

#include <abeforge/proof.hpp>
#include <abeforge/statement.hpp>

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace abeforge {

/// Schema or consistency violation in a corpus file.
class corpus_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An axiom system with its members resolved to statements.
struct Theory {
  std::string name;
  std::vector<Statement> axioms;
};

struct Corpus {
  std::vector<Statement> statements;
  std::vector<AxiomSystem> systems;
  std::vector<ProofScript> scripts;

  const Statement* find(const std::string& id) const {
    for (const auto& s : statements)
      if (s.id() == id) return &s;
    return nullptr;
  }

  const Statement& statement(const std::string& id) const {
    if (const auto* s = find(id)) return *s;
    throw corpus_error("unknown statement '" + id + "'");
  }

  const ProofScript* script(const std::string& id) const {
    for (const auto& s : scripts)
      if (s.id == id) return &s;
    return nullptr;
  }

  const AxiomSystem& axiom_system(const std::string& name) const {
    for (const auto& a : systems)
      if (a.name == name) return a;
    throw corpus_error("unknown axiom system '" + name + "'");
  }

  Theory theory(const std::string& name) const {
    Theory t{name, {}};
    for (const auto& id : axiom_system(name).members) t.axioms.push_back(statement(id));
    return t;
  }

  std::vector<const Statement*> with_role(Role r) const {
    std::vector<const Statement*> out;
    for (const auto& s : statements)
      if (s.role() == r) out.push_back(&s);
    return out;
  }

  std::map<std::string, Statement> registry() const {
    std::map<std::string, Statement> m;
    for (const auto& s : statements) m.emplace(s.id(), s);
    return m;
  }
};

/// Replays every script in order with all axioms admitted.
inline ReplayReport verify_corpus(const Corpus& c, Environment& env) {
  for (const auto* ax : c.with_role(Role::axiom)) env.admit(*ax);
  return replay_scripts(c.scripts, c.registry(), env);
}

inline ReplayReport verify_corpus(const Corpus& c) {
  Environment env;
  return verify_corpus(c, env);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson literal_json(const Literal& l) {
  ojson j;
  j["lhs"] = format_term(l.lhs);
  j["polarity"] = l.positive() ? "=" : "!=";
  j["rhs"] = format_term(l.rhs);
  return j;
}

inline ojson subst_json(const Substitution& s) {
  ojson j = ojson::object();
  for (const auto& [v, t] : s) j[v] = format_term(t);
  return j;
}

inline ojson rewrite_json(const Rewrite& r, const char* rule) {
  ojson j;
  j["rule"] = rule;
  j["by"] = r.by.str();
  j["subst"] = subst_json(r.subst);
  j["pos"] = r.position.str();
  j["dir"] = r.direction == Direction::l2r ? "l2r" : "r2l";
  return j;
}

inline ojson steps_json(const std::vector<ProofStep>& steps) {
  ojson arr = ojson::array();
  for (const auto& st : steps) {
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          ojson j;
          if constexpr (std::is_same_v<T, Rewrite>) {
            j = rewrite_json(s, "rewrite");
          } else if constexpr (std::is_same_v<T, ClauseInstantiate>) {
            j["rule"] = "clause-instantiate";
            j["clause"] = s.clause;
            j["subst"] = subst_json(s.subst);
          } else if constexpr (std::is_same_v<T, LiteralElim>) {
            j["rule"] = "literal-elim";
            j["literal"] = s.literal;
            ojson chain = ojson::array();
            for (const auto& r : s.chain) chain.push_back(rewrite_json(r, "rewrite"));
            j["chain"] = chain;
          } else if constexpr (std::is_same_v<T, ClauseLiteralRewrite>) {
            ojson r = rewrite_json(s.rewrite, "clause-literal-rewrite");
            j["rule"] = r["rule"];
            j["literal"] = s.literal;
            for (const char* k : {"by", "subst", "pos", "dir"}) j[k] = r[k];
          } else if constexpr (std::is_same_v<T, ApplyClauseSplit>) {
            j["rule"] = "split";
            j["clause"] = s.clause;
            j["subst"] = subst_json(s.subst);
            ojson br = ojson::array();
            for (const auto& b : s.branches) br.push_back(steps_json(b));
            j["branches"] = br;
          } else if constexpr (std::is_same_v<T, CloseByHypothesisConflict>) {
            j["rule"] = "close-conflict";
            j["hypothesis"] = s.hypothesis;
          } else {
            j["rule"] = "close-refl";
          }
          arr.push_back(std::move(j));
        },
        st.step);
  }
  return arr;
}

inline ojson statement_json(const Statement& s) {
  ojson j;
  j["id"] = s.id();
  j["kind"] = to_string(s.kind());
  j["role"] = to_string(s.role());
  if (!s.tag().empty()) j["tag"] = s.tag();
  switch (s.kind()) {
    case StatementKind::identity:
      j["lhs"] = format_term(s.lhs());
      j["rhs"] = format_term(s.rhs());
      break;
    case StatementKind::clause: {
      ojson lits = ojson::array();
      for (const auto& l : s.literals()) lits.push_back(literal_json(l));
      j["literals"] = lits;
      break;
    }
    case StatementKind::quasi: {
      ojson hyps = ojson::array();
      for (const auto& l : s.hypotheses()) hyps.push_back(literal_json(l));
      j["hypotheses"] = hyps;
      j["conclusion"] = literal_json(s.conclusion());
      break;
    }
  }
  if (!s.note().empty()) j["note"] = s.note();
  return j;
}

// -- reading --

using json = nlohmann::json;

class CorpusReader {
 public:
  /// With `base`, a document without "statements" borrows the statements
  /// and systems of `base` and contributes only its scripts.
  Corpus read(const json& doc, const Corpus* base = nullptr) {
    if (!doc.is_object()) fail("corpus must be a JSON object");
    Corpus c;
    const bool borrowed = base && !doc.contains("statements");
    if (borrowed) {
      c.statements = base->statements;
      c.systems = base->systems;
    } else {
      for (const auto& js : array(doc, "statements", "corpus")) c.statements.push_back(statement(js));
    }
    std::set<std::string> ids;
    for (const auto& s : c.statements)
      if (!ids.insert(s.id()).second) fail("duplicate statement id '" + s.id() + "'");

    if (!borrowed && doc.contains("systems")) {
      for (const auto& js : array(doc, "systems", "corpus")) {
        AxiomSystem a{str(js, "name", "system"), {}};
        for (const auto& m : array(js, "members", "system " + a.name)) {
          if (!m.is_string()) fail("system " + a.name + ": members must be strings");
          if (!ids.count(m.get<std::string>()))
            fail("system " + a.name + " references unknown statement '" + m.get<std::string>() + "'");
          a.members.push_back(m.get<std::string>());
        }
        c.systems.push_back(std::move(a));
      }
    }
    for (const auto& js : array(doc, "scripts", "corpus")) c.scripts.push_back(script(js, ids));
    return c;
  }

 private:
  [[noreturn]] static void fail(const std::string& msg) { throw corpus_error(msg); }

  static const json& field(const json& j, const char* key, const std::string& ctx) {
    if (!j.is_object() || !j.contains(key)) fail(ctx + ": missing field '" + key + "'");
    return j.at(key);
  }

  static const json& array(const json& j, const char* key, const std::string& ctx) {
    const json& a = field(j, key, ctx);
    if (!a.is_array()) fail(ctx + ": field '" + key + "' must be an array");
    return a;
  }

  static std::string str(const json& j, const char* key, const std::string& ctx) {
    const json& s = field(j, key, ctx);
    if (!s.is_string()) fail(ctx + ": field '" + key + "' must be a string");
    return s.get<std::string>();
  }

  static std::size_t index(const json& j, const char* key, const std::string& ctx) {
    const json& s = field(j, key, ctx);
    if (!s.is_number_unsigned()) fail(ctx + ": field '" + key + "' must be a positive integer");
    return s.get<std::size_t>();
  }

  Term term(const std::string& text, const std::string& ctx) const {
    try {
      return parse_term(text, constants_);
    } catch (const std::exception& e) {
      fail(ctx + ": bad term \"" + text + "\": " + e.what());
    }
  }

  Literal literal(const json& j, const std::string& ctx) const {
    std::string pol = str(j, "polarity", ctx);
    if (pol != "=" && pol != "!=") fail(ctx + ": polarity must be \"=\" or \"!=\"");
    return {pol == "=" ? Polarity::equal : Polarity::not_equal, term(str(j, "lhs", ctx), ctx),
            term(str(j, "rhs", ctx), ctx)};
  }

  Statement statement(const json& j) {
    std::string id = str(j, "id", "statement");
    std::string ctx = "statement " + id;
    std::string kind = str(j, "kind", ctx);
    Statement s;
    try {
      if (kind == "identity") {
        s = Statement::identity(id, term(str(j, "lhs", ctx), ctx), term(str(j, "rhs", ctx), ctx));
      } else if (kind == "clause") {
        Clause lits;
        for (const auto& l : array(j, "literals", ctx)) lits.push_back(literal(l, ctx));
        s = Statement::clause(id, std::move(lits));
      } else if (kind == "quasi") {
        std::vector<Literal> hyps;
        for (const auto& l : array(j, "hypotheses", ctx)) hyps.push_back(literal(l, ctx));
        s = Statement::quasi(id, std::move(hyps), literal(field(j, "conclusion", ctx), ctx));
      } else {
        fail(ctx + ": unknown kind '" + kind + "'");
      }
    } catch (const std::invalid_argument& e) {
      fail(ctx + ": " + e.what());
    }
    std::string role = j.contains("role") ? str(j, "role", ctx) : "lemma";
    if (role == "axiom")
      s.with_role(Role::axiom);
    else if (role == "lemma")
      s.with_role(Role::lemma);
    else if (role == "property")
      s.with_role(Role::property);
    else
      fail(ctx + ": unknown role '" + role + "'");
    if (j.contains("tag")) s.with_tag(str(j, "tag", ctx));
    if (j.contains("note")) s.with_note(str(j, "note", ctx));
    return s;
  }

  void require_id(const std::string& id, const std::string& ctx) const {
    if (!ids_->count(id)) fail(ctx + ": unknown statement id '" + id + "'");
  }

  Substitution subst(const json& j, const std::string& ctx) const {
    const json& s = field(j, "subst", ctx);
    if (!s.is_object()) fail(ctx + ": subst must be an object");
    Substitution out;
    for (auto it = s.begin(); it != s.end(); ++it) {
      if (!is_identifier(it.key())) fail(ctx + ": bad variable name '" + it.key() + "'");
      if (!it.value().is_string()) fail(ctx + ": subst images must be term strings");
      out.emplace(it.key(), term(it.value().get<std::string>(), ctx));
    }
    return out;
  }

  Rewrite rewrite(const json& j, const std::string& ctx) const {
    Rewrite r;
    std::string by = str(j, "by", ctx);
    if (by == "hyp:branch") {
      r.by = Justification::branch_literal();
    } else if (by.rfind("hyp:", 0) == 0) {
      std::size_t k = 0;
      try {
        k = std::stoul(by.substr(4));
      } catch (const std::exception&) {
        fail(ctx + ": bad hypothesis reference '" + by + "'");
      }
      r.by = Justification::hyp(k);
    } else {
      require_id(by, ctx);
      r.by = Justification::statement(by);
    }
    r.subst = subst(j, ctx);
    try {
      r.position = Position::parse(str(j, "pos", ctx));
    } catch (const parse_error& e) {
      fail(ctx + ": " + e.what());
    }
    std::string dir = str(j, "dir", ctx);
    if (dir != "l2r" && dir != "r2l") fail(ctx + ": dir must be \"l2r\" or \"r2l\"");
    r.direction = dir == "l2r" ? Direction::l2r : Direction::r2l;
    return r;
  }

  std::vector<ProofStep> steps(const json& arr, const std::string& ctx) const {
    if (!arr.is_array()) fail(ctx + ": steps must be an array");
    std::vector<ProofStep> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const json& j = arr[i];
      std::string sctx = ctx + " step " + std::to_string(i + 1);
      std::string rule = str(j, "rule", sctx);
      if (rule == "rewrite") {
        out.emplace_back(rewrite(j, sctx));
      } else if (rule == "clause-instantiate") {
        std::string id = str(j, "clause", sctx);
        require_id(id, sctx);
        out.emplace_back(ClauseInstantiate{id, subst(j, sctx)});
      } else if (rule == "literal-elim") {
        LiteralElim el{index(j, "literal", sctx), {}};
        for (const auto& r : array(j, "chain", sctx)) el.chain.push_back(rewrite(r, sctx + " chain"));
        out.emplace_back(std::move(el));
      } else if (rule == "clause-literal-rewrite") {
        out.emplace_back(ClauseLiteralRewrite{index(j, "literal", sctx), rewrite(j, sctx)});
      } else if (rule == "split") {
        std::string id = str(j, "clause", sctx);
        require_id(id, sctx);
        ApplyClauseSplit sp{id, subst(j, sctx), {}};
        const json& br = array(j, "branches", sctx);
        for (std::size_t b = 0; b < br.size(); ++b)
          sp.branches.push_back(steps(br[b], sctx + " branch " + std::to_string(b + 1)));
        out.emplace_back(std::move(sp));
      } else if (rule == "close-conflict") {
        out.emplace_back(CloseByHypothesisConflict{index(j, "hypothesis", sctx)});
      } else if (rule == "close-refl") {
        out.emplace_back(CloseByReflexivity{});
      } else {
        fail(sctx + ": unknown rule '" + rule + "'");
      }
    }
    return out;
  }

  ProofScript script(const json& j, const std::set<std::string>& ids) {
    ids_ = &ids;
    ProofScript p;
    p.target = str(j, "target", "script");
    p.id = j.contains("id") ? str(j, "id", "script " + p.target) : p.target;
    std::string ctx = "script " + p.id;
    require_id(p.target, ctx);
    constants_.clear();
    if (j.contains("constants")) {
      for (const auto& c : array(j, "constants", ctx)) {
        if (!c.is_string() || !is_identifier(c.get<std::string>()))
          fail(ctx + ": constants must be identifiers");
        p.constants.push_back(c.get<std::string>());
        constants_.insert(p.constants.back());
      }
    }
    if (j.contains("depends_on")) {
      for (const auto& d : array(j, "depends_on", ctx)) {
        if (!d.is_string()) fail(ctx + ": depends_on entries must be strings");
        require_id(d.get<std::string>(), ctx + " depends_on");
        p.depends_on.push_back(d.get<std::string>());
      }
    }
    if (j.contains("hypotheses"))
      for (const auto& h : array(j, "hypotheses", ctx)) p.hypotheses.push_back(literal(h, ctx));
    p.steps = steps(field(j, "steps", ctx), ctx);
    if (j.contains("note")) p.note = str(j, "note", ctx);
    constants_.clear();
    return p;
  }

  std::set<std::string> constants_;
  const std::set<std::string>* ids_ = nullptr;
};

}  // namespace detail

inline nlohmann::ordered_json corpus_to_json(const Corpus& c) {
  using detail::ojson;
  ojson doc;
  ojson st = ojson::array();
  for (const auto& s : c.statements) st.push_back(detail::statement_json(s));
  doc["statements"] = st;
  ojson sys = ojson::array();
  for (const auto& a : c.systems) {
    ojson j;
    j["name"] = a.name;
    j["members"] = a.members;
    sys.push_back(j);
  }
  doc["systems"] = sys;
  ojson sc = ojson::array();
  for (const auto& p : c.scripts) {
    ojson j;
    j["id"] = p.id;
    j["target"] = p.target;
    j["depends_on"] = p.depends_on;
    j["constants"] = p.constants;
    ojson hyps = ojson::array();
    for (const auto& h : p.hypotheses) hyps.push_back(detail::literal_json(h));
    j["hypotheses"] = hyps;
    j["steps"] = detail::steps_json(p.steps);
    if (!p.note.empty()) j["note"] = p.note;
    sc.push_back(j);
  }
  doc["scripts"] = sc;
  return doc;
}

/// Canonical text form: two-space indentation, trailing newline.
inline std::string serialize_corpus(const Corpus& c) { return corpus_to_json(c).dump(2) + "\n"; }

/// Parses a corpus document. If `base` is given and the document has no
/// "statements" field, its scripts are read against the statements of
/// `base` (a script-only file).
inline Corpus parse_corpus(std::string_view text, const Corpus* base = nullptr) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw corpus_error(std::string("malformed JSON: ") + e.what());
  }
  return detail::CorpusReader().read(doc, base);
}

inline Corpus load_corpus_file(const std::string& path, const Corpus* base = nullptr) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw corpus_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_corpus(ss.str(), base);
}

}  // namespace abeforge

#endif  // ABEFORGE_CORPUS_HPP
