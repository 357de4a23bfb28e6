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

// abeforge command-line driver.
//
// Exit codes: 0 ok, 2 proof failure, 3 input error, 4 counterexample.

#include <abeforge/abeforge.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace abeforge;
using ojson = nlohmann::ordered_json;

enum Exit : int { ok = 0, proof_failure = 2, input_error = 3, violation = 4 };

constexpr std::size_t max_search_size = 7;

struct Config {
  std::string emit = "text";
  std::size_t threads = 1;
  std::optional<std::uint64_t> budget;
  bool timings = false;

  std::string axioms;
  std::size_t size = 0;
  std::vector<std::string> checks;
  std::string property;
  std::string path;
  std::string show;

  bool json() const { return emit == "json"; }

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.threads = threads;
    // The variable only caps the pool; results do not depend on it.
    if (const char* cap = std::getenv("ABEFORGE_THREADS")) {
      char* end = nullptr;
      unsigned long v = std::strtoul(cap, &end, 10);
      if (end != cap && *end == '\0' && v > 0) o.threads = std::min<std::size_t>(o.threads, v);
    }
    o.budget_nodes = budget;
    return o;
  }
};

struct input_failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_json(const ojson& j) { std::cout << j.dump(2) << "\n"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw input_failure("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Theory theory_for(const std::string& name) {
  try {
    return load_corpus().theory(name);
  } catch (const corpus_error&) {
    std::string known;
    for (const auto& s : load_corpus().systems) known += (known.empty() ? "" : ", ") + s.name;
    throw input_failure("unknown axiom system '" + name + "' (known: " + known + ")");
  }
}

const Statement& statement_for(const std::string& id) {
  const auto* s = load_corpus().find(id);
  if (!s) throw input_failure("unknown statement '" + id + "'");
  return *s;
}

void check_size(std::size_t n, std::size_t hi, const char* what) {
  if (n < 1 || n > hi)
    throw input_failure(std::string(what) + " must be between 1 and " + std::to_string(hi));
}

std::string hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string tag_comment(const Statement& s) { return s.tag().empty() ? std::string() : "  # " + s.tag(); }

// -- replay ------------------------------------------------------------------

int cmd_replay(const Config& cfg) {
  const Corpus& builtin = load_corpus();
  Corpus corpus = builtin;
  Environment env;
  if (!cfg.path.empty()) {
    std::string text = read_file(cfg.path);
    try {
      corpus = parse_corpus(text, &builtin);
    } catch (const corpus_error& e) {
      throw input_failure(cfg.path + ": " + e.what());
    }
    // A script-only file is checked on top of the verified built-in corpus.
    if (!nlohmann::json::parse(text).contains("statements")) {
      auto base = verify_corpus(builtin, env);
      if (!base.ok()) throw std::logic_error("built-in corpus failed to verify");
    } else {
      for (const auto* ax : corpus.with_role(Role::axiom)) env.admit(*ax);
    }
  } else {
    for (const auto* ax : corpus.with_role(Role::axiom)) env.admit(*ax);
  }

  const ProofScript* shown = nullptr;
  if (!cfg.show.empty()) {
    shown = corpus.script(cfg.show);
    if (!shown)
      for (const auto& p : corpus.scripts)
        if (p.target == cfg.show) shown = &p;
    if (!shown) throw input_failure("no script named '" + cfg.show + "'");
  }

  ReplayReport rep = replay_scripts(corpus.scripts, corpus.registry(), env);

  if (cfg.json()) {
    ojson j;
    ojson arr = ojson::array();
    for (const auto& o : rep.outcomes) {
      ojson e;
      e["id"] = o.script;
      e["target"] = o.target;
      e["status"] = to_string(o.status);
      if (o.result) e["hash"] = hex(o.result->script_hash);
      if (!o.diagnostic.empty()) e["diagnostic"] = o.diagnostic;
      arr.push_back(e);
    }
    j["scripts"] = arr;
    j["verified"] = rep.verified();
    j["total"] = rep.outcomes.size();
    if (shown) j["show"] = format_script(*shown);
    print_json(j);
  } else if (shown) {
    const auto& target = corpus.statement(shown->target);
    std::cout << "# " << target.id() << ": " << target.str() << tag_comment(target) << "\n";
    std::cout << format_script(*shown);
    for (const auto& o : rep.outcomes)
      if (o.script == shown->id) {
        std::cout << "status: " << to_string(o.status) << "\n";
        if (!o.diagnostic.empty()) std::cout << o.diagnostic << "\n";
      }
  } else {
    for (const auto& o : rep.outcomes) {
      std::printf("%-9s %-12s %s\n", to_string(o.status), o.script.c_str(), o.target.c_str());
      if (!o.diagnostic.empty()) std::cout << "  " << o.diagnostic << "\n";
    }
    std::cout << rep.verified() << "/" << rep.outcomes.size() << " verified\n";
  }
  return rep.ok() ? ok : proof_failure;
}

// -- enumerate -----------------------------------------------------------------

int cmd_enumerate(const Config& cfg) {
  check_size(cfg.size, max_search_size, "--max-size");
  Theory th = theory_for(cfg.axioms);
  std::vector<Statement> props;
  for (const auto& id : cfg.checks) props.push_back(statement_for(id));
  auto rep = run_enumeration(th, cfg.size, props, cfg.enumeration());
  if (cfg.json())
    print_json(rep.to_json(cfg.timings));
  else
    std::cout << rep.text(cfg.timings);
  return ok;
}

// -- check -------------------------------------------------------------------

int cmd_check(const Config& cfg) {
  Theory th = theory_for(cfg.axioms);
  const Statement* prop = cfg.property.empty() ? nullptr : &statement_for(cfg.property);
  FiniteAlgebra m = [&] {
    try {
      return parse_model(read_file(cfg.path));
    } catch (const model_error& e) {
      throw input_failure(cfg.path + ": " + e.what());
    }
  }();

  Verdict axioms = is_model(m, th);
  std::optional<Verdict> property;
  if (axioms && prop) property = satisfies(m, *prop);

  if (cfg.json()) {
    ojson j;
    j["axioms"] = th.name;
    j["model"] = static_cast<bool>(axioms);
    if (!axioms) j["violation"] = witness_to_json(*axioms.witness);
    if (prop) {
      ojson p;
      p["id"] = prop->id();
      if (!property)
        p["status"] = "unchecked";
      else if (*property)
        p["status"] = "holds";
      else {
        p["status"] = "counterexample";
        p["witness"] = witness_to_json(*property->witness);
      }
      j["property"] = p;
    }
    print_json(j);
  } else if (!axioms) {
    std::cout << "model: no; " << axioms.witness->statement << " violated, witness " << axioms.witness->str()
              << "\n";
  } else {
    std::cout << "model: yes";
    if (property) {
      if (*property)
        std::cout << "; " << prop->id() << ": holds";
      else
        std::cout << "; " << prop->id() << " violated, witness " << property->witness->str();
    }
    std::cout << "\n";
  }
  return axioms && (!property || *property) ? ok : violation;
}

// -- search ------------------------------------------------------------------

int cmd_search(const Config& cfg) {
  check_size(cfg.size, max_search_size, "--max-size");
  Theory th = theory_for(cfg.axioms);
  const Statement& prop = statement_for(cfg.property);
  auto rep = run_enumeration(th, cfg.size, {prop}, cfg.enumeration(), true);
  const auto& v = rep.properties.front();

  if (v.status == PropertyVerdict::Status::counterexample) {
    // Re-check the reported model independently of the search.
    if (!is_model(*v.model, th) || !replays(*v.model, prop, *v.witness)) {
      std::cerr << "abeforge: error: counterexample failed re-verification\n";
      return proof_failure;
    }
  }

  if (cfg.json()) {
    print_json(rep.to_json(cfg.timings));
  } else {
    std::cout << rep.text(cfg.timings);
    if (v.status == PropertyVerdict::Status::counterexample) {
      std::cout << "counterexample of size " << v.model->size() << ":\n"
                << model_to_json(*v.model).dump() << "\n"
                << prop.id() << " violated, witness " << v.witness->str() << "\n";
    } else if (v.status == PropertyVerdict::Status::inconclusive) {
      std::size_t done = 0;
      for (const auto& s : rep.sizes)
        if (!s.budget_exceeded && s.n == done + 1) done = s.n;
      std::cout << "none up to " << done << "; budget exceeded beyond\n";
    } else {
      std::cout << "none up to " << cfg.size << "\n";
    }
  }
  return v.status == PropertyVerdict::Status::counterexample ? violation : ok;
}

// -- oracle ------------------------------------------------------------------

int cmd_oracle(const Config& cfg) {
  check_size(cfg.size, brute_force_max_size, "--size");
  Theory th = theory_for(cfg.axioms);
  OracleCounts c = brute_force_models(th, cfg.size);
  if (cfg.json()) {
    ojson j;
    j["axioms"] = th.name;
    j["size"] = cfg.size;
    j["labeled"] = c.labeled;
    j["classes"] = c.classes;
    print_json(j);
  } else {
    std::cout << "labeled " << c.labeled << ", classes " << c.classes << "\n";
  }
  return ok;
}

// -- corpus ------------------------------------------------------------------

int cmd_corpus_export(const Config& cfg) {
  std::ofstream out(cfg.path, std::ios::binary);
  if (!out) throw input_failure("cannot write '" + cfg.path + "'");
  out << serialize_corpus(load_corpus());
  return ok;
}

int cmd_corpus_show(const Config& cfg) {
  const Corpus& c = load_corpus();
  if (const auto* s = c.find(cfg.show)) {
    if (cfg.json()) {
      print_json(detail::statement_json(*s));
      return ok;
    }
    std::cout << s->id() << " (" << to_string(s->role()) << ", " << to_string(s->kind()) << ")"
              << tag_comment(*s) << "\n";
    std::cout << "  " << s->str() << "\n";
    if (s->kind() != StatementKind::identity) std::cout << "  clause form: " << format_clause(s->literals()) << "\n";
    if (!s->note().empty()) std::cout << "  # " << s->note() << "\n";
    for (const auto& p : c.scripts)
      if (p.target == s->id()) std::cout << "  proved by script " << p.id << "\n";
    return ok;
  }
  if (const auto* p = c.script(cfg.show)) {
    if (cfg.json()) {
      Corpus one;
      one.scripts.push_back(*p);
      print_json(corpus_to_json(one)["scripts"][0]);
      return ok;
    }
    const auto& target = c.statement(p->target);
    std::cout << "# " << target.id() << ": " << target.str() << tag_comment(target) << "\n";
    for (const auto& d : p->depends_on) {
      const auto& dep = c.statement(d);
      std::cout << "# uses " << dep.id() << ": " << dep.str() << tag_comment(dep) << "\n";
    }
    std::cout << format_script(*p);
    if (!p->note.empty()) std::cout << "# " << p->note << "\n";
    return ok;
  }
  throw input_failure("no statement or script named '" + cfg.show + "'");
}

}  // namespace

int main(int argc, char** argv) {
  Config cfg;
  CLI::App app{"abeforge: proof replay and finite model search for implicative aBE algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--emit", cfg.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Enumeration worker threads")->check(CLI::Range(1, 256));
  app.add_option("--budget-nodes", cfg.budget, "Node budget per size");
  app.add_flag("--timings", cfg.timings, "Include wall-clock timings in reports");

  auto* replay = app.add_subcommand("replay", "Replay proof scripts");
  replay->add_option("--script", cfg.path, "Corpus or script-only JSON file")->check(CLI::ExistingFile);
  replay->add_option("--show", cfg.show, "Pretty-print one script after replay");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate models up to isomorphism");
  enumerate->add_option("--axioms", cfg.axioms, "Axiom system")->required();
  enumerate->add_option("--max-size", cfg.size, "Largest carrier size")->required();
  enumerate->add_option("--check", cfg.checks, "Statements to check on every model");

  auto* check = app.add_subcommand("check", "Check one model file");
  check->add_option("--model", cfg.path, "Model JSON file")->required();
  check->add_option("--axioms", cfg.axioms, "Axiom system")->required();
  check->add_option("--property", cfg.property, "Statement to check");

  auto* search = app.add_subcommand("search", "Search for a counterexample");
  search->add_option("--axioms", cfg.axioms, "Axiom system")->required();
  search->add_option("--violates", cfg.property, "Statement to refute")->required();
  search->add_option("--max-size", cfg.size, "Largest carrier size")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force model counts for tiny sizes");
  oracle->add_option("--axioms", cfg.axioms, "Axiom system")->required();
  oracle->add_option("--size", cfg.size, "Carrier size")->required();

  auto* corpus = app.add_subcommand("corpus", "Inspect the built-in corpus");
  corpus->require_subcommand(1);
  auto* exp = corpus->add_subcommand("export", "Write the canonical corpus file");
  exp->add_option("--out", cfg.path, "Output path")->required();
  auto* show = corpus->add_subcommand("show", "Print a statement or script");
  show->add_option("id", cfg.show, "Statement or script id")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? ok : input_error;
  }

  try {
    if (*replay) return cmd_replay(cfg);
    if (*enumerate) return cmd_enumerate(cfg);
    if (*check) return cmd_check(cfg);
    if (*search) return cmd_search(cfg);
    if (*oracle) return cmd_oracle(cfg);
    if (*exp) return cmd_corpus_export(cfg);
    if (*show) return cmd_corpus_show(cfg);
  } catch (const input_failure& e) {
    std::cerr << "abeforge: error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    std::cerr << "abeforge: error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}
