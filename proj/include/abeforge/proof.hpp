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
 * Proof-script replay. A script is checked, never searched for. Three
 * shapes are accepted:
 *
 *  - rewrite chain: Rewrite steps turning the target's lhs into its rhs;
 *  - clause derivation: a ClauseInstantiate followed by LiteralElim and
 *    ClauseLiteralRewrite steps, ending at the target clause (up to literal
 *    order and orientation);
 *  - refutation: ground hypotheses that are the Skolemized negation of the
 *    target, then closing steps, optionally below a single clause split.
 *
 * Only identities and positive ground hypotheses rewrite. Clauses are used
 * by instantiation and splitting only.
 */

#ifndef ABEFORGE_PROOF_HPP
#define ABEFORGE_PROOF_HPP

#include <abeforge/statement.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace abeforge {

enum class Direction : std::uint8_t { l2r, r2l };

/// What a rewrite step uses: a verified identity, a hypothesis (1-based)
/// or the literal assumed in the current split branch.
struct Justification {
  enum class Source : std::uint8_t { statement, hypothesis, branch };

  Source source = Source::statement;
  std::string id;
  std::size_t hypothesis = 0;

  static Justification statement(std::string id) { return {Source::statement, std::move(id), 0}; }
  static Justification hyp(std::size_t k) { return {Source::hypothesis, {}, k}; }
  static Justification branch_literal() { return {Source::branch, {}, 0}; }

  std::string str() const {
    switch (source) {
      case Source::statement: return id;
      case Source::hypothesis: return "hyp:" + std::to_string(hypothesis);
      case Source::branch: return "hyp:branch";
    }
    return {};
  }

  friend bool operator==(const Justification&, const Justification&) = default;
};

struct Rewrite {
  Justification by;
  Substitution subst;
  Position position;
  Direction direction = Direction::l2r;
};

struct ClauseInstantiate {
  std::string clause;
  Substitution subst;
};

/// Deletes a disequation (1-based index) whose sides the chain proves equal.
struct LiteralElim {
  std::size_t literal = 0;
  std::vector<Rewrite> chain;
};

/// Rewrites inside one literal (1-based index). The first selector of the
/// rewrite position picks the side: L for lhs, R for rhs.
struct ClauseLiteralRewrite {
  std::size_t literal = 0;
  Rewrite rewrite;
};

struct ProofStep;

/// One branch per literal of the instantiated clause, in literal order.
struct ApplyClauseSplit {
  std::string clause;
  Substitution subst;
  std::vector<std::vector<ProofStep>> branches;
};

struct CloseByHypothesisConflict {
  std::size_t hypothesis = 0;
};

struct CloseByReflexivity {};

struct ProofStep {
  using Variant = std::variant<Rewrite, ClauseInstantiate, LiteralElim, ClauseLiteralRewrite,
                               ApplyClauseSplit, CloseByHypothesisConflict, CloseByReflexivity>;
  Variant step;

  template <typename T>
    requires(!std::is_same_v<std::decay_t<T>, ProofStep>)
  ProofStep(T s) : step(std::move(s)) {}  // NOLINT(google-explicit-constructor)

  const char* rule() const {
    static constexpr const char* names[] = {"rewrite", "clause-instantiate", "literal-elim",
                                            "clause-literal-rewrite", "split", "close-conflict",
                                            "close-refl"};
    return names[step.index()];
  }
};

struct ProofScript {
  std::string id;
  std::string target;
  std::vector<std::string> constants;
  std::vector<Literal> hypotheses;
  std::vector<ProofStep> steps;
  std::vector<std::string> depends_on;
  std::string note;
};

/// Failure while replaying a script. `step()` locates the failing step as
/// a path such as "step 1 / branch 1 / step 3".
class proof_error : public std::runtime_error {
 public:
  proof_error(std::string script, std::string step, std::string check, std::string expected = {},
              std::string found = {})
      : std::runtime_error(render(script, step, check, expected, found)),
        script_(std::move(script)),
        step_(std::move(step)),
        check_(std::move(check)),
        expected_(std::move(expected)),
        found_(std::move(found)) {}

  const std::string& script() const noexcept { return script_; }
  const std::string& step() const noexcept { return step_; }
  const std::string& check() const noexcept { return check_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  static std::string render(const std::string& script, const std::string& step,
                            const std::string& check, const std::string& expected,
                            const std::string& found) {
    std::string s = script.empty() ? std::string() : script + ": ";
    if (!step.empty()) s += step + ": ";
    s += check;
    if (!expected.empty() || !found.empty())
      s += "\n    expected: " + expected + "\n    found:    " + found;
    return s;
  }

  std::string script_, step_, check_, expected_, found_;
};

struct VerifiedStatement {
  Statement statement;
  std::string script;
  std::uint64_t script_hash = 0;
  std::chrono::system_clock::time_point verified_at;
};

/**
 * Append-only store of admitted axioms and verified statements. Concurrent
 * readers are allowed; appends are serialized.
 */
class Environment {
 public:
  Environment() = default;
  Environment(const Environment& o) {
    std::shared_lock lock(o.mutex_);
    entries_ = o.entries_;
  }
  Environment& operator=(const Environment&) = delete;

  void admit(const Statement& axiom) {
    std::unique_lock lock(mutex_);
    entries_.try_emplace(axiom.id(), Entry{axiom, std::nullopt});
  }

  /// Records a verified statement. An id that is already present keeps its
  /// first entry.
  void add(const VerifiedStatement& v) {
    std::unique_lock lock(mutex_);
    entries_.try_emplace(v.statement.id(), Entry{v.statement, v});
  }

  bool contains(const std::string& id) const {
    std::shared_lock lock(mutex_);
    return entries_.count(id) != 0;
  }

  std::optional<Statement> find(const std::string& id) const {
    std::shared_lock lock(mutex_);
    auto it = entries_.find(id);
    if (it == entries_.end()) return std::nullopt;
    return it->second.statement;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return entries_.size();
  }

 private:
  struct Entry {
    Statement statement;
    std::optional<VerifiedStatement> proof;
  };

  mutable std::shared_mutex mutex_;
  std::map<std::string, Entry> entries_;
};

// ---------------------------------------------------------------------------
// Rendering

inline std::string format_rewrite(const Rewrite& r) {
  std::string s = "rewrite by " + r.by.str();
  if (!r.subst.empty()) s += " " + format_substitution(r.subst);
  s += " at '" + r.position.str() + "' ";
  s += r.direction == Direction::l2r ? "l2r" : "r2l";
  return s;
}

namespace detail {

inline void render_steps(const std::vector<ProofStep>& steps, const std::string& indent,
                         std::ostringstream& os) {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    os << indent << i + 1 << ". ";
    std::visit(
        [&](const auto& s) {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, Rewrite>) {
            os << format_rewrite(s) << "\n";
          } else if constexpr (std::is_same_v<T, ClauseInstantiate>) {
            os << "instantiate " << s.clause << " " << format_substitution(s.subst) << "\n";
          } else if constexpr (std::is_same_v<T, LiteralElim>) {
            os << "eliminate literal " << s.literal << "\n";
            for (std::size_t j = 0; j < s.chain.size(); ++j)
              os << indent << "     " << j + 1 << ") " << format_rewrite(s.chain[j]) << "\n";
          } else if constexpr (std::is_same_v<T, ClauseLiteralRewrite>) {
            os << "in literal " << s.literal << ": " << format_rewrite(s.rewrite) << "\n";
          } else if constexpr (std::is_same_v<T, ApplyClauseSplit>) {
            os << "split on " << s.clause << " " << format_substitution(s.subst) << "\n";
            for (std::size_t b = 0; b < s.branches.size(); ++b) {
              os << indent << "   branch " << b + 1 << ":\n";
              render_steps(s.branches[b], indent + "     ", os);
            }
          } else if constexpr (std::is_same_v<T, CloseByHypothesisConflict>) {
            os << "close: conflicts with hypothesis " << s.hypothesis << "\n";
          } else {
            os << "close: reflexivity\n";
          }
        },
        steps[i].step);
  }
}

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace detail

/// Multi-line human-readable rendering; also the input of the script hash.
inline std::string format_script(const ProofScript& p) {
  std::ostringstream os;
  os << "script " << p.id << " proves " << p.target << "\n";
  if (!p.depends_on.empty()) {
    os << "  uses:";
    for (const auto& d : p.depends_on) os << " " << d;
    os << "\n";
  }
  if (!p.constants.empty()) {
    os << "  constants:";
    for (const auto& c : p.constants) os << " " << c;
    os << "\n";
  }
  for (std::size_t i = 0; i < p.hypotheses.size(); ++i)
    os << "  hypothesis " << i + 1 << ": " << format_literal(p.hypotheses[i]) << "\n";
  detail::render_steps(p.steps, "  ", os);
  return os.str();
}

inline std::uint64_t script_hash(const ProofScript& p) { return detail::fnv1a(format_script(p)); }

// ---------------------------------------------------------------------------
// Checking

namespace detail {

/// Single-script checker. Every failure goes through fail(), which stamps
/// the current step path.
class Replayer {
 public:
  Replayer(const ProofScript& script, const Environment& env, bool restrict_to_deps)
      : script_(script), env_(env), restrict_(restrict_to_deps),
        deps_(script.depends_on.begin(), script.depends_on.end()) {}

  [[noreturn]] void fail(const std::string& check, const std::string& expected = {},
                         const std::string& found = {}) const {
    std::string where;
    for (std::size_t i = 0; i < path_.size(); ++i) {
      if (i) where += " / ";
      where += path_[i];
    }
    throw proof_error(script_.id, where, check, expected, found);
  }

  void push(std::string seg) { path_.push_back(std::move(seg)); }
  void pop() { path_.pop_back(); }

  void set_hypotheses(std::span<const Literal> h) { hyps_ = h; }
  void set_ground(bool g) { ground_ = g; }

  Statement lookup(const std::string& id) const {
    if (restrict_ && !deps_.count(id)) fail("justification not among declared dependencies", "one of depends_on", id);
    auto st = env_.find(id);
    if (!st) fail("unknown justification", "verified statement", id);
    return *st;
  }

  void check_domain(const Statement& st, const Substitution& s) const {
    auto vars = st.variables();
    for (const auto& [v, img] : s) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end())
        fail("substitution binds a variable absent from " + st.id(), "variables of " + st.id(), v);
      if (ground_ && !is_ground(img))
        fail("substitution does not ground justification", "ground image for " + v, format_term(img));
    }
  }

  Term rewrite(const Term& current, const Rewrite& r, const Literal* branch) const {
    Term lhs, rhs;
    switch (r.by.source) {
      case Justification::Source::statement: {
        Statement st = lookup(r.by.id);
        if (!st.is_identity()) fail("justification is not an identity", "identity", r.by.id + " (" + to_string(st.kind()) + ")");
        check_domain(st, r.subst);
        lhs = substitute(st.lhs(), r.subst);
        rhs = substitute(st.rhs(), r.subst);
        if (ground_ && (!is_ground(lhs) || !is_ground(rhs)))
          fail("substitution does not ground justification", "ground instance of " + st.id(),
               format_term(lhs) + " = " + format_term(rhs));
        break;
      }
      case Justification::Source::hypothesis: {
        if (r.by.hypothesis < 1 || r.by.hypothesis > hyps_.size())
          fail("unknown justification", "hypothesis 1.." + std::to_string(hyps_.size()), r.by.str());
        const Literal& h = hyps_[r.by.hypothesis - 1];
        if (!h.positive()) fail("hypothesis is not an equation", "s = t", format_literal(h));
        if (!r.subst.empty()) fail("hypothesis rewrite takes no substitution", "{}", format_substitution(r.subst));
        lhs = h.lhs;
        rhs = h.rhs;
        break;
      }
      case Justification::Source::branch: {
        if (!branch) fail("unknown justification", "enclosing split branch", "hyp:branch");
        if (!branch->positive()) fail("branch literal is not an equation", "s = t", format_literal(*branch));
        if (!r.subst.empty()) fail("hypothesis rewrite takes no substitution", "{}", format_substitution(r.subst));
        lhs = branch->lhs;
        rhs = branch->rhs;
        break;
      }
    }
    const Term& source = r.direction == Direction::l2r ? lhs : rhs;
    const Term& target = r.direction == Direction::l2r ? rhs : lhs;
    Term found;
    try {
      found = subterm_at(current, r.position);
    } catch (const invalid_position& e) {
      fail("position invalid at selector " + std::to_string(e.selector_index()),
           "position within " + format_term(current), "'" + r.position.str() + "'");
    }
    if (found != source) fail("instantiated source does not match", format_term(source), format_term(found));
    return replace_at(current, r.position, target);
  }

  Term chain(Term current, const std::vector<Rewrite>& steps, const Literal* branch,
             const std::string& label = "chain step ") {
    for (std::size_t i = 0; i < steps.size(); ++i) {
      push(label + std::to_string(i + 1));
      current = rewrite(current, steps[i], branch);
      pop();
    }
    return current;
  }

 private:
  const ProofScript& script_;
  const Environment& env_;
  bool restrict_;
  std::set<std::string> deps_;
  std::span<const Literal> hyps_;
  bool ground_ = false;
  std::vector<std::string> path_;
};

}  // namespace detail

/// Applies one rewrite step to `current`. Statement justifications resolve
/// in `env`; hypothesis justifications index `hyps` (1-based).
inline Term verify_rewrite(const Term& current, const Rewrite& step, const Environment& env,
                           std::span<const Literal> hyps = {}) {
  ProofScript dummy;
  detail::Replayer r(dummy, env, false);
  r.set_hypotheses(hyps);
  return r.rewrite(current, step, nullptr);
}

namespace detail {

inline std::string step_label(std::size_t i) { return "step " + std::to_string(i + 1); }

inline void replay_identity(Replayer& r, const ProofScript& p, const Statement& target) {
  if (!target.is_identity())
    r.fail("rewrite chain needs an identity target", "identity", to_string(target.kind()));
  Term cur = target.lhs();
  for (std::size_t i = 0; i < p.steps.size(); ++i) {
    r.push(step_label(i));
    const auto* rw = std::get_if<Rewrite>(&p.steps[i].step);
    if (!rw) r.fail("step not allowed in a rewrite chain", "rewrite", p.steps[i].rule());
    cur = r.rewrite(cur, *rw, nullptr);
    r.pop();
  }
  // reported against the last step, where the chain ends
  if (!p.steps.empty()) r.push(step_label(p.steps.size() - 1));
  if (cur != target.rhs()) r.fail("chain does not reach the target rhs", format_term(target.rhs()), format_term(cur));
}

inline void replay_clause(Replayer& r, const ProofScript& p, const Statement& target) {
  const auto& first = std::get<ClauseInstantiate>(p.steps.front().step);
  r.push(step_label(0));
  Statement src = r.lookup(first.clause);
  r.check_domain(src, first.subst);
  Clause cur = clause_form(instantiate(src, first.subst)).literals();
  r.pop();

  for (std::size_t i = 1; i < p.steps.size(); ++i) {
    r.push(step_label(i));
    const auto& step = p.steps[i].step;
    auto check_index = [&](std::size_t k) {
      if (k < 1 || k > cur.size())
        r.fail("literal index out of range", "1.." + std::to_string(cur.size()), std::to_string(k));
    };
    if (const auto* el = std::get_if<LiteralElim>(&step)) {
      check_index(el->literal);
      const Literal lit = cur[el->literal - 1];
      if (lit.positive()) r.fail("literal is not a disequation", "s != t", format_literal(lit));
      Term end = r.chain(lit.lhs, el->chain, nullptr);
      if (end != lit.rhs) r.fail("chain does not reach the literal rhs", format_term(lit.rhs), format_term(end));
      cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(el->literal - 1));
    } else if (const auto* cr = std::get_if<ClauseLiteralRewrite>(&step)) {
      check_index(cr->literal);
      Literal& lit = cur[cr->literal - 1];
      const auto& path = cr->rewrite.position.path();
      if (path.empty())
        r.fail("literal rewrite position must start with a side selector", "L... or R...", "''");
      if (cr->rewrite.by.source != Justification::Source::statement)
        r.fail("clause derivations rewrite with identities only", "statement id", cr->rewrite.by.str());
      Rewrite inner = cr->rewrite;
      inner.position = Position(std::vector<Selector>(path.begin() + 1, path.end()));
      Term& side = path.front() == Selector::left ? lit.lhs : lit.rhs;
      side = r.rewrite(side, inner, nullptr);
    } else {
      r.fail("step not allowed in a clause derivation", "literal-elim or clause-literal-rewrite",
             p.steps[i].rule());
    }
    r.pop();
  }
  const Clause& want = target.literals();
  r.push(step_label(p.steps.size() - 1));
  if (!same_clause(cur, want)) r.fail("derived clause differs from target", format_clause(want), format_clause(cur));
}

/// Checks that the hypotheses are the negated target under some bijection
/// from target variables to the declared constants.
inline void check_skolemization(Replayer& r, const ProofScript& p, const Statement& target) {
  auto vars = target.variables();
  std::set<std::string> declared;
  for (const auto& c : p.constants) {
    if (!declared.insert(c).second) r.fail("constant declared twice", "distinct constants", c);
  }
  if (vars.size() != p.constants.size())
    r.fail("constants do not match target variables", std::to_string(vars.size()) + " constants",
           std::to_string(p.constants.size()));
  for (std::size_t i = 0; i < p.hypotheses.size(); ++i) {
    const auto& h = p.hypotheses[i];
    if (!is_ground(h.lhs) || !is_ground(h.rhs))
      r.fail("hypothesis " + std::to_string(i + 1) + " is not ground", "ground literal", format_literal(h));
    for (const Term& side : {h.lhs, h.rhs})
      for (const auto& c : constants(side))
        if (!declared.count(c)) r.fail("hypothesis uses undeclared constant", "declared constant", c);
  }
  std::vector<std::string> perm = p.constants;
  std::sort(perm.begin(), perm.end());
  do {
    Substitution sk;
    for (std::size_t i = 0; i < vars.size(); ++i) sk.emplace(vars[i], Term::constant(perm[i]));
    Clause negated;
    for (const auto& l : target.literals()) negated.push_back(substitute(l, sk).negated());
    if (same_clause(negated, p.hypotheses)) return;
  } while (std::next_permutation(perm.begin(), perm.end()));
  Clause shown;
  for (const auto& l : target.literals()) shown.push_back(l.negated());
  r.fail("hypotheses are not the negated target", format_clause(shown), format_clause(p.hypotheses));
}

inline void replay_body(Replayer& r, const ProofScript& p, const std::vector<ProofStep>& steps,
                        const Literal* branch, bool allow_split) {
  std::vector<Rewrite> rewrites;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    r.push(step_label(i));
    const auto& step = steps[i].step;
    bool last = i + 1 == steps.size();
    if (const auto* rw = std::get_if<Rewrite>(&step)) {
      if (last) r.fail("unclosed branch", "close-conflict or close-refl", "rewrite");
      rewrites.push_back(*rw);
      r.pop();
      continue;
    }
    if (!last) r.fail("steps follow a closing step", "closing step last", std::to_string(steps.size() - i - 1) + " more step(s)");

    if (const auto* sp = std::get_if<ApplyClauseSplit>(&step)) {
      if (!allow_split) r.fail("nested split", "at most one split", "split inside a branch");
      if (!rewrites.empty()) r.fail("rewrites before a split close nothing", "split as first step", "rewrite");
      Statement src = r.lookup(sp->clause);
      r.check_domain(src, sp->subst);
      Clause inst = clause_form(instantiate(src, sp->subst)).literals();
      for (const auto& l : inst)
        if (!is_ground(l.lhs) || !is_ground(l.rhs))
          r.fail("substitution does not ground justification", "ground clause instance", format_literal(l));
      if (sp->branches.size() != inst.size())
        r.fail("branch count differs from clause length", std::to_string(inst.size()),
               std::to_string(sp->branches.size()));
      for (std::size_t b = 0; b < inst.size(); ++b) {
        r.push("branch " + std::to_string(b + 1));
        replay_body(r, p, sp->branches[b], &inst[b], false);
        r.pop();
      }
    } else if (const auto* cc = std::get_if<CloseByHypothesisConflict>(&step)) {
      if (cc->hypothesis < 1 || cc->hypothesis > p.hypotheses.size())
        r.fail("unknown hypothesis", "1.." + std::to_string(p.hypotheses.size()), std::to_string(cc->hypothesis));
      const Literal& h = p.hypotheses[cc->hypothesis - 1];
      if (!rewrites.empty()) {
        // the chain runs from the hypothesis lhs and must establish lhs = rhs
        if (h.positive()) r.fail("hypothesis polarity does not conflict", "s != t", format_literal(h));
        r.pop();
        Term end = r.chain(h.lhs, rewrites, branch, "step ");
        r.push(step_label(i));
        if (end != h.rhs) r.fail("chain does not reach the hypothesis rhs", format_term(h.rhs), format_term(end));
      } else {
        if (!branch) r.fail("nothing conflicts with hypothesis", "branch literal", "none");
        if (branch->polarity == h.polarity || !same_literal(*branch, h.negated()))
          r.fail("branch literal does not conflict with hypothesis", format_literal(h.negated()),
                 format_literal(*branch));
      }
    } else if (std::get_if<CloseByReflexivity>(&step)) {
      if (!branch) r.fail("reflexivity close needs a branch literal", "s != s", "none");
      if (branch->positive()) r.fail("branch literal is not a disequation", "s != t", format_literal(*branch));
      r.pop();
      Term end = r.chain(branch->lhs, rewrites, branch, "step ");
      r.push(step_label(i));
      if (end != branch->rhs) r.fail("chain does not reach the literal rhs", format_term(branch->rhs), format_term(end));
    } else {
      r.fail("step not allowed in a refutation", "rewrite, split or close", steps[i].rule());
    }
    r.pop();
    return;
  }
  r.fail("unclosed branch", "closing step", "end of steps");
}

}  // namespace detail

/// Replays `script` against `env`; `target` is the statement named by
/// script.target. Throws proof_error on the first failed check.
inline VerifiedStatement replay_proof(const ProofScript& script, const Statement& target,
                                      const Environment& env) {
  detail::Replayer r(script, env, true);
  if (target.id() != script.target) r.fail("target mismatch", script.target, target.id());
  for (const auto& d : script.depends_on)
    if (!env.contains(d)) r.fail("dependency not verified", "verified " + d, "missing");

  if (!script.hypotheses.empty()) {
    r.set_ground(true);
    r.set_hypotheses(script.hypotheses);
    detail::check_skolemization(r, script, target);
    detail::replay_body(r, script, script.steps, nullptr, true);
  } else if (!script.steps.empty() && std::holds_alternative<ClauseInstantiate>(script.steps.front().step)) {
    detail::replay_clause(r, script, target);
  } else {
    detail::replay_identity(r, script, target);
  }
  return VerifiedStatement{target, script.id, script_hash(script), std::chrono::system_clock::now()};
}

enum class ScriptStatus : std::uint8_t { verified, failed, skipped };

inline const char* to_string(ScriptStatus s) {
  switch (s) {
    case ScriptStatus::verified: return "verified";
    case ScriptStatus::failed: return "failed";
    case ScriptStatus::skipped: return "skipped";
  }
  return "?";
}

struct ScriptOutcome {
  std::string script;
  std::string target;
  ScriptStatus status = ScriptStatus::skipped;
  std::string diagnostic;
  std::optional<VerifiedStatement> result;
};

struct ReplayReport {
  std::vector<ScriptOutcome> outcomes;

  std::size_t verified() const {
    return static_cast<std::size_t>(std::count_if(outcomes.begin(), outcomes.end(), [](const auto& o) {
      return o.status == ScriptStatus::verified;
    }));
  }
  bool ok() const { return verified() == outcomes.size(); }
};

/// Replays `scripts` in order against `env`, appending each verified
/// target. The first failure stops the run; later scripts are skipped.
inline ReplayReport replay_scripts(const std::vector<ProofScript>& scripts,
                                   const std::map<std::string, Statement>& registry,
                                   Environment& env) {
  ReplayReport rep;
  bool halted = false;
  for (const auto& s : scripts) {
    ScriptOutcome o{s.id, s.target, ScriptStatus::skipped, {}, std::nullopt};
    if (!halted) {
      try {
        auto it = registry.find(s.target);
        if (it == registry.end()) throw proof_error(s.id, {}, "unknown target", "statement id", s.target);
        o.result = replay_proof(s, it->second, env);
        env.add(*o.result);
        o.status = ScriptStatus::verified;
      } catch (const proof_error& e) {
        o.status = ScriptStatus::failed;
        o.diagnostic = e.what();
        halted = true;
      }
    }
    rep.outcomes.push_back(std::move(o));
  }
  return rep;
}

}  // namespace abeforge

#endif  // ABEFORGE_PROOF_HPP
