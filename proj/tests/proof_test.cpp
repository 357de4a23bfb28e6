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

#include "perturb.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

namespace {

using namespace abeforge;

Environment axioms_env() {
  Environment env;
  for (const auto* ax : load_corpus().with_role(Role::axiom)) env.admit(*ax);
  return env;
}

Rewrite rw(const char* by, Substitution s, const char* pos, Direction d = Direction::l2r) {
  return Rewrite{Justification::statement(by), std::move(s), Position::parse(pos), d};
}

std::string expect_failure(const ProofScript& p, const Environment& env, const std::string& check) {
  try {
    replay_proof(p, load_corpus().statement(p.target), env);
  } catch (const proof_error& e) {
    EXPECT_NE(std::string(e.what()).find(check), std::string::npos) << e.what();
    return e.step();
  }
  ADD_FAILURE() << "script " << p.id << " was accepted";
  return {};
}

// -- single rewrites ----------------------------------------------------------

TEST(VerifyRewrite, AppliesInstanceAtPosition) {
  auto env = axioms_env();
  Term t = parse_term("(y -> y) -> z");
  EXPECT_EQ(verify_rewrite(t, rw("ax3", {{"x", var("y")}}, "L"), env), parse_term("1 -> z"));
  EXPECT_EQ(verify_rewrite(parse_term("1 -> z"), rw("ax1", {{"x", var("z")}}, ""), env), var("z"));
  // right to left introduces the instantiated lhs
  EXPECT_EQ(verify_rewrite(var("z"), rw("ax1", {{"x", var("z")}}, "", Direction::r2l), env), parse_term("1 -> z"));
}

TEST(VerifyRewrite, ExchangeAxiom) {
  auto env = axioms_env();
  Term t = parse_term("a -> b -> c");
  auto s = Substitution{{"x", var("a")}, {"y", var("b")}, {"z", var("c")}};
  EXPECT_EQ(verify_rewrite(t, rw("ax4", s, ""), env), parse_term("b -> a -> c"));
}

TEST(VerifyRewrite, RejectsMismatchedSource) {
  auto env = axioms_env();
  try {
    verify_rewrite(parse_term("x -> y"), rw("ax3", {{"x", var("x")}}, ""), env);
    FAIL();
  } catch (const proof_error& e) {
    EXPECT_EQ(e.check(), "instantiated source does not match");
    EXPECT_EQ(e.expected(), "x -> x");
    EXPECT_EQ(e.found(), "x -> y");
  }
}

TEST(VerifyRewrite, RejectsBadPositionAndUnknownId) {
  auto env = axioms_env();
  EXPECT_THROW(verify_rewrite(var("x"), rw("ax3", {{"x", var("x")}}, "L"), env), proof_error);
  try {
    verify_rewrite(var("x"), rw("nosuch", {}, ""), env);
    FAIL();
  } catch (const proof_error& e) {
    EXPECT_EQ(e.check(), "unknown justification");
  }
}

TEST(VerifyRewrite, SubstitutionMustStayInDomain) {
  auto env = axioms_env();
  try {
    verify_rewrite(parse_term("x -> x"), rw("ax3", {{"x", var("x")}, {"q", var("x")}}, ""), env);
    FAIL();
  } catch (const proof_error& e) {
    EXPECT_EQ(e.check(), "substitution binds a variable absent from ax3");
  }
}

TEST(VerifyRewrite, HypothesisJustification) {
  auto env = axioms_env();
  std::vector<Literal> hyps{eq(parse_term("a -> b", {"a", "b"}), Term::unit())};
  Rewrite r{Justification::hyp(1), {}, Position::parse("L"), Direction::l2r};
  EXPECT_EQ(verify_rewrite(parse_term("(a -> b) -> c", {"a", "b", "c"}), r, env, hyps),
            parse_term("1 -> c", {"c"}));
  r.by = Justification::hyp(2);
  EXPECT_THROW(verify_rewrite(parse_term("(a -> b) -> c", {"a", "b", "c"}), r, env, hyps), proof_error);
}

// -- whole scripts -------------------------------------------------------------

TEST(Replay, BuiltinCorpusVerifies) {
  auto rep = verify_corpus(load_corpus());
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.verified(), 13u);
  for (const auto& o : rep.outcomes) EXPECT_EQ(o.status, ScriptStatus::verified) << o.script << ": " << o.diagnostic;
}

TEST(Replay, EmptyCorpus) {
  Corpus empty;
  auto rep = verify_corpus(empty);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.verified(), 0u);
}

TEST(Replay, CorruptedSecondStepIsLocated) {
  const auto& c = load_corpus();
  ProofScript p = *c.script("lem10");
  auto& step = std::get<Rewrite>(p.steps[1].step);
  step.subst["y"] = var("x");
  step.subst["z"] = var("z");
  auto env = axioms_env();
  EXPECT_EQ(expect_failure(p, env, "instantiated source does not match"), "step 2");
}

TEST(Replay, FailureHaltsLaterScripts) {
  Corpus c = load_corpus();
  auto& step = std::get<Rewrite>(c.scripts[3].steps[0].step);  // lem10
  step.direction = Direction::l2r;
  auto rep = verify_corpus(c);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.verified(), 3u);
  EXPECT_EQ(rep.outcomes[3].status, ScriptStatus::failed);
  for (std::size_t i = 4; i < rep.outcomes.size(); ++i) EXPECT_EQ(rep.outcomes[i].status, ScriptStatus::skipped);
}

TEST(Replay, DependenciesMustBeVerifiedFirst) {
  const auto& c = load_corpus();
  auto env = axioms_env();
  const auto* p = c.script("lem11");
  try {
    replay_proof(*p, c.statement("lem11"), env);
    FAIL();
  } catch (const proof_error& e) {
    EXPECT_EQ(e.check(), "dependency not verified");
  }
}

TEST(Replay, UndeclaredJustificationRejected) {
  const auto& c = load_corpus();
  ProofScript p = *c.script("lem10");
  p.depends_on = {"ax4"};
  auto env = axioms_env();
  EXPECT_EQ(expect_failure(p, env, "justification not among declared dependencies"), "step 1");
}

TEST(Replay, ChainThatStopsShortIsRejected) {
  const auto& c = load_corpus();
  ProofScript p = *c.script("lem10");
  p.steps.pop_back();
  auto env = axioms_env();
  EXPECT_EQ(expect_failure(p, env, "chain does not reach the target rhs"), "step 2");
}

TEST(Replay, RefutationNeedsNegatedTarget) {
  Corpus c = load_corpus();
  Environment env;
  auto rep = verify_corpus(c, env);
  ASSERT_TRUE(rep.ok());
  ProofScript p = *c.script("thm");
  std::swap(p.hypotheses[0], p.hypotheses[2]);
  // order of hypotheses is free, but branch closes now point at the wrong one
  EXPECT_THROW(replay_proof(p, c.statement("trans"), env), proof_error);
  p = *c.script("thm");
  p.hypotheses[2] = p.hypotheses[2].negated();
  expect_failure(p, env, "hypotheses are not the negated target");
}

TEST(Replay, RefutationBranchMustClose) {
  Corpus c = load_corpus();
  Environment env;
  ASSERT_TRUE(verify_corpus(c, env).ok());
  ProofScript p = *c.script("thm");
  auto& split = std::get<ApplyClauseSplit>(p.steps[0].step);
  split.branches[0].pop_back();
  EXPECT_EQ(expect_failure(p, env, "unclosed branch"), "step 1 / branch 1 / step 4");
}

TEST(Replay, RefutationRequiresGroundSubstitution) {
  Corpus c = load_corpus();
  Environment env;
  ASSERT_TRUE(verify_corpus(c, env).ok());
  ProofScript p = *c.script("thm");
  auto& split = std::get<ApplyClauseSplit>(p.steps[0].step);
  split.subst["x"] = var("x");
  EXPECT_EQ(expect_failure(p, env, "substitution does not ground justification"), "step 1");
}

TEST(Replay, ScriptHashIsStable) {
  const auto& c = load_corpus();
  auto a = verify_corpus(c), b = verify_corpus(c);
  for (std::size_t i = 0; i < a.outcomes.size(); ++i)
    EXPECT_EQ(a.outcomes[i].result->script_hash, b.outcomes[i].result->script_hash);
  ProofScript p = *c.script("lem10");
  std::uint64_t h = script_hash(p);
  std::get<Rewrite>(p.steps[0].step).direction = Direction::l2r;
  EXPECT_NE(script_hash(p), h);
}

TEST(Replay, ShowRendersBranches) {
  std::string s = format_script(*load_corpus().script("thm"));
  EXPECT_NE(s.find("hypothesis 3: a -> c != 1"), std::string::npos) << s;
  EXPECT_NE(s.find("branch 1:"), std::string::npos);
  EXPECT_NE(s.find("branch 2:"), std::string::npos);
  EXPECT_NE(s.find("close: conflicts with hypothesis 2"), std::string::npos);
}

// -- properties ------------------------------------------------------------------

// A rewrite only touches the subterm at its position.
TEST(ReplayProperty, StepLocality) {
  auto env = axioms_env();
  std::mt19937_64 rng(0x5eed0201);
  const std::vector<std::string> vs{"x", "y", "z"};
  for (int i = 0; i < 300; ++i) {
    Term ctx = testing_support::random_term(rng, 4, vs);
    auto ps = positions(ctx);
    Position p = ps[std::uniform_int_distribution<std::size_t>(0, ps.size() - 1)(rng)];
    Term a = testing_support::random_term(rng, 2, vs);
    Term t = replace_at(ctx, p, arrow(a, a));
    Term u = verify_rewrite(t, rw("ax3", {{"x", a}}, p.str().c_str()), env);
    EXPECT_EQ(subterm_at(u, p), Term::unit());
    for (const auto& q : positions(t))
      if (q.disjoint_from(p)) {
        EXPECT_EQ(subterm_at(u, q), subterm_at(t, q));
      }
    // and the reverse step restores the input
    EXPECT_EQ(verify_rewrite(u, rw("ax3", {{"x", a}}, p.str().c_str(), Direction::r2l), env), t);
  }
}

TEST(ReplayProperty, MutantsAreRejectedWithStepDiagnostics) {
  const auto& c = load_corpus();
  auto envs = perturb::prefix_environments(c);
  auto mutants = perturb::generate(c, 250, 0xabef0000);
  ASSERT_EQ(mutants.size(), 250u);
  std::array<int, perturb::kind_count> per_kind{};
  for (const auto& m : mutants) {
    auto o = perturb::run(c, envs, m);
    EXPECT_TRUE(o.rejected) << m.script.id << " " << perturb::name(m.kind) << " " << m.what;
    EXPECT_EQ(o.step.rfind("step ", 0), 0u) << o.message;
    ++per_kind[static_cast<int>(m.kind)];
  }
  for (int k : per_kind) EXPECT_EQ(k, 50);
}

TEST(ReplayProperty, ReplayIsDeterministic) {
  const auto& c = load_corpus();
  auto envs = perturb::prefix_environments(c);
  for (const auto& m : perturb::generate(c, 40, 77)) {
    auto a = perturb::run(c, envs, m), b = perturb::run(c, envs, m);
    EXPECT_EQ(a.rejected, b.rejected);
    EXPECT_EQ(a.message, b.message);
  }
}

TEST(Environment, FirstEntryWins) {
  Environment env;
  auto a = Statement::identity("e", var("x"), var("x"));
  auto b = Statement::identity("e", var("y"), var("y"));
  env.admit(a);
  env.add(VerifiedStatement{b, "s", 0, {}});
  EXPECT_EQ(env.size(), 1u);
  EXPECT_TRUE(env.find("e")->same_content(a));
  EXPECT_FALSE(env.find("f"));
}

}  // namespace
