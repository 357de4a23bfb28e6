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

#include "support.hpp"

#include <gtest/gtest.h>

namespace {

using namespace abeforge;

// The two-element implication algebra: 0 -> 0 = 1, 0 -> 1 = 1, 1 -> 0 = 0.
FiniteAlgebra m2() { return FiniteAlgebra::from_rows(1, {{1, 1}, {0, 1}}); }

FiniteAlgebra random_table(std::mt19937_64& rng, std::size_t n) {
  std::vector<Element> t(n * n);
  for (auto& e : t) e = static_cast<Element>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
  return FiniteAlgebra(n, static_cast<Element>(n - 1), t);
}

std::vector<Element> random_unit_fixing_perm(std::mt19937_64& rng, std::size_t n, Element unit) {
  std::vector<Element> others;
  for (std::size_t i = 0; i < n; ++i)
    if (i != unit) others.push_back(static_cast<Element>(i));
  auto shuffled = others;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::vector<Element> perm(n);
  perm[unit] = unit;
  for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = shuffled[i];
  return perm;
}

TEST(FiniteAlgebra, Validation) {
  EXPECT_THROW(FiniteAlgebra(0, 0, {}), model_error);
  EXPECT_THROW(FiniteAlgebra(2, 2, {0, 0, 0, 0}), model_error);
  EXPECT_THROW(FiniteAlgebra(2, 1, {0, 0, 0}), model_error);
  EXPECT_THROW(FiniteAlgebra(2, 1, {0, 0, 0, 2}), model_error);
  EXPECT_THROW(FiniteAlgebra::from_rows(0, {{0, 0}, {0}}), model_error);
}

TEST(Evaluate, TwoElementExamples) {
  auto m = m2();
  EXPECT_EQ(evaluate(m, parse_term("x -> y"), {{"x", 0}, {"y", 1}}), 1);
  EXPECT_EQ(evaluate(m, parse_term("x -> y"), {{"x", 1}, {"y", 0}}), 0);
  EXPECT_EQ(evaluate(m, parse_term("(x -> y) -> x"), {{"x", 0}, {"y", 1}}), 0);
  EXPECT_EQ(evaluate(m, parse_term("1 -> x"), {{"x", 0}}), 0);
  EXPECT_THROW(evaluate(m, parse_term("x -> z"), {{"x", 0}}), std::out_of_range);
}

TEST(Satisfies, TwoElementModelOfBothSystems) {
  const auto& c = load_corpus();
  EXPECT_TRUE(is_model(m2(), c.theory("aBE")));
  EXPECT_TRUE(is_model(m2(), c.theory("implicative-aBE")));
  EXPECT_TRUE(satisfies(m2(), c.statement("trans")));
  EXPECT_TRUE(satisfies(m2(), c.statement("commutativity")));
}

TEST(Satisfies, WitnessIsFirstInOdometerOrder) {
  // 0 -> 0 = 1, so x = 0 already falsifies x -> x = x
  auto st = Statement::identity("idem", parse_term("x -> x"), var("x"));
  Verdict v = satisfies(m2(), st);
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness->str(), "x=0");
  EXPECT_EQ(v.witness->values, (std::vector<std::pair<Element, Element>>{{1, 0}}));
  EXPECT_TRUE(replays(m2(), st, *v.witness));
}

TEST(Satisfies, ReflexivityFailureNamesAxiom3) {
  auto m = FiniteAlgebra::from_rows(1, {{0, 1}, {0, 1}});
  Verdict v = is_model(m, load_corpus().theory("implicative-aBE"));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness->statement, "ax3");
  EXPECT_EQ(v.witness->str(), "x=0");
}

TEST(Satisfies, QuasiIdentityUsesClauseReading) {
  // 0 and 1 below the unit 2 and mutually related, so antisymmetry fails
  auto m = FiniteAlgebra::from_rows(2, {{2, 2, 2}, {2, 2, 2}, {0, 1, 2}});
  Verdict v = satisfies(m, load_corpus().statement("ax5"));
  ASSERT_FALSE(v);
  EXPECT_EQ(v.witness->str(), "x=0, y=1");
}

TEST(Satisfies, NonTransitiveABEAlgebra) {
  auto m = FiniteAlgebra::from_rows(3, {{3, 0, 3, 3}, {3, 3, 2, 3}, {0, 1, 3, 3}, {0, 1, 2, 3}});
  const auto& c = load_corpus();
  EXPECT_TRUE(is_model(m, c.theory("aBE")));
  EXPECT_FALSE(is_model(m, c.theory("implicative-aBE")));
  Verdict v = satisfies(m, c.statement("trans"));
  ASSERT_FALSE(v);
  EXPECT_TRUE(replays(m, c.statement("trans"), *v.witness));
}

TEST(Canonical, SmallExamples) {
  auto m = FiniteAlgebra::from_rows(2, {{2, 2, 2}, {1, 2, 2}, {0, 1, 2}});
  auto c = canonicalize(m);
  EXPECT_TRUE(is_canonical(c));
  EXPECT_TRUE(are_isomorphic(m, c));
  // swapping 0 and 1 moves the 0 forward in row 0
  EXPECT_EQ(c, FiniteAlgebra::from_rows(2, {{2, 0, 2}, {2, 2, 2}, {0, 1, 2}}));
  EXPECT_FALSE(is_canonical(m));
}

TEST(ModelJson, RoundTripAndErrors) {
  auto m = m2();
  EXPECT_EQ(model_to_json(m).dump(), R"({"size":2,"unit":1,"table":[[1,1],[0,1]]})");
  EXPECT_EQ(parse_model(model_to_json(m).dump()), m);
  EXPECT_THROW(parse_model(R"({"size":2,"unit":1,"table":[[1,1],[0)"), model_error);
  EXPECT_THROW(parse_model(R"({"size":2,"unit":1,"table":[[1,1]]})"), model_error);
  EXPECT_THROW(parse_model(R"({"size":2,"unit":1,"table":[[1,1],[0,2]]})"), model_error);
  EXPECT_THROW(parse_model(R"({"size":2,"table":[[1,1],[0,1]]})"), model_error);
  EXPECT_THROW(parse_model(R"({"size":2,"unit":-1,"table":[[1,1],[0,1]]})"), model_error);
}

TEST(ModelJson, WitnessShape) {
  auto st = Statement::identity("idem", parse_term("x -> x"), var("x"));
  auto w = *satisfies(m2(), st).witness;
  EXPECT_EQ(witness_to_json(w).dump(), R"({"statement":"idem","assignment":{"x":0},"literals":[{"lhs":1,"rhs":0}]})");
}

// -- properties ------------------------------------------------------------------

TEST(ModelProperty, CompiledCheckerAgreesWithNaiveOracle) {
  std::mt19937_64 rng(0x5eed0301);
  const auto& c = load_corpus();
  for (int i = 0; i < 400; ++i) {
    std::size_t n = 1 + i % 4;
    auto m = random_table(rng, n);
    auto rows = testing_support::rows_of(m);
    for (const auto& st : c.statements)
      ASSERT_EQ(static_cast<bool>(satisfies(m, st)), testing_support::naive_holds(rows, m.unit(), st)) << st.id();
  }
}

TEST(ModelProperty, WitnessesReplay) {
  std::mt19937_64 rng(0x5eed0302);
  const auto& c = load_corpus();
  int witnesses = 0;
  for (int i = 0; i < 300; ++i) {
    auto m = random_table(rng, 2 + i % 3);
    for (const auto& st : c.statements) {
      Verdict v = satisfies(m, st);
      if (!v) {
        ++witnesses;
        EXPECT_TRUE(replays(m, st, *v.witness)) << st.id();
      }
    }
  }
  EXPECT_GT(witnesses, 100);
}

TEST(ModelProperty, SatisfactionIsInvariantUnderRelabelling) {
  std::mt19937_64 rng(0x5eed0303);
  const auto& c = load_corpus();
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 2 + i % 4;
    auto m = random_table(rng, n);
    auto perm = random_unit_fixing_perm(rng, n, m.unit());
    auto r = relabel(m, perm);
    EXPECT_TRUE(are_isomorphic(m, r));
    for (const auto& st : c.statements)
      EXPECT_EQ(static_cast<bool>(satisfies(m, st)), static_cast<bool>(satisfies(r, st))) << st.id();
  }
}

TEST(ModelProperty, CanonicalizationIsIdempotentAndMatchesNaive) {
  std::mt19937_64 rng(0x5eed0304);
  for (int i = 0; i < 200; ++i) {
    std::size_t n = 1 + i % 5;
    auto m = random_table(rng, n);
    auto c = canonicalize(m);
    EXPECT_EQ(canonicalize(c), c);
    EXPECT_TRUE(is_canonical(c));
    auto naive = testing_support::naive_canonical(testing_support::rows_of(m), m.unit());
    std::vector<int> flat(c.table().begin(), c.table().end());
    EXPECT_EQ(flat, naive);
    auto perm = random_unit_fixing_perm(rng, n, m.unit());
    EXPECT_EQ(canonical_form(relabel(m, perm)), canonical_form(m));
  }
}

}  // namespace
