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

// Shared test helpers: seeded term generators and a deliberately naive
// model checker used as an oracle against the library's compiled one.

#ifndef ABEFORGE_TESTS_SUPPORT_HPP
#define ABEFORGE_TESTS_SUPPORT_HPP

#include <abeforge/abeforge.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <sys/wait.h>

namespace testing_support {

using namespace abeforge;

inline Term random_term(std::mt19937_64& rng, int depth, const std::vector<std::string>& vars,
                        const std::vector<std::string>& consts = {}) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth <= 0 || pick(rng) < 3) {
    std::size_t leaves = vars.size() + consts.size() + 1;
    std::size_t k = std::uniform_int_distribution<std::size_t>(0, leaves - 1)(rng);
    if (k < vars.size()) return var(vars[k]);
    if (k < vars.size() + consts.size()) return Term::constant(consts[k - vars.size()]);
    return Term::unit();
  }
  Term l = random_term(rng, depth - 1, vars, consts);
  Term r = random_term(rng, depth - 1, vars, consts);
  return arrow(l, r);
}

inline Substitution random_subst(std::mt19937_64& rng, const std::vector<std::string>& dom,
                                 const std::vector<std::string>& range_vars, int depth) {
  Substitution s;
  for (const auto& v : dom) s.emplace(v, random_term(rng, depth, range_vars));
  return s;
}

// -- naive semantics --------------------------------------------------------

inline int naive_eval(const std::vector<std::vector<int>>& t, int unit, const Term& term,
                      const std::map<std::string, int>& env) {
  switch (term.kind()) {
    case Term::Kind::unit: return unit;
    case Term::Kind::variable:
    case Term::Kind::constant: return env.at(term.name());
    case Term::Kind::arrow: return t[naive_eval(t, unit, term.left(), env)][naive_eval(t, unit, term.right(), env)];
  }
  return -1;
}

/// Clause truth over all assignments, by recursion over the variable list.
inline bool naive_holds(const std::vector<std::vector<int>>& t, int unit, const Statement& st) {
  std::set<std::string> vs;
  for (const auto& l : st.literals()) {
    for (const auto& v : variables(l.lhs)) vs.insert(v);
    for (const auto& v : variables(l.rhs)) vs.insert(v);
  }
  std::vector<std::string> names(vs.begin(), vs.end());
  std::map<std::string, int> env;
  const int n = static_cast<int>(t.size());
  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == names.size()) {
      for (const auto& l : st.literals()) {
        bool same = naive_eval(t, unit, l.lhs, env) == naive_eval(t, unit, l.rhs, env);
        if (same == l.positive()) return true;
      }
      return false;
    }
    for (int v = 0; v < n; ++v) {
      env[names[i]] = v;
      if (!go(i + 1)) return false;
    }
    return true;
  };
  return go(0);
}

inline bool naive_is_model(const std::vector<std::vector<int>>& t, int unit, const Theory& th) {
  for (const auto& ax : th.axioms)
    if (!naive_holds(t, unit, ax)) return false;
  return true;
}

inline std::vector<std::vector<int>> rows_of(const FiniteAlgebra& m) {
  std::vector<std::vector<int>> t(m.size(), std::vector<int>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) t[i][k] = m.at(i, k);
  return t;
}

/// Smallest relabelled table (row-major) over permutations fixing the
/// unit at n-1; computed with std::next_permutation, independent of the
/// library's canonicalizer.
inline std::vector<int> naive_canonical(const std::vector<std::vector<int>>& t, int unit) {
  const int n = static_cast<int>(t.size());
  std::vector<int> others;
  for (int i = 0; i < n; ++i)
    if (i != unit) others.push_back(i);
  std::vector<int> best;
  std::vector<int> order(others.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  do {
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < others.size(); ++i) perm[others[i]] = order[i];
    perm[unit] = n - 1;
    std::vector<int> flat(n * n);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) flat[perm[i] * n + perm[k]] = perm[t[i][k]];
    if (best.empty() || flat < best) best = flat;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

struct NaiveCounts {
  std::size_t labeled = 0;
  std::size_t classes = 0;
};

/// Independent count of models with unit n-1. Cells in the unit row, the
/// unit column and the diagonal are fixed to what ax1..ax3 force, so only
/// tables satisfying those three axioms are visited.
inline NaiveCounts naive_count(const Theory& th, int n) {
  const int u = n - 1;
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  std::vector<std::pair<int, int>> free;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (i == u) t[i][k] = k;
      else if (k == u || i == k) t[i][k] = u;
      else free.emplace_back(i, k);
    }
  NaiveCounts out;
  std::set<std::vector<int>> classes;
  std::vector<int> digits(free.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < free.size(); ++i) t[free[i].first][free[i].second] = digits[i];
    if (naive_is_model(t, u, th)) {
      ++out.labeled;
      classes.insert(naive_canonical(t, u));
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  out.classes = classes.size();
  return out;
}

// -- running the CLI ----------------------------------------------------------

struct RunResult {
  int status = -1;
  std::string out;
};

/// Runs `cmd` through the shell. stderr is folded into `out` unless
/// `stdout_only`.
inline RunResult run_command(const std::string& cmd, bool stdout_only = false) {
  RunResult r;
  FILE* p = popen((cmd + (stdout_only ? " 2>/dev/null" : " 2>&1")).c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
  int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

}  // namespace testing_support

#endif  // ABEFORGE_TESTS_SUPPORT_HPP
