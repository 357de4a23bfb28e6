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
 * Finite algebras given by their operation table, term evaluation,
 * satisfaction of statements, and canonical forms under relabelling.
 */

#ifndef ABEFORGE_MODEL_HPP
#define ABEFORGE_MODEL_HPP

#include <abeforge/corpus.hpp>
#include <abeforge/statement.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace abeforge {

using Element = std::uint8_t;

class model_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operation table on {0..n-1}: at(i, j) = i -> j. No axioms are implied.
class FiniteAlgebra {
 public:
  static constexpr std::size_t max_size = 255;

  FiniteAlgebra(std::size_t n, Element unit, std::vector<Element> table)
      : n_(n), unit_(unit), table_(std::move(table)) {
    if (n < 1 || n > max_size) throw model_error("size must be in 1.." + std::to_string(max_size));
    if (unit >= n) throw model_error("unit " + std::to_string(unit) + " out of range");
    if (table_.size() != n * n) throw model_error("table must have n*n entries");
    for (Element e : table_)
      if (e >= n) throw model_error("table entry " + std::to_string(e) + " out of range");
  }

  static FiniteAlgebra from_rows(Element unit, const std::vector<std::vector<int>>& rows) {
    std::vector<Element> t;
    for (const auto& r : rows) {
      if (r.size() != rows.size()) throw model_error("table must be square");
      for (int v : r) {
        if (v < 0 || v >= static_cast<int>(rows.size())) throw model_error("table entry out of range");
        t.push_back(static_cast<Element>(v));
      }
    }
    return FiniteAlgebra(rows.size(), unit, std::move(t));
  }

  std::size_t size() const noexcept { return n_; }
  Element unit() const noexcept { return unit_; }
  Element at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
  std::span<const Element> table() const noexcept { return table_; }

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::size_t n_;
  Element unit_;
  std::vector<Element> table_;
};

using Assignment = std::map<std::string, Element>;

inline Element evaluate(const FiniteAlgebra& m, const Term& t, const Assignment& a) {
  switch (t.kind()) {
    case Term::Kind::unit:
      return m.unit();
    case Term::Kind::arrow:
      return m.at(evaluate(m, t.left(), a), evaluate(m, t.right(), a));
    default: {
      auto it = a.find(t.name());
      if (it == a.end()) throw std::out_of_range("unbound name '" + t.name() + "'");
      if (it->second >= m.size()) throw std::out_of_range("element out of range for '" + t.name() + "'");
      return it->second;
    }
  }
}

// ---------------------------------------------------------------------------
// Compiled statements: postfix programs over variable slots. Used by the
// satisfaction check and by the enumerator's partial evaluation.

struct CompiledTerm {
  /// Non-negative: push slot k. unit_op: push the unit. arrow_op: pop two,
  /// push table entry.
  static constexpr int unit_op = -1;
  static constexpr int arrow_op = -2;
  std::vector<int> code;
};

struct CompiledLiteral {
  bool positive;
  CompiledTerm lhs, rhs;
};

struct CompiledStatement {
  std::string id;
  std::vector<std::string> vars;
  std::vector<CompiledLiteral> literals;
};

namespace detail {

inline void compile_into(const Term& t, const std::vector<std::string>& vars, std::vector<int>& code) {
  switch (t.kind()) {
    case Term::Kind::unit:
      code.push_back(CompiledTerm::unit_op);
      return;
    case Term::Kind::arrow:
      compile_into(t.left(), vars, code);
      compile_into(t.right(), vars, code);
      code.push_back(CompiledTerm::arrow_op);
      return;
    default: {
      auto it = std::find(vars.begin(), vars.end(), t.name());
      if (it == vars.end()) throw std::out_of_range("unbound name '" + t.name() + "'");
      code.push_back(static_cast<int>(it - vars.begin()));
    }
  }
}

/// Evaluates with a table that may have holes (`hole`). Returns hole if
/// any needed cell is missing.
inline Element run(const CompiledTerm& t, const Element* table, std::size_t n, Element unit,
                   const Element* slots, Element hole) {
  Element stack[64] = {};
  std::size_t sp = 0;
  for (int op : t.code) {
    if (op >= 0) {
      stack[sp++] = slots[op];
    } else if (op == CompiledTerm::unit_op) {
      stack[sp++] = unit;
    } else {
      Element r = stack[--sp];
      Element l = stack[--sp];
      Element v = table[l * n + r];
      if (v == hole) return hole;
      stack[sp++] = v;
    }
  }
  return stack[0];
}

inline std::size_t stack_depth(const std::vector<int>& code) {
  std::size_t sp = 0, best = 0;
  for (int op : code) {
    sp = op == CompiledTerm::arrow_op ? sp - 1 : sp + 1;
    best = std::max(best, sp);
  }
  return best;
}

}  // namespace detail

inline CompiledStatement compile(const Statement& st) {
  CompiledStatement c{st.id(), st.variables(), {}};
  for (const auto& l : st.literals()) {
    CompiledLiteral cl{l.positive(), {}, {}};
    detail::compile_into(l.lhs, c.vars, cl.lhs.code);
    detail::compile_into(l.rhs, c.vars, cl.rhs.code);
    if (detail::stack_depth(cl.lhs.code) > 64 || detail::stack_depth(cl.rhs.code) > 64)
      throw std::length_error("statement " + st.id() + " is too deeply nested to compile");
    c.literals.push_back(std::move(cl));
  }
  return c;
}

/// A falsifying assignment and each literal's (lhs, rhs) values under it.
struct Witness {
  std::string statement;
  std::vector<std::pair<std::string, Element>> assignment;
  std::vector<std::pair<Element, Element>> values;

  Assignment as_map() const { return Assignment(assignment.begin(), assignment.end()); }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      if (i) s += ", ";
      s += assignment[i].first + "=" + std::to_string(assignment[i].second);
    }
    return s;
  }
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  explicit operator bool() const noexcept { return holds; }
};

/// Checks `st` under every assignment of its variables, in odometer order
/// with the first variable most significant. Returns the first falsifying
/// assignment.
inline Verdict satisfies(const FiniteAlgebra& m, const CompiledStatement& st) {
  const std::size_t n = m.size(), k = st.vars.size();
  std::vector<Element> slots(k, 0);
  const Element* table = m.table().data();
  constexpr Element no_hole = 0xFF;  // tables are total here; n <= 255
  while (true) {
    bool some_true = false;
    for (const auto& l : st.literals) {
      Element a = detail::run(l.lhs, table, n, m.unit(), slots.data(), no_hole);
      Element b = detail::run(l.rhs, table, n, m.unit(), slots.data(), no_hole);
      if ((a == b) == l.positive) {
        some_true = true;
        break;
      }
    }
    if (!some_true) {
      Witness w{st.id, {}, {}};
      for (std::size_t i = 0; i < k; ++i) w.assignment.emplace_back(st.vars[i], slots[i]);
      for (const auto& l : st.literals)
        w.values.emplace_back(detail::run(l.lhs, table, n, m.unit(), slots.data(), no_hole),
                              detail::run(l.rhs, table, n, m.unit(), slots.data(), no_hole));
      return {false, std::move(w)};
    }
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (++slots[i] < n) break;
      slots[i] = 0;
      if (i == 0) return {true, std::nullopt};
    }
    if (k == 0) return {true, std::nullopt};
  }
}

inline Verdict satisfies(const FiniteAlgebra& m, const Statement& st) { return satisfies(m, compile(st)); }

/// True iff the witness is a genuine violation of `st` in `m`.
inline bool replays(const FiniteAlgebra& m, const Statement& st, const Witness& w) {
  Assignment a = w.as_map();
  if (w.values.size() != st.literals().size()) return false;
  for (std::size_t i = 0; i < st.literals().size(); ++i) {
    const auto& l = st.literals()[i];
    Element x = evaluate(m, l.lhs, a), y = evaluate(m, l.rhs, a);
    if (x != w.values[i].first || y != w.values[i].second) return false;
    if ((x == y) == l.positive()) return false;
  }
  return true;
}

/// Conjunction of satisfies over the axioms, reporting the first failure
/// in axiom order.
inline Verdict is_model(const FiniteAlgebra& m, const Theory& th) {
  for (const auto& ax : th.axioms) {
    Verdict v = satisfies(m, ax);
    if (!v) return v;
  }
  return {};
}

// ---------------------------------------------------------------------------
// Isomorphism

/// Relabels by `perm` (perm[old] = new), a permutation of 0..n-1.
inline FiniteAlgebra relabel(const FiniteAlgebra& m, std::span<const Element> perm) {
  const std::size_t n = m.size();
  if (perm.size() != n) throw model_error("permutation has the wrong length");
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p >= n || seen[p]) throw model_error("not a permutation");
    seen[p] = true;
  }
  std::vector<Element> t(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[perm[i] * n + perm[j]] = perm[m.at(i, j)];
  return FiniteAlgebra(n, perm[m.unit()], std::move(t));
}

namespace detail {

/// Visits every relabelling sending the unit to n-1 as a map old -> new.
/// `visit` returns false to stop early.
template <typename Visit>
void for_each_unit_fixing_perm(std::size_t n, Element unit, Visit visit) {
  // new labels 0..n-2 go to the non-unit elements in `order`
  std::vector<Element> order(n - 1);
  std::iota(order.begin(), order.end(), Element{0});
  std::vector<Element> perm(n);
  do {
    std::size_t k = 0;
    for (std::size_t old = 0; old < n; ++old) perm[old] = old == unit ? static_cast<Element>(n - 1) : order[k++];
    if (!visit(std::span<const Element>(perm))) return;
  } while (std::next_permutation(order.begin(), order.end()));
}

/// Compares relabelled(m, perm) with `best` row-major; <0, 0, >0.
inline int compare_relabelled(const FiniteAlgebra& m, std::span<const Element> perm,
                              std::span<const Element> inverse, std::span<const Element> best) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Element v = perm[m.at(inverse[i], inverse[j])];
      Element b = best[i * n + j];
      if (v != b) return v < b ? -1 : 1;
    }
  return 0;
}

}  // namespace detail

/**
 * The lexicographically least row-major table over all relabellings that
 * send the unit to n-1. Cost is (n-1)! * n^2 table reads, fine for the
 * n <= 7 this project targets.
 */
inline FiniteAlgebra canonicalize(const FiniteAlgebra& m) {
  const std::size_t n = m.size();
  std::vector<Element> best;
  std::vector<Element> inverse(n);
  detail::for_each_unit_fixing_perm(n, m.unit(), [&](std::span<const Element> perm) {
    for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = static_cast<Element>(i);
    if (best.empty() || detail::compare_relabelled(m, perm, inverse, best) < 0) {
      FiniteAlgebra r = relabel(m, perm);
      best.assign(r.table().begin(), r.table().end());
    }
    return true;
  });
  return FiniteAlgebra(n, static_cast<Element>(n - 1), std::move(best));
}

/// Byte string: size, unit (always n-1), then the canonical table.
inline std::string canonical_form(const FiniteAlgebra& m) {
  FiniteAlgebra c = canonicalize(m);
  std::string s;
  s.reserve(2 + c.table().size());
  s.push_back(static_cast<char>(c.size()));
  s.push_back(static_cast<char>(c.unit()));
  for (Element e : c.table()) s.push_back(static_cast<char>(e));
  return s;
}

/// True iff `m` is its own canonical form (unit at n-1, no relabelling
/// gives a smaller table). Stops at the first smaller relabelling.
inline bool is_canonical(const FiniteAlgebra& m) {
  const std::size_t n = m.size();
  if (m.unit() != n - 1) return false;
  bool canonical = true;
  std::vector<Element> inverse(n);
  detail::for_each_unit_fixing_perm(n, m.unit(), [&](std::span<const Element> perm) {
    for (std::size_t i = 0; i < n; ++i) inverse[perm[i]] = static_cast<Element>(i);
    if (detail::compare_relabelled(m, perm, inverse, m.table()) < 0) canonical = false;
    return canonical;
  });
  return canonical;
}

inline bool are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// JSON

inline nlohmann::ordered_json model_to_json(const FiniteAlgebra& m) {
  nlohmann::ordered_json j;
  j["size"] = m.size();
  j["unit"] = m.unit();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t k = 0; k < m.size(); ++k) row.push_back(m.at(i, k));
    rows.push_back(row);
  }
  j["table"] = rows;
  return j;
}

inline FiniteAlgebra model_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw model_error("model must be a JSON object");
  for (const char* k : {"size", "unit", "table"})
    if (!j.contains(k)) throw model_error(std::string("model: missing field '") + k + "'");
  if (!j["size"].is_number_unsigned() || !j["unit"].is_number_unsigned())
    throw model_error("model: size and unit must be non-negative integers");
  auto n = j["size"].get<std::size_t>();
  auto u = j["unit"].get<std::size_t>();
  if (n < 1 || n > FiniteAlgebra::max_size) throw model_error("model: size out of range");
  if (u >= n) throw model_error("model: unit out of range");
  const auto& rows = j["table"];
  if (!rows.is_array() || rows.size() != n) throw model_error("model: table must have 'size' rows");
  std::vector<Element> t;
  for (const auto& r : rows) {
    if (!r.is_array() || r.size() != n) throw model_error("model: every row must have 'size' entries");
    for (const auto& v : r) {
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n) throw model_error("model: entry out of range");
      t.push_back(static_cast<Element>(v.get<std::size_t>()));
    }
  }
  return FiniteAlgebra(n, static_cast<Element>(u), std::move(t));
}

inline FiniteAlgebra parse_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw model_error(std::string("malformed JSON: ") + e.what());
  }
  return model_from_json(j);
}

inline nlohmann::ordered_json witness_to_json(const Witness& w) {
  nlohmann::ordered_json j;
  j["statement"] = w.statement;
  nlohmann::ordered_json a = nlohmann::ordered_json::object();
  for (const auto& [k, v] : w.assignment) a[k] = v;
  j["assignment"] = a;
  auto vals = nlohmann::ordered_json::array();
  for (const auto& [l, r] : w.values) vals.push_back({{"lhs", l}, {"rhs", r}});
  j["literals"] = vals;
  return j;
}

}  // namespace abeforge

#endif  // ABEFORGE_MODEL_HPP
