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
 * Identities, clauses and quasi-identities. Every statement carries its
 * clause form; identities and quasi-identities additionally keep their
 * presentation for display and rewriting.
 */

#ifndef ABEFORGE_STATEMENT_HPP
#define ABEFORGE_STATEMENT_HPP

#include <abeforge/term.hpp>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace abeforge {

enum class Polarity : std::uint8_t { equal, not_equal };

struct Literal {
  Polarity polarity = Polarity::equal;
  Term lhs;
  Term rhs;

  bool positive() const noexcept { return polarity == Polarity::equal; }

  Literal negated() const {
    return {positive() ? Polarity::not_equal : Polarity::equal, lhs, rhs};
  }

  Literal flipped() const { return {polarity, rhs, lhs}; }

  friend bool operator==(const Literal&, const Literal&) = default;
};

inline Literal eq(Term l, Term r) { return {Polarity::equal, std::move(l), std::move(r)}; }
inline Literal neq(Term l, Term r) { return {Polarity::not_equal, std::move(l), std::move(r)}; }

/// Equality of literals up to orientation of the two sides.
inline bool same_literal(const Literal& a, const Literal& b) {
  return a.polarity == b.polarity &&
         ((a.lhs == b.lhs && a.rhs == b.rhs) || (a.lhs == b.rhs && a.rhs == b.lhs));
}

inline std::string format_literal(const Literal& l) {
  return format_term(l.lhs) + (l.positive() ? " = " : " != ") + format_term(l.rhs);
}

inline Literal substitute(const Literal& l, const Substitution& s) {
  return {l.polarity, substitute(l.lhs, s), substitute(l.rhs, s)};
}

using Clause = std::vector<Literal>;

inline std::string format_clause(const Clause& c) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += " | ";
    s += format_literal(c[i]);
  }
  return s;
}

/// Multiset equality of clauses up to literal order and orientation.
inline bool same_clause(const Clause& a, const Clause& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& la : a) {
    bool found = false;
    for (std::size_t j = 0; j < b.size() && !found; ++j) {
      if (!used[j] && same_literal(la, b[j])) used[j] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

enum class StatementKind : std::uint8_t { identity, clause, quasi };
enum class Role : std::uint8_t { axiom, lemma, property };

inline const char* to_string(StatementKind k) {
  switch (k) {
    case StatementKind::identity: return "identity";
    case StatementKind::clause: return "clause";
    case StatementKind::quasi: return "quasi";
  }
  return "?";
}

inline const char* to_string(Role r) {
  switch (r) {
    case Role::axiom: return "axiom";
    case Role::lemma: return "lemma";
    case Role::property: return "property";
  }
  return "?";
}

/**
 * A universally quantified statement.
 *
 * `literals()` is always the clause form. For an identity it is the single
 * positive literal lhs = rhs. For a quasi-identity h1, ..., hk => c it is
 * c | ~h1 | ... | ~hk, and the hypotheses/conclusion are kept as
 * presentation.
 */
class Statement {
 public:
  Statement() = default;

  static Statement identity(std::string id, Term lhs, Term rhs) {
    Statement s;
    s.id_ = std::move(id);
    s.kind_ = StatementKind::identity;
    s.literals_ = {eq(std::move(lhs), std::move(rhs))};
    return s;
  }

  static Statement clause(std::string id, Clause literals) {
    if (literals.empty()) throw std::invalid_argument("clause '" + id + "' has no literals");
    Statement s;
    s.id_ = std::move(id);
    s.kind_ = StatementKind::clause;
    s.literals_ = std::move(literals);
    return s;
  }

  /// Hypotheses and conclusion must be positive literals.
  static Statement quasi(std::string id, std::vector<Literal> hypotheses, Literal conclusion) {
    auto all_pos = std::all_of(hypotheses.begin(), hypotheses.end(),
                               [](const Literal& l) { return l.positive(); });
    if (!all_pos || !conclusion.positive())
      throw std::invalid_argument("quasi-identity '" + id + "' must use equations only");
    Statement s;
    s.id_ = std::move(id);
    s.kind_ = StatementKind::quasi;
    s.literals_.push_back(conclusion);
    for (const auto& h : hypotheses) s.literals_.push_back(h.negated());
    s.hypotheses_ = std::move(hypotheses);
    return s;
  }

  const std::string& id() const noexcept { return id_; }
  StatementKind kind() const noexcept { return kind_; }
  const Clause& literals() const noexcept { return literals_; }

  bool is_identity() const noexcept { return kind_ == StatementKind::identity; }

  /// Identity sides. Precondition: is_identity().
  const Term& lhs() const { return literals_.front().lhs; }
  const Term& rhs() const { return literals_.front().rhs; }

  /// Quasi presentation. Precondition: kind() == quasi.
  const std::vector<Literal>& hypotheses() const noexcept { return hypotheses_; }
  const Literal& conclusion() const { return literals_.front(); }

  Role role() const noexcept { return role_; }
  const std::string& tag() const noexcept { return tag_; }
  const std::string& note() const noexcept { return note_; }

  Statement& with_role(Role r) { role_ = r; return *this; }
  Statement& with_tag(std::string t) { tag_ = std::move(t); return *this; }
  Statement& with_note(std::string n) { note_ = std::move(n); return *this; }
  Statement& with_id(std::string id) { id_ = std::move(id); return *this; }

  /// Variables in order of first occurrence in the presentation.
  std::vector<std::string> variables() const {
    std::vector<std::string> out;
    auto scan = [&](const Literal& l) {
      detail::collect_ordered(l.lhs, out);
      detail::collect_ordered(l.rhs, out);
    };
    if (kind_ == StatementKind::quasi) {
      for (const auto& h : hypotheses_) scan(h);
      scan(conclusion());
    } else {
      for (const auto& l : literals_) scan(l);
    }
    return out;
  }

  /// Human-readable presentation.
  std::string str() const {
    switch (kind_) {
      case StatementKind::identity:
        return format_term(lhs()) + " = " + format_term(rhs());
      case StatementKind::clause:
        return format_clause(literals_);
      case StatementKind::quasi: {
        std::string s;
        for (std::size_t i = 0; i < hypotheses_.size(); ++i) {
          if (i) s += " & ";
          s += format_literal(hypotheses_[i]);
        }
        return s + " => " + format_literal(conclusion());
      }
    }
    return {};
  }

  /// Same kind and same literals (ignores id and metadata).
  bool same_content(const Statement& o) const {
    return kind_ == o.kind_ && literals_ == o.literals_ && hypotheses_ == o.hypotheses_;
  }

 private:
  std::string id_;
  StatementKind kind_ = StatementKind::identity;
  Clause literals_;
  std::vector<Literal> hypotheses_;
  Role role_ = Role::lemma;
  std::string tag_;
  std::string note_;
};

inline std::string format_substitution(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) out += ", ";
    first = false;
    out += v + " := " + format_term(t);
  }
  return out + "}";
}

/// Applies `s` to every term; the result id is the source id followed by
/// the substitution.
inline Statement instantiate(const Statement& st, const Substitution& s) {
  Statement out;
  switch (st.kind()) {
    case StatementKind::identity:
      out = Statement::identity(st.id(), substitute(st.lhs(), s), substitute(st.rhs(), s));
      break;
    case StatementKind::clause: {
      Clause c;
      for (const auto& l : st.literals()) c.push_back(substitute(l, s));
      out = Statement::clause(st.id(), std::move(c));
      break;
    }
    case StatementKind::quasi: {
      std::vector<Literal> hyps;
      for (const auto& h : st.hypotheses()) hyps.push_back(substitute(h, s));
      out = Statement::quasi(st.id(), std::move(hyps), substitute(st.conclusion(), s));
      break;
    }
  }
  out.with_role(st.role()).with_tag(st.tag()).with_note(st.note());
  if (!s.empty()) out.with_id(st.id() + format_substitution(s));
  return out;
}

/// The equivalent clause: hypotheses negated, conclusion kept.
inline Statement clause_form(const Statement& st) {
  Statement out = Statement::clause(st.id(), st.literals());
  out.with_role(st.role()).with_tag(st.tag()).with_note(st.note());
  return out;
}

struct AxiomSystem {
  std::string name;
  std::vector<std::string> members;
};

}  // namespace abeforge

#endif  // ABEFORGE_STATEMENT_HPP
