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
 * Terms over the signature {1, ->}: construction, concrete syntax,
 * substitution, one-way matching and positional access.
 */

#ifndef ABEFORGE_TERM_HPP
#define ABEFORGE_TERM_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace abeforge {

/// Raised on malformed term text. `offset()` is the byte offset of the
/// offending token in the input.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class reserved_name_error : public std::invalid_argument {
 public:
  explicit reserved_name_error(const std::string& name)
      : std::invalid_argument("'" + name + "' is not a valid identifier") {}
};

/// Raised when a position does not address a subterm. `selector_index()`
/// is the 0-based index of the first selector that failed to descend.
class invalid_position : public std::out_of_range {
 public:
  invalid_position(const std::string& path, std::size_t index)
      : std::out_of_range("position '" + path + "' invalid at selector " +
                          std::to_string(index)),
        index_(index) {}

  std::size_t selector_index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

namespace detail {

inline bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

inline bool ident_char(char c) {
  return ident_start(c) || (c >= '0' && c <= '9');
}

}  // namespace detail

/// True iff `s` matches [a-zA-Z_][a-zA-Z0-9_]*.
inline bool is_identifier(std::string_view s) {
  if (s.empty() || !detail::ident_start(s.front())) return false;
  for (char c : s)
    if (!detail::ident_char(c)) return false;
  return true;
}

/**
 * An immutable first-order term. Copies share structure; equality is
 * structural (a Variable and a Constant with the same name differ).
 */
class Term {
 public:
  enum class Kind : std::uint8_t { variable, unit, constant, arrow };

  Term() : Term(unit()) {}

  static Term variable(std::string name) {
    check_name(name);
    return Term(std::make_shared<const Node>(Node{Kind::variable, std::move(name), {}, {}, 1}));
  }

  static Term constant(std::string name) {
    check_name(name);
    return Term(std::make_shared<const Node>(Node{Kind::constant, std::move(name), {}, {}, 1}));
  }

  static Term unit() {
    static const Term one(std::make_shared<const Node>(Node{Kind::unit, "1", {}, {}, 1}));
    return one;
  }

  static Term arrow(Term left, Term right) {
    std::size_t n = 1 + left.size() + right.size();
    return Term(std::make_shared<const Node>(
        Node{Kind::arrow, {}, std::move(left.node_), std::move(right.node_), n}));
  }

  Kind kind() const noexcept { return node_->kind; }
  bool is_variable() const noexcept { return kind() == Kind::variable; }
  bool is_constant() const noexcept { return kind() == Kind::constant; }
  bool is_unit() const noexcept { return kind() == Kind::unit; }
  bool is_arrow() const noexcept { return kind() == Kind::arrow; }

  /// Name of a variable or constant; "1" for the unit; empty for arrows.
  const std::string& name() const noexcept { return node_->name; }

  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  /// Number of nodes.
  std::size_t size() const noexcept { return node_->size; }

  friend bool operator==(const Term& a, const Term& b) { return equal(a.node_.get(), b.node_.get()); }
  friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
    std::size_t size;
  };

  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static void check_name(const std::string& name) {
    if (!is_identifier(name)) throw reserved_name_error(name);
  }

  static bool equal(const Node* a, const Node* b) {
    while (true) {
      if (a == b) return true;
      if (a->kind != b->kind || a->size != b->size) return false;
      if (a->kind != Kind::arrow) return a->name == b->name;
      if (!equal(a->left.get(), b->left.get())) return false;
      a = a->right.get();
      b = b->right.get();
    }
  }

  std::shared_ptr<const Node> node_;
};

/// Variable name to image; applied simultaneously.
using Substitution = std::map<std::string, Term>;

inline Term arrow(Term l, Term r) { return Term::arrow(std::move(l), std::move(r)); }
inline Term var(std::string name) { return Term::variable(std::move(name)); }

// ---------------------------------------------------------------------------
// Positions

enum class Selector : std::uint8_t { left, right };

/// Path from the root; empty means the whole term.
class Position {
 public:
  Position() = default;
  Position(std::initializer_list<Selector> s) : path_(s) {}
  explicit Position(std::vector<Selector> s) : path_(std::move(s)) {}

  /// Parses a string over {L, R}; "" is the root.
  static Position parse(std::string_view text) {
    std::vector<Selector> p;
    p.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] == 'L')
        p.push_back(Selector::left);
      else if (text[i] == 'R')
        p.push_back(Selector::right);
      else
        throw parse_error("position selector must be 'L' or 'R'", i);
    }
    return Position(std::move(p));
  }

  std::string str() const {
    std::string s;
    for (auto sel : path_) s += sel == Selector::left ? 'L' : 'R';
    return s;
  }

  const std::vector<Selector>& path() const noexcept { return path_; }
  std::size_t depth() const noexcept { return path_.size(); }
  bool empty() const noexcept { return path_.empty(); }

  Position child(Selector s) const {
    auto p = path_;
    p.push_back(s);
    return Position(std::move(p));
  }

  /// True iff this is a (non-strict) prefix of `other`.
  bool is_prefix_of(const Position& other) const {
    if (path_.size() > other.path_.size()) return false;
    for (std::size_t i = 0; i < path_.size(); ++i)
      if (path_[i] != other.path_[i]) return false;
    return true;
  }

  bool disjoint_from(const Position& other) const {
    return !is_prefix_of(other) && !other.is_prefix_of(*this);
  }

  friend bool operator==(const Position&, const Position&) = default;

 private:
  std::vector<Selector> path_;
};

inline Term subterm_at(const Term& t, const Position& p) {
  Term cur = t;
  const auto& path = p.path();
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (!cur.is_arrow()) throw invalid_position(p.str(), i);
    cur = path[i] == Selector::left ? cur.left() : cur.right();
  }
  return cur;
}

namespace detail {

inline Term replace_from(const Term& t, const Position& p, std::size_t i, const Term& r) {
  if (i == p.depth()) return r;
  if (!t.is_arrow()) throw invalid_position(p.str(), i);
  if (p.path()[i] == Selector::left) return arrow(replace_from(t.left(), p, i + 1, r), t.right());
  return arrow(t.left(), replace_from(t.right(), p, i + 1, r));
}

}  // namespace detail

inline Term replace_at(const Term& t, const Position& p, const Term& r) {
  return detail::replace_from(t, p, 0, r);
}

/// All valid positions of `t` in pre-order.
inline std::vector<Position> positions(const Term& t) {
  std::vector<Position> out;
  std::vector<std::pair<Term, Position>> stack{{t, Position{}}};
  while (!stack.empty()) {
    auto [cur, pos] = std::move(stack.back());
    stack.pop_back();
    if (cur.is_arrow()) {
      stack.emplace_back(cur.right(), pos.child(Selector::right));
      stack.emplace_back(cur.left(), pos.child(Selector::left));
    }
    out.push_back(std::move(pos));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Syntax

namespace detail {

class TermParser {
 public:
  TermParser(std::string_view text, const std::set<std::string>& constants)
      : text_(text), constants_(constants) {}

  Term parse() {
    Term t = term();
    skip_ws();
    if (pos_ != text_.size()) throw parse_error("unexpected trailing input", pos_);
    return t;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r'))
      ++pos_;
  }

  Term term() {
    // right-associative: collect atoms, fold from the right
    std::vector<Term> atoms{atom()};
    while (true) {
      skip_ws();
      if (text_.substr(pos_, 2) != "->") break;
      pos_ += 2;
      atoms.push_back(atom());
    }
    Term t = atoms.back();
    for (std::size_t i = atoms.size() - 1; i-- > 0;) t = arrow(atoms[i], t);
    return t;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of input", pos_);
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Term t = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') throw parse_error("expected ')'", pos_);
      ++pos_;
      return t;
    }
    if (c == '1') {
      ++pos_;
      if (pos_ < text_.size() && ident_char(text_[pos_]))
        throw parse_error("unexpected character after '1'", pos_);
      return Term::unit();
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      return constants_.count(name) ? Term::constant(std::move(name)) : Term::variable(std::move(name));
    }
    throw parse_error(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view text_;
  const std::set<std::string>& constants_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses the concrete syntax. Identifiers listed in `constants` become
/// proof-local constants, all others variables.
inline Term parse_term(std::string_view text, const std::set<std::string>& constants = {}) {
  return detail::TermParser(text, constants).parse();
}

namespace detail {

inline void format_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::variable:
    case Term::Kind::constant:
    case Term::Kind::unit:
      out += t.name();
      return;
    case Term::Kind::arrow: {
      Term l = t.left();
      if (l.is_arrow()) {
        out += '(';
        format_into(l, out);
        out += ')';
      } else {
        format_into(l, out);
      }
      out += " -> ";
      format_into(t.right(), out);
      return;
    }
  }
}

}  // namespace detail

inline std::string format_term(const Term& t) {
  std::string s;
  detail::format_into(t, s);
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const Term& t) { return os << format_term(t); }

// ---------------------------------------------------------------------------
// Substitution and matching

inline Term substitute(const Term& t, const Substitution& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case Term::Kind::variable: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case Term::Kind::arrow:
      return arrow(substitute(t.left(), s), substitute(t.right(), s));
    default:
      return t;
  }
}

/// sigma;tau: first sigma, then tau.
inline Substitution compose(const Substitution& sigma, const Substitution& tau) {
  Substitution out = tau;
  for (const auto& [v, img] : sigma) out.insert_or_assign(v, substitute(img, tau));
  return out;
}

namespace detail {

inline bool match_into(const Term& p, const Term& s, Substitution& sigma) {
  switch (p.kind()) {
    case Term::Kind::variable: {
      auto [it, inserted] = sigma.try_emplace(p.name(), s);
      return inserted || it->second == s;
    }
    case Term::Kind::arrow:
      return s.is_arrow() && match_into(p.left(), s.left(), sigma) &&
             match_into(p.right(), s.right(), sigma);
    default:
      return p == s;
  }
}

inline void collect_names(const Term& t, Term::Kind kind, std::set<std::string>& out) {
  if (t.is_arrow()) {
    collect_names(t.left(), kind, out);
    collect_names(t.right(), kind, out);
  } else if (t.kind() == kind) {
    out.insert(t.name());
  }
}

inline void collect_ordered(const Term& t, std::vector<std::string>& out) {
  if (t.is_arrow()) {
    collect_ordered(t.left(), out);
    collect_ordered(t.right(), out);
  } else if (t.is_variable()) {
    for (const auto& n : out)
      if (n == t.name()) return;
    out.push_back(t.name());
  }
}

}  // namespace detail

/// One-way matching: binds only pattern variables; subject variables are
/// inert symbols. Returns the minimal matcher or nullopt.
inline std::optional<Substitution> match_pattern(const Term& pattern, const Term& subject) {
  Substitution sigma;
  if (!detail::match_into(pattern, subject, sigma)) return std::nullopt;
  return sigma;
}

inline std::set<std::string> variables(const Term& t) {
  std::set<std::string> out;
  detail::collect_names(t, Term::Kind::variable, out);
  return out;
}

inline std::set<std::string> constants(const Term& t) {
  std::set<std::string> out;
  detail::collect_names(t, Term::Kind::constant, out);
  return out;
}

inline bool is_ground(const Term& t) {
  if (t.is_arrow()) return is_ground(t.left()) && is_ground(t.right());
  return !t.is_variable();
}

}  // namespace abeforge

#endif  // ABEFORGE_TERM_HPP
