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
 * Isomorph-free enumeration of finite models, a brute-force oracle for
 * small sizes, and counterexample search.
 *
 * The search fixes the unit at n-1, pre-fills the cells forced by the
 * unit/diagonal identities when the theory has them, then fills the
 * remaining cells row-major with values in ascending order. After each
 * fill, every axiom instance whose literals are all determined is checked.
 * Completed tables are kept only if they are their own canonical form, so
 * models come out in ascending canonical order.
 */

#ifndef ABEFORGE_ENUMERATOR_HPP
#define ABEFORGE_ENUMERATOR_HPP

#include <abeforge/corpus.hpp>
#include <abeforge/model.hpp>

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace abeforge {

struct EnumerationOptions {
  /// Worker threads; 1 runs everything on the calling thread.
  std::size_t threads = 1;
  /// Per-size cap on search nodes.
  std::optional<std::uint64_t> budget_nodes;
};

struct SizeResult {
  std::size_t n = 0;
  std::vector<FiniteAlgebra> models;
  std::uint64_t nodes = 0;
  bool budget_exceeded = false;
  double millis = 0;
};

namespace detail {

inline constexpr Element hole = 0xFF;

enum class Forced : std::uint8_t { none, unit_row, unit_column, diagonal };

/// Recognizes 1 -> x = x, x -> 1 = 1 and x -> x = 1 in either orientation.
inline Forced forced_cells(const Statement& st) {
  if (!st.is_identity()) return Forced::none;
  static const Term x = var("x");
  static const std::vector<std::pair<Term, Term>> shapes = {
      {arrow(Term::unit(), x), x},
      {arrow(x, Term::unit()), Term::unit()},
      {arrow(x, x), Term::unit()},
  };
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (int flip = 0; flip < 2; ++flip) {
      const Term& a = flip ? st.rhs() : st.lhs();
      const Term& b = flip ? st.lhs() : st.rhs();
      auto m1 = match_pattern(shapes[i].first, a);
      if (!m1 || m1->size() != 1 || !m1->begin()->second.is_variable()) continue;
      if (substitute(shapes[i].second, *m1) == b) return static_cast<Forced>(i + 1);
    }
  }
  return Forced::none;
}

class TableSearch {
 public:
  TableSearch(const Theory& th, std::size_t n) : n_(n), unit_(static_cast<Element>(n - 1)), table_(n * n, hole) {
    for (const auto& ax : th.axioms) {
      axioms_.push_back(compile(ax));
      switch (forced_cells(ax)) {
        case Forced::unit_row:
          for (std::size_t j = 0; j < n; ++j) force(unit_, j, static_cast<Element>(j));
          break;
        case Forced::unit_column:
          for (std::size_t i = 0; i < n; ++i) force(i, unit_, unit_);
          break;
        case Forced::diagonal:
          for (std::size_t i = 0; i < n; ++i) force(i, i, unit_);
          break;
        case Forced::none:
          break;
      }
    }
    for (std::size_t c = 0; c < n * n; ++c)
      if (table_[c] == hole) free_.push_back(c);
    std::size_t arity = 0;
    for (const auto& a : axioms_) arity = std::max(arity, a.vars.size());
    slots_.assign(arity, 0);
  }

  std::size_t free_cells() const noexcept { return free_.size(); }

  /// The pre-filled table violates nothing.
  bool root_consistent() { return !conflict_ && consistent(); }

  /// Runs the subtree below the first `prefix.size()` free cells fixed to
  /// `prefix`. `emit` receives canonical complete models in order.
  template <typename Emit>
  void run(const std::vector<Element>& prefix, std::uint64_t cap, Emit&& emit) {
    nodes_ = 0;
    exceeded_ = false;
    cap_ = cap;
    if (conflict_) return;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      table_[free_[i]] = prefix[i];
      if (!tick()) return;
    }
    if (consistent()) descend(prefix.size(), emit);
    for (std::size_t i = 0; i < prefix.size(); ++i) table_[free_[i]] = hole;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }
  bool exceeded() const noexcept { return exceeded_; }

 private:
  void force(std::size_t i, std::size_t j, Element v) {
    Element& c = table_[i * n_ + j];
    if (c != hole && c != v) conflict_ = true;
    c = v;
  }

  bool tick() {
    if (++nodes_ > cap_) {
      exceeded_ = true;
      return false;
    }
    return true;
  }

  template <typename Emit>
  void descend(std::size_t depth, Emit& emit) {
    if (exceeded_) return;
    if (depth == free_.size()) {
      FiniteAlgebra m(n_, unit_, table_);
      if (is_canonical(m)) emit(std::move(m));
      return;
    }
    const std::size_t cell = free_[depth];
    for (std::size_t v = 0; v < n_ && !exceeded_; ++v) {
      table_[cell] = static_cast<Element>(v);
      if (!tick()) break;
      if (consistent()) descend(depth + 1, emit);
    }
    table_[cell] = hole;
  }

  /// False iff some instance has every literal determined and false.
  bool consistent() {
    for (const auto& ax : axioms_) {
      const std::size_t k = ax.vars.size();
      std::fill(slots_.begin(), slots_.begin() + static_cast<std::ptrdiff_t>(k), Element{0});
      while (true) {
        bool open = false;
        for (const auto& l : ax.literals) {
          Element a = run_term(l.lhs);
          if (a == hole) { open = true; break; }
          Element b = run_term(l.rhs);
          if (b == hole) { open = true; break; }
          if ((a == b) == l.positive) { open = true; break; }
        }
        if (!open) return false;
        std::size_t i = k;
        bool done = true;
        while (i > 0) {
          --i;
          if (++slots_[i] < n_) { done = false; break; }
          slots_[i] = 0;
        }
        if (done) break;
      }
    }
    return true;
  }

  Element run_term(const CompiledTerm& t) const {
    return detail::run(t, table_.data(), n_, unit_, slots_.data(), hole);
  }

  std::size_t n_;
  Element unit_;
  std::vector<Element> table_;
  std::vector<std::size_t> free_;
  std::vector<CompiledStatement> axioms_;
  std::vector<Element> slots_;
  bool conflict_ = false;
  std::uint64_t nodes_ = 0, cap_ = 0;
  bool exceeded_ = false;
};

}  // namespace detail

/// Streams one model per isomorphism class on the calling thread, in
/// ascending canonical order. Returns the number of search nodes and
/// whether the budget stopped the search.
template <typename Visit>
std::pair<std::uint64_t, bool> for_each_model(const Theory& th, std::size_t n, Visit&& visit,
                                              std::optional<std::uint64_t> budget = std::nullopt) {
  if (n < 1 || n > FiniteAlgebra::max_size) throw std::invalid_argument("size must be at least 1");
  detail::TableSearch s(th, n);
  s.run({}, budget.value_or(UINT64_MAX), visit);
  return {s.nodes(), s.exceeded()};
}

/**
 * All size-n models of `th` up to isomorphism, in ascending canonical
 * order. With several threads the tree is split at the first free cell;
 * results, node counts and the budget verdict do not depend on the worker
 * count. When the budget is exceeded `models` is empty and `nodes` equals
 * the budget.
 */
inline SizeResult enumerate_models(const Theory& th, std::size_t n, const EnumerationOptions& opt = {}) {
  if (n < 1) throw std::invalid_argument("size must be at least 1");
  auto start = std::chrono::steady_clock::now();
  SizeResult res;
  res.n = n;
  const std::uint64_t cap = opt.budget_nodes.value_or(UINT64_MAX);

  detail::TableSearch probe(th, n);
  if (opt.threads <= 1 || probe.free_cells() == 0 || !probe.root_consistent()) {
    probe.run({}, cap, [&](FiniteAlgebra m) { res.models.push_back(std::move(m)); });
    res.nodes = probe.nodes();
    res.budget_exceeded = probe.exceeded();
  } else {
    struct Part {
      std::vector<FiniteAlgebra> models;
      std::uint64_t nodes = 0;
      bool exceeded = false;
    };
    std::vector<Part> parts(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      detail::TableSearch s(th, n);
      for (std::size_t v; (v = next.fetch_add(1)) < n;) {
        s.run({static_cast<Element>(v)}, cap, [&](FiniteAlgebra m) { parts[v].models.push_back(std::move(m)); });
        parts[v].nodes = s.nodes();
        parts[v].exceeded = s.exceeded();
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < std::min(opt.threads, n); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    res.nodes = 0;
    for (auto& p : parts) {
      res.nodes += p.nodes;
      res.budget_exceeded = res.budget_exceeded || p.exceeded;
      for (auto& m : p.models) res.models.push_back(std::move(m));
    }
    if (res.nodes > cap) res.budget_exceeded = true;
    std::sort(res.models.begin(), res.models.end(), [](const FiniteAlgebra& a, const FiniteAlgebra& b) {
      return std::lexicographical_compare(a.table().begin(), a.table().end(), b.table().begin(), b.table().end());
    });
  }
  if (res.budget_exceeded) {
    res.models.clear();
    res.nodes = cap;
  }
  res.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return res;
}

struct OracleCounts {
  std::uint64_t labeled = 0;
  std::uint64_t classes = 0;
};

inline constexpr std::size_t brute_force_max_size = 3;

/// Tries every table on {0..n-1} with unit n-1 and counts the models,
/// both as labelled tables and as canonical-form classes.
inline OracleCounts brute_force_models(const Theory& th, std::size_t n) {
  if (n < 1 || n > brute_force_max_size)
    throw std::invalid_argument("brute force is limited to sizes 1.." + std::to_string(brute_force_max_size) +
                                " (got " + std::to_string(n) + ")");
  const std::size_t cells = n * n;
  std::vector<Element> t(cells, 0);
  std::set<std::string> forms;
  OracleCounts out;
  while (true) {
    FiniteAlgebra m(n, static_cast<Element>(n - 1), t);
    if (is_model(m, th)) {
      ++out.labeled;
      forms.insert(canonical_form(m));
    }
    std::size_t i = 0;
    while (i < cells && ++t[i] == n) t[i++] = 0;
    if (i == cells) break;
  }
  out.classes = forms.size();
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct PropertyVerdict {
  enum class Status : std::uint8_t { holds, counterexample, inconclusive };

  std::string id;
  Status status = Status::holds;
  std::optional<FiniteAlgebra> model;
  std::optional<Witness> witness;

  static const char* name(Status s) {
    switch (s) {
      case Status::holds: return "holds";
      case Status::counterexample: return "counterexample";
      case Status::inconclusive: return "budget exceeded";
    }
    return "?";
  }
};

struct SizeStats {
  std::size_t n = 0;
  std::size_t count = 0;
  std::uint64_t nodes = 0;
  bool budget_exceeded = false;
  double millis = 0;
};

struct EnumerationReport {
  std::string axioms;
  std::vector<SizeStats> sizes;
  std::vector<PropertyVerdict> properties;

  /// Timings are left out unless asked for, so the default output is
  /// byte-stable.
  nlohmann::ordered_json to_json(bool timings = false) const {
    using oj = nlohmann::ordered_json;
    oj j;
    j["axioms"] = axioms;
    oj sz = oj::array();
    for (const auto& s : sizes) {
      oj e;
      e["n"] = s.n;
      if (s.budget_exceeded) {
        e["count"] = nullptr;
        e["status"] = "budget exceeded";
      } else {
        e["count"] = s.count;
      }
      e["nodes"] = s.nodes;
      if (timings) e["millis"] = s.millis;
      sz.push_back(e);
    }
    j["sizes"] = sz;
    oj props = oj::array();
    for (const auto& p : properties) {
      oj e;
      e["id"] = p.id;
      e["status"] = PropertyVerdict::name(p.status);
      if (p.model) e["model"] = model_to_json(*p.model);
      if (p.witness) e["witness"] = witness_to_json(*p.witness);
      props.push_back(e);
    }
    j["properties"] = props;
    return j;
  }

  std::string text(bool timings = true) const {
    std::ostringstream os;
    os << "axioms: " << axioms << "\n";
    os << "   n       models          nodes";
    if (timings) os << "        ms";
    os << "\n";
    for (const auto& s : sizes) {
      char line[128];
      if (s.budget_exceeded)
        std::snprintf(line, sizeof line, "%4zu  %11s  %13llu", s.n, "budget", static_cast<unsigned long long>(s.nodes));
      else
        std::snprintf(line, sizeof line, "%4zu  %11zu  %13llu", s.n, s.count, static_cast<unsigned long long>(s.nodes));
      os << line;
      if (timings) {
        std::snprintf(line, sizeof line, "  %8.1f", s.millis);
        os << line;
      }
      os << "\n";
    }
    for (const auto& p : properties) {
      os << p.id << ": " << PropertyVerdict::name(p.status);
      if (p.witness) os << " (witness " << p.witness->str() << ")";
      os << "\n";
    }
    return os.str();
  }
};

/**
 * Enumerates sizes 1..max_size and checks each property on every model.
 * With `stop_at_counterexample`, sizes after the first one holding a
 * counterexample to any property are not searched.
 */
inline EnumerationReport run_enumeration(const Theory& th, std::size_t max_size,
                                         const std::vector<Statement>& props, const EnumerationOptions& opt = {},
                                         bool stop_at_counterexample = false,
                                         std::vector<SizeResult>* keep = nullptr) {
  EnumerationReport rep;
  rep.axioms = th.name;
  std::vector<CompiledStatement> compiled;
  for (const auto& p : props) {
    compiled.push_back(compile(p));
    rep.properties.push_back({p.id(), PropertyVerdict::Status::holds, std::nullopt, std::nullopt});
  }
  bool any_exceeded = false;
  for (std::size_t n = 1; n <= max_size; ++n) {
    SizeResult r = enumerate_models(th, n, opt);
    rep.sizes.push_back({n, r.models.size(), r.nodes, r.budget_exceeded, r.millis});
    any_exceeded = any_exceeded || r.budget_exceeded;
    bool found = false;
    for (std::size_t k = 0; k < props.size(); ++k) {
      auto& verdict = rep.properties[k];
      if (verdict.status == PropertyVerdict::Status::counterexample) continue;
      for (const auto& m : r.models) {
        Verdict v = satisfies(m, compiled[k]);
        if (!v) {
          verdict.status = PropertyVerdict::Status::counterexample;
          verdict.model = m;
          verdict.witness = v.witness;
          found = true;
          break;
        }
      }
    }
    if (keep) keep->push_back(std::move(r));
    if (found && stop_at_counterexample) break;
  }
  if (any_exceeded)
    for (auto& p : rep.properties)
      if (p.status == PropertyVerdict::Status::holds) p.status = PropertyVerdict::Status::inconclusive;
  return rep;
}

struct Counterexample {
  FiniteAlgebra model;
  Witness witness;
};

/// The first model of `th` (by size, then canonical order) falsifying
/// `prop`, or nullopt if none exists up to max_size.
inline std::optional<Counterexample> find_counterexample(const Theory& th, const Statement& prop,
                                                         std::size_t max_size, const EnumerationOptions& opt = {}) {
  auto rep = run_enumeration(th, max_size, {prop}, opt, true);
  const auto& v = rep.properties.front();
  if (v.status != PropertyVerdict::Status::counterexample) return std::nullopt;
  return Counterexample{*v.model, *v.witness};
}

}  // namespace abeforge

#endif  // ABEFORGE_ENUMERATOR_HPP
