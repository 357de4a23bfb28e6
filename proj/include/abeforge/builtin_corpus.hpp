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
 * The built-in corpus: the implicative aBE axioms, the transitivity and
 * commutativity properties, and the proof scripts deriving transitivity.
 *
 * Tags "(1)" .. "(18)" are display labels only. "aBE" is read as
 * ax1..ax5 and "implicative-aBE" as ax1..ax6.
 */

#ifndef ABEFORGE_BUILTIN_CORPUS_HPP
#define ABEFORGE_BUILTIN_CORPUS_HPP

#include <abeforge/corpus.hpp>

namespace abeforge {

namespace detail {

inline constexpr const char* builtin_corpus_json = R"json(
{
  "statements": [
    {"id": "ax1", "kind": "identity", "role": "axiom", "tag": "(1)", "lhs": "1 -> x", "rhs": "x"},
    {"id": "ax2", "kind": "identity", "role": "axiom", "tag": "(2)", "lhs": "x -> 1", "rhs": "1"},
    {"id": "ax3", "kind": "identity", "role": "axiom", "tag": "(3)", "lhs": "x -> x", "rhs": "1"},
    {"id": "ax4", "kind": "identity", "role": "axiom", "tag": "(4)", "lhs": "x -> y -> z", "rhs": "y -> x -> z"},
    {"id": "ax5", "kind": "quasi", "role": "axiom", "tag": "(5)",
     "hypotheses": [{"lhs": "x -> y", "polarity": "=", "rhs": "1"},
                    {"lhs": "y -> x", "polarity": "=", "rhs": "1"}],
     "conclusion": {"lhs": "x", "polarity": "=", "rhs": "y"}},
    {"id": "ax6", "kind": "identity", "role": "axiom", "tag": "(6)", "lhs": "(x -> y) -> x", "rhs": "x"},

    {"id": "trans", "kind": "quasi", "role": "property", "tag": "(7)",
     "hypotheses": [{"lhs": "x -> y", "polarity": "=", "rhs": "1"},
                    {"lhs": "y -> z", "polarity": "=", "rhs": "1"}],
     "conclusion": {"lhs": "x -> z", "polarity": "=", "rhs": "1"}},
    {"id": "commutativity", "kind": "identity", "role": "property",
     "lhs": "(x -> y) -> y", "rhs": "(y -> x) -> x",
     "note": "corollary, not proved here; checked on finite models only"},

    {"id": "lem8a", "kind": "clause", "role": "lemma", "tag": "(8)",
     "literals": [{"lhs": "x", "polarity": "=", "rhs": "y -> x"},
                  {"lhs": "(y -> x) -> x", "polarity": "!=", "rhs": "1"}]},
    {"id": "lem8b", "kind": "clause", "role": "lemma", "tag": "(9)",
     "literals": [{"lhs": "x", "polarity": "=", "rhs": "(x -> y) -> y"},
                  {"lhs": "((x -> y) -> y) -> x", "polarity": "!=", "rhs": "1"}]},
    {"id": "lem10", "kind": "identity", "role": "lemma", "tag": "(10)",
     "lhs": "x -> y", "rhs": "(z -> x) -> x -> y"},
    {"id": "lem11", "kind": "identity", "role": "lemma", "tag": "(11)",
     "lhs": "((y -> x) -> z) -> t", "rhs": "((y -> x) -> z) -> (x -> z) -> t"},
    {"id": "lem12", "kind": "identity", "role": "lemma", "tag": "(12)",
     "lhs": "(((x -> y) -> z) -> y) -> x -> y", "rhs": "1"},
    {"id": "lem13", "kind": "identity", "role": "lemma", "tag": "(13)",
     "lhs": "((((x -> y) -> y) -> x) -> y) -> y", "rhs": "1"},
    {"id": "lem14", "kind": "identity", "role": "lemma", "tag": "(14)",
     "lhs": "y", "rhs": "(((x -> y) -> y) -> x) -> y"},
    {"id": "lem15", "kind": "identity", "role": "lemma", "tag": "(15)",
     "lhs": "x -> y", "rhs": "x -> ((x -> y) -> z) -> y"},
    {"id": "lem16", "kind": "identity", "role": "lemma", "tag": "(16)",
     "lhs": "((x -> y) -> y) -> x", "rhs": "((x -> y) -> y) -> y -> x"},
    {"id": "lem17", "kind": "identity", "role": "lemma", "tag": "(17)",
     "lhs": "y -> x", "rhs": "((x -> y) -> y) -> x"},
    {"id": "lem18", "kind": "clause", "role": "lemma", "tag": "(18)",
     "literals": [{"lhs": "(x -> y) -> y", "polarity": "=", "rhs": "x"},
                  {"lhs": "y -> x", "polarity": "!=", "rhs": "1"}]}
  ],

  "systems": [
    {"name": "aBE", "members": ["ax1", "ax2", "ax3", "ax4", "ax5"]},
    {"name": "implicative-aBE", "members": ["ax1", "ax2", "ax3", "ax4", "ax5", "ax6"]}
  ],

  "scripts": [
    {"id": "ax5-clause", "target": "ax5", "depends_on": ["ax5"],
     "note": "disjunctive reading x = y | x -> y != 1 | y -> x != 1 of antisymmetry",
     "steps": [
       {"rule": "clause-instantiate", "clause": "ax5", "subst": {}}
     ]},

    {"id": "lem8a", "target": "lem8a", "depends_on": ["ax2", "ax3", "ax4", "ax5"],
     "steps": [
       {"rule": "clause-instantiate", "clause": "ax5", "subst": {"x": "x", "y": "y -> x"}},
       {"rule": "literal-elim", "literal": 2, "chain": [
         {"rule": "rewrite", "by": "ax4", "subst": {"x": "x", "y": "y", "z": "x"}, "pos": "", "dir": "l2r"},
         {"rule": "rewrite", "by": "ax3", "subst": {"x": "x"}, "pos": "R", "dir": "l2r"},
         {"rule": "rewrite", "by": "ax2", "subst": {"x": "y"}, "pos": "", "dir": "l2r"}
       ]}
     ]},

    {"id": "lem8b", "target": "lem8b", "depends_on": ["ax3", "ax4", "ax5"],
     "steps": [
       {"rule": "clause-instantiate", "clause": "ax5", "subst": {"x": "x", "y": "(x -> y) -> y"}},
       {"rule": "literal-elim", "literal": 2, "chain": [
         {"rule": "rewrite", "by": "ax4", "subst": {"x": "x", "y": "x -> y", "z": "y"}, "pos": "", "dir": "l2r"},
         {"rule": "rewrite", "by": "ax3", "subst": {"x": "x -> y"}, "pos": "", "dir": "l2r"}
       ]}
     ]},

    {"id": "lem10", "target": "lem10", "depends_on": ["ax4", "ax6"],
     "steps": [
       {"rule": "rewrite", "by": "ax6", "subst": {"x": "x -> y", "y": "z -> x"}, "pos": "", "dir": "r2l"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "x -> y", "y": "z", "z": "x"}, "pos": "L", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax6", "subst": {"x": "x", "y": "y"}, "pos": "LR", "dir": "l2r"}
     ]},

    {"id": "lem11", "target": "lem11", "depends_on": ["ax4", "lem10"],
     "note": "a := (y -> x) -> z; x -> a is first reduced to x -> z",
     "steps": [
       {"rule": "rewrite", "by": "lem10", "subst": {"x": "(y -> x) -> z", "y": "t", "z": "x"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "x -> (y -> x) -> z", "y": "(y -> x) -> z", "z": "t"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "x", "y": "y -> x", "z": "z"}, "pos": "RL", "dir": "l2r"},
       {"rule": "rewrite", "by": "lem10", "subst": {"x": "x", "y": "z", "z": "y"}, "pos": "RL", "dir": "r2l"}
     ]},

    {"id": "lem12", "target": "lem12", "depends_on": ["ax2", "ax3", "ax4", "ax6"],
     "note": "a := (x -> y) -> z",
     "steps": [
       {"rule": "rewrite", "by": "ax6", "subst": {"x": "x -> y", "y": "z"}, "pos": "R", "dir": "r2l"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "(x -> y) -> z", "y": "x", "z": "y"}, "pos": "R", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "((x -> y) -> z) -> y", "y": "x", "z": "((x -> y) -> z) -> y"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax3", "subst": {"x": "((x -> y) -> z) -> y"}, "pos": "R", "dir": "l2r"},
       {"rule": "rewrite", "by": "ax2", "subst": {"x": "x"}, "pos": "", "dir": "l2r"}
     ]},

    {"id": "lem13", "target": "lem13", "depends_on": ["lem11", "lem12"],
     "steps": [
       {"rule": "rewrite", "by": "lem11", "subst": {"x": "x", "y": "(x -> y) -> y", "z": "y", "t": "y"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "lem12", "subst": {"x": "x -> y", "y": "y", "z": "x"}, "pos": "", "dir": "l2r"}
     ]},

    {"id": "lem14", "target": "lem14", "depends_on": ["lem8a", "lem13"],
     "steps": [
       {"rule": "clause-instantiate", "clause": "lem8a", "subst": {"x": "y", "y": "((x -> y) -> y) -> x"}},
       {"rule": "literal-elim", "literal": 2, "chain": [
         {"rule": "rewrite", "by": "lem13", "subst": {"x": "x", "y": "y"}, "pos": "", "dir": "l2r"}
       ]}
     ]},

    {"id": "lem15", "target": "lem15", "depends_on": ["ax4", "ax6"],
     "steps": [
       {"rule": "rewrite", "by": "ax6", "subst": {"x": "x -> y", "y": "z"}, "pos": "", "dir": "r2l"},
       {"rule": "rewrite", "by": "ax4", "subst": {"x": "(x -> y) -> z", "y": "x", "z": "y"}, "pos": "", "dir": "l2r"}
     ]},

    {"id": "lem16", "target": "lem16", "depends_on": ["lem14", "lem15"],
     "note": "reconstructed: step 1 instantiates lem15 with z := y, making the subterm at RL equal to the rhs of lem14",
     "steps": [
       {"rule": "rewrite", "by": "lem15", "subst": {"x": "(x -> y) -> y", "y": "x", "z": "y"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "lem14", "subst": {"x": "x", "y": "y"}, "pos": "RL", "dir": "r2l"}
     ]},

    {"id": "lem17", "target": "lem17", "depends_on": ["lem10", "lem16"],
     "steps": [
       {"rule": "rewrite", "by": "lem10", "subst": {"x": "y", "y": "x", "z": "x -> y"}, "pos": "", "dir": "l2r"},
       {"rule": "rewrite", "by": "lem16", "subst": {"x": "x", "y": "y"}, "pos": "", "dir": "r2l"}
     ]},

    {"id": "lem18", "target": "lem18", "depends_on": ["lem8b", "lem17"],
     "steps": [
       {"rule": "clause-instantiate", "clause": "lem8b", "subst": {}},
       {"rule": "clause-literal-rewrite", "literal": 2, "by": "lem17", "subst": {"x": "x", "y": "y"}, "pos": "L", "dir": "r2l"}
     ]},

    {"id": "thm", "target": "trans", "depends_on": ["lem18", "ax2", "ax4"],
     "constants": ["a", "b", "c"],
     "hypotheses": [{"lhs": "a -> b", "polarity": "=", "rhs": "1"},
                    {"lhs": "b -> c", "polarity": "=", "rhs": "1"},
                    {"lhs": "a -> c", "polarity": "!=", "rhs": "1"}],
     "steps": [
       {"rule": "split", "clause": "lem18", "subst": {"x": "c", "y": "b"}, "branches": [
         [
           {"rule": "rewrite", "by": "hyp:branch", "subst": {}, "pos": "R", "dir": "r2l"},
           {"rule": "rewrite", "by": "ax4", "subst": {"x": "a", "y": "c -> b", "z": "b"}, "pos": "", "dir": "l2r"},
           {"rule": "rewrite", "by": "hyp:1", "subst": {}, "pos": "R", "dir": "l2r"},
           {"rule": "rewrite", "by": "ax2", "subst": {"x": "c -> b"}, "pos": "", "dir": "l2r"},
           {"rule": "close-conflict", "hypothesis": 3}
         ],
         [
           {"rule": "close-conflict", "hypothesis": 2}
         ]
       ]}
     ]}
  ]
}
)json";

}  // namespace detail

/// The built-in corpus. Parsed once; copies are cheap to share.
inline const Corpus& load_corpus() {
  static const Corpus c = parse_corpus(detail::builtin_corpus_json);
  return c;
}

}  // namespace abeforge

#endif  // ABEFORGE_BUILTIN_CORPUS_HPP
