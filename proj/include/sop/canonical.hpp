// Copyright 2026 The sop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Generator-minimal equivalence presentations and the isomorphism problem
// for C(2) presentations.
//
// In a C(2) presentation a generator is redundant exactly when it is one
// side of a non-trivial relation; it can then be removed, replacing all
// relations that mention it by the pairs over its other sides.  Repeating
// this, taking the equivalence closure, and dropping relation words with
// no proper complement gives a presentation that is unique up to
// renaming generators.  Two C(2) presentations present isomorphic monoids
// iff these reduced forms are related by a bijection of generators.

#ifndef SOP_CANONICAL_HPP
#define SOP_CANONICAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "sop/core.hpp"

namespace sop {

  // Letter i of the source alphabet maps to letter map[i] of the target.
  struct GeneratorBijection {
    std::vector<Letter> map;

    GeneratorBijection inverse() const;
    Word               apply(WordView w) const;
    bool operator==(GeneratorBijection const&) const = default;
  };

  struct RedundantGenerator {
    Letter generator;
    Word   replacement;
  };

  // Smallest-index generator a with a non-trivial relation (a, w) or
  // (w, a), together with the shortest, then lexicographically least, such
  // w.  Requires C(2).
  std::optional<RedundantGenerator> find_redundant_generator(Presentation const& p);

  // Removes a redundant generator: drops every relation with a side equal
  // to the one-letter word a and adds all pairs over the other sides of
  // those relations.  Throws InvalidArgument if a is not redundant and
  // PreconditionError if a occurs inside another relation word.
  Presentation eliminate_generator(Presentation const& p, Letter a);

  // Records how generators of the input were rewritten so that words over
  // the input alphabet can be carried to the canonical alphabet.
  class Provenance {
   public:
    struct Step {
      std::string              generator;
      std::vector<std::string> replacement;  // tokens of the input alphabet
    };

    Provenance() = default;
    explicit Provenance(Alphabet source) : _source(std::move(source)) {}

    Alphabet const& source() const noexcept {
      return _source;
    }
    std::vector<Step> const& eliminated() const noexcept {
      return _steps;
    }
    // Canonical token for each surviving source token.
    std::vector<std::pair<std::string, std::string>> const& renamed() const noexcept {
      return _renamed;
    }

    // Image of a word over the source alphabet in the canonical alphabet.
    Word translate(WordView w, Alphabet const& target) const;

    void record_elimination(std::string generator, std::vector<std::string> replacement);
    void record_renaming(std::string from, std::string to);

   private:
    Alphabet                                         _source;
    std::vector<Step>                                _steps;
    std::vector<std::pair<std::string, std::string>> _renamed;
  };

  // Iterates find/eliminate to a fixed point.  Requires C(2).
  Presentation generator_minimal(Presentation const& p);
  Presentation generator_minimal(Presentation const& p, Provenance& provenance);

  // generator_minimal, then equivalence_closure, then removal of relation
  // words with no proper complement; generators keep their names.
  // Requires C(2).
  Presentation reduced_form(Presentation const& p);

  struct CanonicalPresentation {
    Presentation presentation;
    Provenance   provenance;
  };

  // generator_minimal, equivalence_closure, removal of relation words with
  // no proper complement, then relabeling to g0, g1, ... with the
  // relations sorted.  The labeling is the lexicographically least sorted
  // relation list (comparing words shortlex by letter index) over all
  // labelings that order generators by an isomorphism-invariant occurrence
  // signature; generators occurring in no relation take the highest
  // labels.  Requires C(2).
  CanonicalPresentation canonicalize(Presentation const& p);

  // Whether b maps every relation of p to a relation of q.  Throws
  // InvalidArgument when b is not a map from p's alphabet into q's.
  bool inclusion_check(Presentation const&       p,
                       Presentation const&       q,
                       GeneratorBijection const& b);

  // Lexicographically least bijection that is an inclusion both ways, if
  // any.  Relations are compared as sets.
  std::optional<GeneratorBijection> presentations_isomorphic(Presentation const& p,
                                                             Presentation const& q);

  // Requires both inputs to be C(2); compares canonical serializations.
  bool monoids_isomorphic(Presentation const& p, Presentation const& q);

}  // namespace sop

#endif  // SOP_CANONICAL_HPP
