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

// Word problem for C(4) presentations.
//
// Every relation word R factors as X Y Z with X (Z) its maximal piece
// prefix (suffix).  Under C(3) the words X Y are pairwise distinct, none
// is a factor of another relation word, and occurrences of them in a word
// never nest; the first such occurrence marks the shortest relation
// prefix.  Under C(4) an occurrence of X Y at position i can only be
// overlapped by a later X'Y' starting strictly inside Y, and a relation
// prefix ending at X Y is clean exactly when no such X'Y' occurs.  The
// decision procedure dispatches on the clean overlap prefix of the left
// word; every recursive call strictly lowers rho of its left argument or
// keeps rho and strips a non-empty leading word, so it terminates.

#ifndef SOP_WORDPROBLEM_HPP
#define SOP_WORDPROBLEM_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sop/core.hpp"
#include "sop/pieces.hpp"

namespace sop {

  struct OverlapPrefix {
    Word leading;  // part of the prefix before X
    Word x;
    Word y;
    Word source_relation_word;
    bool clean = false;

    std::size_t length() const noexcept {
      return leading.size() + x.size() + y.size();
    }
  };

  enum class EquivalenceStep : std::uint8_t {
    dump_prefix,
    case1,
    case2,
    case3,
    case4,
    case5,
    case6,
    no_clean_prefix,
    literal_equal,
  };

  char const* to_string(EquivalenceStep s) noexcept;

  struct EquivalenceTrace {
    std::vector<EquivalenceStep> steps;
    bool                         verdict = false;
  };

  // Precomputed data for a fixed presentation: piece table, XYZ
  // factorizations of all relation words, and complement classes.
  // Construction requires C(3); the word problem and the clean-prefix
  // machinery require C(4) and throw PreconditionError otherwise.
  class SmallOverlapSolver {
   public:
    explicit SmallOverlapSolver(Presentation const& p);

    Presentation const& presentation() const noexcept {
      return _table.presentation();
    }
    PieceTable const& pieces() const noexcept {
      return _table;
    }
    bool is_c4() const noexcept {
      return _c4;
    }
    std::size_t relation_word_count() const noexcept {
      return _rel.size();
    }
    XYZFactorization const& factorization(std::size_t i) const {
      return _rel.at(i);
    }
    // Indices of the relation words complementary to relation word i
    // (including i itself).
    std::vector<std::size_t> const& complements(std::size_t i) const {
      return _classes.at(_class_of.at(i));
    }

    std::optional<OverlapPrefix> first_relation_prefix(WordView w) const;
    std::optional<OverlapPrefix> clean_overlap_prefix(WordView w) const;
    // -1 when w has no clean overlap prefix, otherwise the length of the
    // suffix following it.
    std::ptrdiff_t rho(WordView w) const;

    bool equivalent(WordView u, WordView v) const;
    bool equivalent(WordView u, WordView v, EquivalenceTrace& trace) const;
    // Whether z w == u for some word w.  z must be a piece.
    bool is_possible_prefix(WordView z, WordView u) const;

   private:
    struct Occurrence {
      std::size_t pos;
      std::size_t rel;  // index into _rel
    };

    // Index of the relation word whose XY begins at w[pos], if any.
    std::optional<std::size_t> xy_at(WordView w, std::size_t pos) const;
    std::optional<Occurrence>  first_xy(WordView w, std::size_t from) const;
    bool                       is_clean(WordView w, Occurrence o) const;
    std::optional<Occurrence>  clean_occurrence(WordView w) const;
    // Proper complement R' of relation word `rel` such that v starts with
    // X'Y', or `rel` itself when v starts with XY.
    std::optional<std::size_t> complement_xy_prefix(std::size_t rel,
                                                    WordView    v) const;
    void require_c4(char const* what) const;

    class Search;
    friend class Search;

    PieceTable                            _table;
    bool                                  _c4 = false;
    std::vector<XYZFactorization>         _rel;
    std::vector<Word>                     _xy;
    std::vector<std::size_t>              _class_of;
    std::vector<std::vector<std::size_t>> _classes;
  };

  // Free-function forms; each builds a solver for p.
  std::optional<OverlapPrefix> first_relation_prefix(WordView w, Presentation const& p);
  std::optional<OverlapPrefix> clean_overlap_prefix(WordView w, Presentation const& p);
  std::ptrdiff_t               rho(WordView w, Presentation const& p);
  bool words_equivalent(WordView u, WordView v, Presentation const& p);
  bool words_equivalent(WordView            u,
                        WordView            v,
                        Presentation const& p,
                        EquivalenceTrace&   trace);
  bool is_possible_prefix(WordView z, WordView u, Presentation const& p);

  enum class OracleVerdict : std::uint8_t { equivalent, not_found_within_bounds };

  struct OracleResult {
    OracleVerdict verdict = OracleVerdict::not_found_within_bounds;
    // True when the search ran out of words to visit without pruning by
    // length or stopping at the node limit: the whole class of u was seen,
    // so not_found means u and v are not equivalent.
    bool        exhaustive = false;
    std::size_t expanded   = 0;
  };

  // Breadth-first search of the class of u through one-step rewrites,
  // pruning words longer than max_len and stopping after max_nodes
  // expansions.
  OracleResult bfs_oracle(WordView            u,
                          WordView            v,
                          Presentation const& p,
                          std::size_t         max_len,
                          std::size_t         max_nodes);

}  // namespace sop

#endif  // SOP_WORDPROBLEM_HPP
