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

// Pieces and small overlap conditions.
//
// A piece is a word occurring as a factor of two distinct relation words,
// or at two distinct positions of one relation word; the empty word is
// always a piece.  A presentation is C(n) when no relation word is a
// product of fewer than n pieces.

#ifndef SOP_PIECES_HPP
#define SOP_PIECES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "sop/core.hpp"

namespace sop {

  // Piece set of a presentation, stored as the length of the longest piece
  // starting at every position of every distinct relation word.  Pieces
  // are closed under taking factors, so this determines the set exactly.
  class PieceTable {
   public:
    explicit PieceTable(Presentation const& p);

    Presentation const& presentation() const noexcept {
      return _presentation;
    }
    // Distinct relation words, shortlex sorted.
    std::vector<Word> const& relation_words() const noexcept {
      return _words;
    }
    std::optional<std::size_t> relation_word_index(WordView w) const;

    // Longest piece that is a prefix of relation_words()[word][pos..].
    std::size_t longest_piece_at(std::size_t word, std::size_t pos) const {
      return _longest[word][pos];
    }
    // Longest piece that is a prefix of an arbitrary word.
    std::size_t longest_piece_prefix(WordView w) const;
    // Longest piece that is a suffix of relation_words()[word].
    std::size_t longest_piece_suffix_of(std::size_t word) const;

    bool        is_piece(WordView w) const;
    std::size_t max_piece_length() const noexcept {
      return _max_piece_length;
    }
    // Every piece (including the empty word), shortlex sorted.
    std::vector<Word> pieces() const;

   private:
    Presentation                          _presentation;
    std::vector<Word>                     _words;
    std::vector<std::vector<std::size_t>> _longest;
    std::size_t                           _max_piece_length = 0;
  };

  // Minimum number of pieces whose product is w; nullopt when no such
  // product exists.  Shortest-path dynamic program over positions of w.
  std::optional<std::size_t> min_piece_decomposition(WordView          w,
                                                     PieceTable const& t);
  // The decomposition itself (nullopt as above).
  std::optional<std::vector<Word>> piece_decomposition(WordView          w,
                                                       PieceTable const& t);
  // Repeatedly strips the longest piece prefix.  Agrees with the dynamic
  // program in count; kept as an independent cross-check.
  std::optional<std::size_t> greedy_piece_decomposition(WordView          w,
                                                        PieceTable const& t);

  bool check_c(Presentation const& p, std::size_t n);
  bool check_c(PieceTable const& t, std::size_t n);
  bool check_strong_c(Presentation const& p, std::size_t n);
  bool check_strong_c(PieceTable const& t, std::size_t n);
  // True when some word is a side of two relation occurrences (including
  // both sides of one trivial relation).
  bool has_repeated_relation_words(Presentation const& p);

  // Largest n for which the presentation is C(n).
  class OverlapDegree {
   public:
    static OverlapDegree unbounded() noexcept {
      return OverlapDegree();
    }
    static OverlapDegree finite(std::size_t n) noexcept {
      OverlapDegree d;
      d._value = n;
      return d;
    }

    bool is_unbounded() const noexcept {
      return !_value.has_value();
    }
    std::size_t value() const {
      return _value.value();
    }
    // C(n) holds iff n <= degree.
    bool satisfies(std::size_t n) const noexcept {
      return !_value || n <= *_value;
    }

    bool operator==(OverlapDegree const&) const = default;

   private:
    std::optional<std::size_t> _value;
  };

  OverlapDegree small_overlap_degree(Presentation const& p);
  OverlapDegree small_overlap_degree(PieceTable const& t);

  // A relation word that is a product of fewer than n pieces, with the
  // shortest such decomposition; nullopt when C(n) holds.
  struct COffender {
    Word              relation_word;
    std::vector<Word> decomposition;
  };
  std::optional<COffender> c_offender(PieceTable const& t, std::size_t n);

  struct XYZFactorization {
    Word relation_word;
    Word x;  // maximal piece prefix
    Word y;  // middle word
    Word z;  // maximal piece suffix
  };

  // Requires r to be a relation word with non-overlapping maximal piece
  // prefix and suffix and a non-empty middle word (always true under
  // C(3)); throws PreconditionError otherwise.
  XYZFactorization xyz_factorization(WordView r, PieceTable const& t);

  struct ComplementClass {
    std::vector<Word> members;  // shortlex sorted

    bool contains(WordView w) const;
  };

  // Connected component of r in the graph on relation words whose edges
  // are the relations.  Throws InvalidArgument if r is not a relation word.
  ComplementClass complement_class(WordView r, Presentation const& p);

  // All complement classes, ordered by their shortlex-least member.
  std::vector<ComplementClass> complement_classes(Presentation const& p);

}  // namespace sop

#endif  // SOP_PIECES_HPP
