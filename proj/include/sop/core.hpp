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

// Alphabets, words, relations and monoid presentations.
//
// Words are sequences of letter indices into an Alphabet; the empty
// sequence is the empty word.  A Presentation keeps its relations in the
// order they were given; set-like views (relation words, equivalence
// closure) are computed on demand.

#ifndef SOP_CORE_HPP
#define SOP_CORE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sop {

  using Letter = std::uint32_t;
  using Word   = std::vector<Letter>;
  using WordView = std::span<Letter const>;

  class Alphabet {
   public:
    Alphabet() = default;
    // Throws ParseError on an invalid or repeated token.
    explicit Alphabet(std::vector<std::string> symbols);

    // Alphabet of `size` letters named g0, g1, ...
    static Alphabet canonical(std::size_t size);
    // Alphabet of `size` letters named a, b, c, ... (then x26, x27, ...).
    static Alphabet letters(std::size_t size);

    std::size_t size() const noexcept {
      return _symbols.size();
    }
    std::string const& symbol(Letter x) const {
      return _symbols.at(x);
    }
    std::vector<std::string> const& symbols() const noexcept {
      return _symbols;
    }
    std::optional<Letter> index_of(std::string_view token) const;

    bool operator==(Alphabet const&) const = default;

    static bool is_valid_token(std::string_view token);

   private:
    std::vector<std::string> _symbols;
  };

  struct Relation {
    Word lhs;
    Word rhs;

    bool trivial() const noexcept {
      return lhs == rhs;
    }
    auto operator<=>(Relation const&) const = default;
  };

  class Presentation {
   public:
    Presentation() = default;
    // Throws InvalidArgument if a word uses a letter outside the alphabet.
    Presentation(Alphabet alphabet, std::vector<Relation> relations);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    std::size_t max_relation_length() const noexcept;
    std::size_t sum_relation_length() const noexcept;

    bool operator==(Presentation const&) const = default;

   private:
    Alphabet              _alphabet;
    std::vector<Relation> _relations;
  };

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  // Whitespace-separated tokens, or the single token "1" for the empty word.
  Word        parse_word(std::string_view text, Alphabet const& alphabet);
  std::string format_word(WordView w, Alphabet const& alphabet);

  bool is_prefix(WordView prefix, WordView w) noexcept;
  bool is_suffix(WordView suffix, WordView w) noexcept;
  Word concat(WordView u, WordView v);
  Word reversed(WordView w);

  // Shortlex order: shorter words first, then lexicographic by letter index.
  bool shortlex_less(WordView u, WordView v) noexcept;

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  // Reads the `.sop` text format.  Throws ParseError with the offending
  // line number.
  Presentation parse_presentation(std::string_view text);
  Presentation parse_presentation(std::istream& in);
  Presentation load_presentation(std::string const& path);

  std::string serialize_presentation(Presentation const& p);

  // Distinct relation words, sorted shortlex.
  std::vector<Word> relation_words(Presentation const& p);

  // Reflexive, symmetric, transitive closure of the relations, taken on the
  // set of relation words only.  Relations are sorted by (lhs, rhs) in
  // shortlex order.
  Presentation equivalence_closure(Presentation const& p);

  Presentation reverse_presentation(Presentation const& p);

  // Words obtained from w by a single application of one relation (either
  // direction, any position), sorted shortlex without duplicates.
  std::vector<Word> rewrite_neighbors(WordView w, Presentation const& p);

  // Image of p under the letter map x -> perm[x], written over `target`.
  // perm must be injective into target's letters.
  Presentation relabel(Presentation const&          p,
                       std::vector<Letter> const&   perm,
                       Alphabet const&              target);

}  // namespace sop

#endif  // SOP_CORE_HPP
