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

#include <doctest.h>

#include <map>

#include "helpers.hpp"
#include "oracles.hpp"
#include "sop/error.hpp"
#include "sop/pieces.hpp"
#include "sop/wordproblem.hpp"

using namespace sop;
using namespace sop::testing;

TEST_CASE("first_relation_prefix") {
  auto o = first_relation_prefix(W(P3x, "a b c d e x"), P3x);
  REQUIRE(o.has_value());
  CHECK(o->leading.empty());
  CHECK(o->x == W(P3x, "a"));
  CHECK(o->y == W(P3x, "b c d"));
  o = first_relation_prefix(W(P3x, "d a b c d e x"), P3x);
  REQUIRE(o.has_value());
  CHECK(o->leading == W(P3x, "d"));
  CHECK(o->x == W(P3x, "a"));
  CHECK_FALSE(first_relation_prefix(W(P3, "b c d"), P3).has_value());
  CHECK_THROWS_AS(first_relation_prefix(W(P2, "a"), P2), PreconditionError);
}

TEST_CASE("clean_overlap_prefix and rho") {
  auto o = clean_overlap_prefix(W(P3x, "a b c d e x"), P3x);
  REQUIRE(o.has_value());
  CHECK(o->clean);
  o = clean_overlap_prefix(W(P3, "a b c d e"), P3);
  REQUIRE(o.has_value());
  CHECK(o->clean);
  CHECK(o->length() == 4);
  CHECK(o->source_relation_word == W(P3, "a b c d e"));
  CHECK_FALSE(clean_overlap_prefix(W(P3, "b a"), P3).has_value());
  CHECK(rho(W(P3, "b c d"), P3) == -1);
  CHECK(rho(W(P3, "a b c d"), P3) == 0);
  CHECK(rho(W(P3x, "a b c d e x"), P3x) == 2);
}

TEST_CASE("unclean overlap prefix") {
  // R1 = a b c f has X = 1, Y = a b c, Z = f; X2 Y2 = b c d e starts
  // inside Y in the word a b c d e.
  auto p = P("generators: a b c d e f g h i j k\n"
             "relation: a b c f = g f h\n"
             "relation: b c d e = i j k\n");
  REQUIRE(check_c(p, 4));
  SmallOverlapSolver s(p);
  auto               w = W(p, "a b c d e");
  auto               f = s.first_relation_prefix(w);
  REQUIRE(f.has_value());
  CHECK(f->leading.empty());
  CHECK(f->y == W(p, "a b c"));
  CHECK_FALSE(f->clean);
  auto c = s.clean_overlap_prefix(w);
  REQUIRE(c.has_value());
  CHECK(c->clean);
  CHECK(c->leading == W(p, "a"));
  CHECK(c->x == W(p, "b c"));
  CHECK(c->y == W(p, "d e"));
  CHECK(s.rho(w) == 0);
}

TEST_CASE("words_equivalent examples") {
  EquivalenceTrace tr;
  CHECK(words_equivalent(W(P3x, "a b c d e x"), W(P3x, "e d c b a x"), P3x, tr));
  REQUIRE_FALSE(tr.steps.empty());
  CHECK(tr.steps.front() == EquivalenceStep::case3);
  CHECK(tr.steps.back() == EquivalenceStep::literal_equal);
  CHECK(tr.verdict);
  CHECK(words_equivalent(W(P3, "a b c d e"), W(P3, "a b c d e"), P3));
  CHECK_FALSE(words_equivalent(W(P3, "a a b c d e"), W(P3, "a b c d e a"), P3));
  CHECK_THROWS_AS(words_equivalent(W(P2, "a"), W(P2, "a"), P2), PreconditionError);
}

TEST_CASE("is_possible_prefix examples") {
  CHECK(is_possible_prefix(Word{}, W(P3, "b c"), P3));
  CHECK(is_possible_prefix(W(P3x, "a"), W(P3x, "a b c d e x"), P3x));
  CHECK(is_possible_prefix(W(P3x, "e"), W(P3x, "a b c d e x"), P3x));
  CHECK_FALSE(is_possible_prefix(W(P3x, "b"), W(P3x, "a b c d e x"), P3x));
  CHECK_THROWS_AS(is_possible_prefix(W(P3, "a b"), W(P3, "a b c"), P3), PreconditionError);
}

TEST_CASE("bfs_oracle examples") {
  auto r = bfs_oracle(W(P3x, "a b c d e x"), W(P3x, "e d c b a x"), P3x, 10, 10000);
  CHECK(r.verdict == OracleVerdict::equivalent);
  r = bfs_oracle(W(P3, "a a b c d e"), W(P3, "a b c d e a"), P3, 12, 100000);
  CHECK(r.verdict == OracleVerdict::not_found_within_bounds);
  CHECK(r.exhaustive);
  auto u = W(P2, "a b a b");
  CHECK(bfs_oracle(u, u, P2, u.size(), 1).verdict == OracleVerdict::equivalent);
}

TEST_CASE("trace labels") {
  CHECK(std::string(to_string(EquivalenceStep::dump_prefix)) == "dump-prefix");
  CHECK(std::string(to_string(EquivalenceStep::case6)) == "case6");
  CHECK(std::string(to_string(EquivalenceStep::no_clean_prefix)) == "no-clean-prefix");
  CHECK(std::string(to_string(EquivalenceStep::literal_equal)) == "literal-equal");
}

namespace {

  struct Tally {
    std::size_t                    positives = 0, negatives = 0, bad = 0;
    std::map<EquivalenceStep, int> steps;
  };

  // Compares the solver with the oracle on (u, v) in both orders.
  void compare(SmallOverlapSolver const& s, Word const& u, Word const& v, Tally& t) {
    auto const&      p  = s.presentation();
    std::size_t      ml = std::max(u.size(), v.size()) + 2 * p.max_relation_length();
    auto             o  = bfs_oracle(u, v, p, ml, 100000);
    EquivalenceTrace tr;
    bool             e1 = s.equivalent(u, v, tr);
    bool             e2 = s.equivalent(v, u);
    for (auto st : tr.steps) {
      ++t.steps[st];
    }
    if (o.verdict == OracleVerdict::equivalent) {
      ++t.positives;
      if (!e1 || !e2) {
        ++t.bad;
        MESSAGE(serialize_presentation(p) << S(p, u) << " | " << S(p, v));
      }
    } else if (o.exhaustive) {
      ++t.negatives;
      if (e1 || e2) {
        ++t.bad;
        MESSAGE(serialize_presentation(p) << S(p, u) << " | " << S(p, v));
      }
    }
  }

}  // namespace

TEST_CASE("word problem against the oracle: chained relation words") {
  Rng   rng(1);
  Tally t;
  int   tested = 0;
  for (int iter = 0; iter < 100000 && tested < 150; ++iter) {
    std::size_t const a  = uniform(rng, 2, 4);
    std::size_t const nw = uniform(rng, 2, 5);
    std::vector<Word> ws;
    for (std::size_t i = 0; i < nw; ++i) {
      ws.push_back(random_word(rng, a, 3, 11));
    }
    if (uniform(rng, 0, 1) == 1) {
      for (std::size_t j = uniform(rng, 1, 2); j > 0; --j) {
        ws[1].push_back(ws[0].back());
      }
    }
    std::vector<Relation> rels;
    for (std::size_t i = 0; i + 1 < nw; ++i) {
      rels.push_back({ws[i + 1], ws[uniform(rng, 0, i)]});
    }
    if (uniform(rng, 0, 2) == 0) {
      rels.push_back({ws[0], ws[0]});
    }
    Presentation p(Alphabet::letters(a), rels);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    for (int j = 0; j < 20; ++j) {
      Word u = word_with_relations(rng, p, uniform(rng, 1, 4));
      Word v = random_rewrites(rng, u, p, uniform(rng, 0, 5));
      if (uniform(rng, 0, 1) == 1) {
        v = scramble(rng, v, a);
      }
      compare(s, u, v, t);
    }
  }
  CHECK(tested == 150);
  CHECK(t.bad == 0);
  CHECK(t.positives > 0);
  CHECK(t.negatives > 0);
}

TEST_CASE("word problem against the oracle: shared suffixes exercise every case") {
  Rng   rng(2);
  Tally t;
  int   tested = 0;
  std::size_t const a = 5;
  for (int iter = 0; iter < 400000 && tested < 400; ++iter) {
    Word z = random_word(rng, a, 1, 2), z1 = random_word(rng, a, 0, 2),
         z2 = random_word(rng, a, 0, 2);
    Word r1  = concat(concat(random_word(rng, a, 4, 8), z1), z);
    Word rb1 = concat(concat(random_word(rng, a, 4, 8), z2), z);
    Word r2  = concat(z, random_word(rng, a, 4, 8));
    Word rb2 = random_word(rng, a, 4, 9);
    std::vector<Relation> rels{{r1, rb1}, {r2, rb2}};
    if (uniform(rng, 0, 1) == 1) {
      rels.push_back({rb2, random_word(rng, a, 5, 9)});
    }
    Presentation p(Alphabet::letters(a), rels);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    for (int j = 0; j < 20; ++j) {
      Word u = uniform(rng, 0, 1) == 1
                   ? concat(concat(r1, random_word(rng, a, 0, 2)),
                            concat(rb2, random_word(rng, a, 0, 3)))
                   : concat(Word(r1.begin(), r1.end() - static_cast<std::ptrdiff_t>(z.size())),
                            concat(rb2, random_word(rng, a, 0, 3)));
      if (uniform(rng, 0, 1) == 1) {
        u = concat(random_word(rng, a, 0, 2), u);
      }
      Word v = random_rewrites(rng, u, p, uniform(rng, 0, 6));
      u      = random_rewrites(rng, u, p, uniform(rng, 0, 3));
      if (uniform(rng, 0, 2) == 0) {
        v = scramble(rng, v, a);
      }
      compare(s, u, v, t);
    }
  }
  CHECK(tested == 400);
  CHECK(t.bad == 0);
  for (auto st : {EquivalenceStep::dump_prefix, EquivalenceStep::case1, EquivalenceStep::case2,
                  EquivalenceStep::case3, EquivalenceStep::case4, EquivalenceStep::case5,
                  EquivalenceStep::case6}) {
    INFO(to_string(st));
    CHECK(t.steps[st] > 0);
  }
}

TEST_CASE("possible prefixes against class enumeration") {
  Rng         rng(3);
  std::size_t checked = 0, bad = 0;
  int         tested  = 0;
  for (int iter = 0; iter < 100000 && tested < 120; ++iter) {
    std::size_t const a  = uniform(rng, 2, 3);
    std::size_t const nw = uniform(rng, 2, 4);
    std::vector<Word> ws;
    for (std::size_t i = 0; i < nw; ++i) {
      ws.push_back(random_word(rng, a, 3, 10));
    }
    std::vector<Relation> rels;
    for (std::size_t i = 0; i + 1 < nw; ++i) {
      rels.push_back({ws[i + 1], ws[uniform(rng, 0, i)]});
    }
    Presentation p(Alphabet::letters(a), rels);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    auto               pieces = s.pieces().pieces();
    for (int j = 0; j < 10; ++j) {
      Word u   = word_with_relations(rng, p, uniform(rng, 1, 3));
      auto cls = bounded_class(u, p, u.size() + 2 * p.max_relation_length(), 5000);
      if (!cls) {
        continue;
      }
      for (auto const& z : pieces) {
        bool truth = std::any_of(cls->begin(), cls->end(),
                                 [&](Word const& w) { return is_prefix(z, w); });
        ++checked;
        if (truth != s.is_possible_prefix(z, u)) {
          ++bad;
          MESSAGE(serialize_presentation(p) << "z=" << S(p, z) << " u=" << S(p, u));
        }
      }
    }
  }
  CHECK(checked > 1000);
  CHECK(bad == 0);
}

TEST_CASE("decision-level equivalence laws and congruence") {
  Rng rng(4);
  int tested = 0;
  for (int iter = 0; iter < 20000 && tested < 60; ++iter) {
    auto p = random_presentation(rng, 3, uniform(rng, 1, 2), 4, 10);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    for (int j = 0; j < 10; ++j) {
      Word u = word_with_relations(rng, p, 2);
      Word v = random_rewrites(rng, u, p, 3);
      Word w = random_rewrites(rng, v, p, 3);
      if (uniform(rng, 0, 2) == 0) {
        w = scramble(rng, w, 3);
      }
      CHECK(s.equivalent(u, u));
      CHECK(s.equivalent(u, v) == s.equivalent(v, u));
      if (s.equivalent(u, v) && s.equivalent(v, w)) {
        CHECK(s.equivalent(u, w));
      }
      Word x = random_word(rng, 3, 0, 3), y = random_word(rng, 3, 0, 3);
      if (s.equivalent(u, v)) {
        CHECK(s.equivalent(concat(concat(x, u), y), concat(concat(x, v), y)));
      }
    }
  }
  CHECK(tested == 60);
}

TEST_CASE("proper factors of relation words admit no rewrite (C(2))") {
  Rng rng(5);
  int tested = 0;
  for (int iter = 0; iter < 20000 && tested < 100; ++iter) {
    auto p = random_presentation(rng, 3, uniform(rng, 1, 3), 2, 8);
    if (!check_c(p, 2)) {
      continue;
    }
    ++tested;
    for (auto const& r : relation_words(p)) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        for (std::size_t j = i + 1; j <= r.size(); ++j) {
          if (j - i == r.size()) {
            continue;
          }
          CHECK(rewrite_neighbors(Word(r.begin() + i, r.begin() + j), p).empty());
        }
      }
    }
  }
  CHECK(tested == 100);
}

TEST_CASE("words equivalent to a relation word are its complements") {
  Rng rng(6);
  int tested = 0;
  for (int iter = 0; iter < 20000 && tested < 60; ++iter) {
    auto p = random_presentation(rng, 3, uniform(rng, 1, 2), 4, 9);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    auto const         rws = relation_words(p);
    for (auto const& r : rws) {
      auto cls = complement_class(r, p);
      for (auto const& v : rws) {
        CHECK(s.equivalent(r, v) == cls.contains(v));
      }
      for (int j = 0; j < 5; ++j) {
        Word v = scramble(rng, r, 3);
        if (s.equivalent(r, v)) {
          CHECK(cls.contains(v));
        }
      }
    }
  }
  CHECK(tested == 60);
}

TEST_CASE("rho drops after replacing X Y Z by a piece") {
  Rng         rng(7);
  std::size_t checked = 0;
  int         tested  = 0;
  for (int iter = 0; iter < 20000 && tested < 80; ++iter) {
    auto p = random_presentation(rng, 3, uniform(rng, 1, 2), 4, 10);
    if (!check_c(p, 4)) {
      continue;
    }
    ++tested;
    SmallOverlapSolver s(p);
    auto               pieces = s.pieces().pieces();
    for (std::size_t i = 0; i < s.relation_word_count(); ++i) {
      auto const& f = s.factorization(i);
      for (int j = 0; j < 10; ++j) {
        Word tail = word_with_relations(rng, p, uniform(rng, 0, 2));
        Word w    = concat(f.relation_word, tail);
        auto o    = s.clean_overlap_prefix(w);
        if (!o || !o->leading.empty() || o->source_relation_word != f.relation_word) {
          continue;
        }
        auto const& pc = pieces[uniform(rng, 0, pieces.size() - 1)];
        CHECK(s.rho(concat(pc, tail)) < s.rho(w));
        ++checked;
      }
    }
  }
  CHECK(checked > 500);
}
