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

#include "helpers.hpp"
#include "oracles.hpp"
#include "sop/canonical.hpp"
#include "sop/error.hpp"
#include "sop/pieces.hpp"
#include "sop/wordproblem.hpp"

using namespace sop;
using namespace sop::testing;

namespace {

  std::string canon(Presentation const& p) {
    return serialize_presentation(canonicalize(p).presentation);
  }

  bool has_relation(Presentation const& p, char const* l, char const* r) {
    Relation rel{W(p, l), W(p, r)};
    return std::find(p.relations().begin(), p.relations().end(), rel) != p.relations().end();
  }

  Presentation random_strong_c2(Rng& rng) {
    while (true) {
      auto p = random_presentation(rng, uniform(rng, 2, 5), uniform(rng, 1, 3), 1, 8);
      if (check_strong_c(p, 2)) {
        return p;
      }
    }
  }

}  // namespace

TEST_CASE("find_redundant_generator") {
  auto r = find_redundant_generator(P4);
  REQUIRE(r.has_value());
  CHECK(r->generator == 2);
  CHECK(r->replacement == W(P4, "a b"));
  CHECK_FALSE(find_redundant_generator(P3).has_value());
  auto ab = P("generators: a b\nrelation: a = b\n");
  r       = find_redundant_generator(ab);
  REQUIRE(r.has_value());
  CHECK(r->generator == 0);
  CHECK(r->replacement == W(ab, "b"));
  CHECK_THROWS_AS(find_redundant_generator(P("generators: a\nrelation: a a = a\n")), PreconditionError);
}

TEST_CASE("eliminate_generator") {
  CHECK(eliminate_generator(P4, 2) == P("generators: a b\nrelation: a b = a b\n"));
  CHECK(eliminate_generator(P("generators: a b\nrelation: a = b\n"), 0)
        == P("generators: b\nrelation: b = b\n"));
  auto two = eliminate_generator(P("generators: a b c\nrelation: c = a b\nrelation: c = b a\n"), 2);
  CHECK(two.alphabet().size() == 2);
  CHECK(has_relation(two, "a b", "b a"));
  CHECK(has_relation(two, "b a", "a b"));
  CHECK(two.relations().size() == 4);
  CHECK_THROWS_AS(eliminate_generator(P3, 0), InvalidArgument);
}

TEST_CASE("generator_minimal") {
  CHECK(generator_minimal(P4).alphabet().size() == 2);
  CHECK(generator_minimal(P3) == P3);
  auto twice = P("generators: a b c d\nrelation: c = a b\nrelation: d = b b a\n");
  Provenance prov(twice.alphabet());
  auto       m = generator_minimal(twice, prov);
  CHECK(m.alphabet().symbols() == std::vector<std::string>{"a", "b"});
  CHECK(prov.eliminated().size() == 2);
  auto chained = P("generators: a b c d\nrelation: c = a b\nrelation: d = c a\n");
  CHECK_THROWS_AS(generator_minimal(chained), PreconditionError);
}

TEST_CASE("canonicalize examples") {
  CHECK(canon(P4) == "generators: g0 g1\n");
  CHECK(canon(P("generators: a b\nrelation: a b = b a\n"))
        == canon(P("generators: x y\nrelation: y x = x y\n")));
  auto c3 = canonicalize(P3).presentation;
  CHECK(c3.alphabet().size() == 5);
  CHECK(c3.relations().size() == 4);
  CHECK(equivalence_closure(c3).relations().size() == 4);
  CHECK_NOTHROW(canonicalize(P2));
  CHECK_THROWS_AS(canonicalize(P("generators: a\nrelation: a a = a\n")), PreconditionError);
}

TEST_CASE("canonical form of the commutation relation") {
  CHECK(canon(P("generators: a b\nrelation: a b = b a\n"))
        == "generators: g0 g1\nrelation: g0 g1 = g0 g1\nrelation: g0 g1 = g1 g0\n"
           "relation: g1 g0 = g0 g1\nrelation: g1 g0 = g1 g0\n");
}

TEST_CASE("provenance translates words") {
  auto twice = P("generators: a b c d\nrelation: c = a b\nrelation: d = b b a\n");
  auto c     = canonicalize(twice);
  auto img   = c.provenance.translate(W(twice, "d c"), c.presentation.alphabet());
  CHECK(img.size() == 5);
  CHECK(img == c.provenance.translate(W(twice, "b b a a b"), c.presentation.alphabet()));
}

TEST_CASE("inclusion_check") {
  GeneratorBijection id{{0, 1, 2, 3}};
  CHECK(inclusion_check(P1, P1, id));
  auto p = P("generators: a b\nrelation: a b = b a\n");
  auto q = P("generators: x y\nrelation: y x = x y\n");
  CHECK(inclusion_check(p, q, GeneratorBijection{{1, 0}}));
  CHECK_FALSE(inclusion_check(p, q, GeneratorBijection{{0, 1}}));
  CHECK_THROWS_AS(inclusion_check(p, q, GeneratorBijection{{0}}), InvalidArgument);
  CHECK_THROWS_AS(inclusion_check(p, q, GeneratorBijection{{0, 5}}), InvalidArgument);
}

TEST_CASE("presentations_isomorphic") {
  auto b = presentations_isomorphic(P5, relabel(P5, {4, 3, 2, 1, 0}, P5.alphabet()));
  REQUIRE(b.has_value());
  CHECK(b->map == std::vector<Letter>{4, 3, 2, 1, 0});
  CHECK_FALSE(presentations_isomorphic(P1, P2).has_value());
  auto closed = P("generators: a b c d\nrelation: a b = c d\nrelation: c d = a b\n");
  auto w      = presentations_isomorphic(equivalence_closure(P1), equivalence_closure(closed));
  REQUIRE(w.has_value());
  CHECK(w->map == std::vector<Letter>{0, 1, 2, 3});
}

TEST_CASE("monoids_isomorphic examples") {
  CHECK(monoids_isomorphic(P4, P("generators: x y\n")));
  CHECK_FALSE(monoids_isomorphic(P1, P2));
  CHECK(monoids_isomorphic(P2, P2));
  CHECK_THROWS_AS(monoids_isomorphic(P2, P("generators: a\nrelation: a a = a\n")), PreconditionError);
}

TEST_CASE("singleton classes do not distinguish monoids") {
  CHECK(monoids_isomorphic(P("generators: a b\nrelation: a b = a b\n"), P("generators: a b\n")));
}

TEST_CASE("canonical form is invariant under relabeling and idempotent") {
  Rng rng(31);
  for (int i = 0; i < 150; ++i) {
    auto p    = random_strong_c2(rng);
    auto perm = random_permutation(rng, p.alphabet().size());
    std::vector<std::string> names;
    for (std::size_t j = 0; j < perm.size(); ++j) {
      names.push_back("t" + std::to_string(perm[j]));
    }
    auto q  = relabel(p, perm, Alphabet(names));
    auto cp = canonicalize(p);
    CHECK(serialize_presentation(cp.presentation) == canon(q));
    CHECK(canon(cp.presentation) == serialize_presentation(cp.presentation));
    // Reduced forms are related by a bijection.
    CHECK(presentations_isomorphic(reduced_form(p), reduced_form(q)).has_value());
  }
}

TEST_CASE("canonical output invariants") {
  Rng rng(32);
  for (int i = 0; i < 150; ++i) {
    auto p = random_strong_c2(rng);
    auto c = canonicalize(p).presentation;
    CHECK_FALSE(find_redundant_generator(c).has_value());
    CHECK(equivalence_closure(c) == c);
    for (auto const& r : c.relations()) {
      CHECK(r.lhs.size() >= 2);
    }
    for (auto const& cls : complement_classes(c)) {
      CHECK(cls.members.size() >= 2);
    }
    auto dp = small_overlap_degree(p), dc = small_overlap_degree(c);
    if (!dp.is_unbounded()) {
      CHECK(dc.satisfies(dp.value()));
    }
  }
}

TEST_CASE("elimination preserves the word problem") {
  Rng rng(33);
  int tested = 0;
  for (int iter = 0; iter < 50000 && tested < 40; ++iter) {
    auto base = random_presentation(rng, 3, uniform(rng, 1, 2), 5, 10);
    if (!check_c(base, 4)) {
      continue;
    }
    auto rels = base.relations();
    Word w    = random_word(rng, 3, 3, 6);
    rels.push_back({Word{3}, w});
    Presentation planted(Alphabet::letters(4), rels);
    if (!check_c(planted, 2)) {
      continue;
    }
    ++tested;
    auto c = canonicalize(planted);
    REQUIRE(check_c(c.presentation, 4));
    SmallOverlapSolver before(base), after(c.presentation);
    auto subst = [&](Word const& u) {
      Word out;
      for (Letter x : u) {
        if (x == 3) {
          out.insert(out.end(), w.begin(), w.end());
        } else {
          out.push_back(x);
        }
      }
      return out;
    };
    for (int j = 0; j < 10; ++j) {
      Word u = word_with_relations(rng, planted, 2);
      Word v = random_rewrites(rng, u, planted, 3);
      if (j % 2 == 1) {
        v = scramble(rng, v, 4);
      }
      auto const& a = c.presentation.alphabet();
      CHECK(before.equivalent(subst(u), subst(v))
            == after.equivalent(c.provenance.translate(u, a), c.provenance.translate(v, a)));
    }
  }
  CHECK(tested == 40);
}

TEST_CASE("strongly C(2) input stays strong after elimination, up to trivial relations") {
  Rng rng(34);
  int tested = 0;
  for (int iter = 0; iter < 50000 && tested < 100; ++iter) {
    auto base = random_presentation(rng, 3, uniform(rng, 1, 2), 3, 8);
    auto rels = base.relations();
    rels.push_back({Word{3}, random_word(rng, 3, 2, 5)});
    Presentation p(Alphabet::letters(4), rels);
    if (!check_strong_c(p, 2)) {
      continue;
    }
    ++tested;
    std::vector<Relation> nontrivial;
    auto const            m = generator_minimal(p);
    for (auto const& r : m.relations()) {
      if (!r.trivial()) {
        nontrivial.push_back(r);
      }
    }
    CHECK_FALSE(has_repeated_relation_words(Presentation(m.alphabet(), nontrivial)));
  }
  CHECK(tested == 100);
}
