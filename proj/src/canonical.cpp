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

#include "sop/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "sop/error.hpp"
#include "sop/pieces.hpp"

namespace sop {

  namespace {

    bool relation_less(Relation const& x, Relation const& y) noexcept {
      if (x.lhs != y.lhs) {
        return shortlex_less(x.lhs, y.lhs);
      }
      return shortlex_less(x.rhs, y.rhs);
    }

    void require_c2(Presentation const& p, char const* what) {
      PieceTable t(p);
      if (auto off = c_offender(t, 2)) {
        throw PreconditionError(std::string(what)
                                + " requires a C(2) presentation: relation word "
                                + format_word(off->relation_word, p.alphabet())
                                + " is a product of fewer than 2 pieces");
      }
    }

    std::vector<std::string> tokens_of(WordView w, Alphabet const& a) {
      std::vector<std::string> out;
      out.reserve(w.size());
      for (Letter x : w) {
        out.push_back(a.symbol(x));
      }
      return out;
    }

    Word map_word(WordView w, std::vector<Letter> const& perm) {
      Word out;
      out.reserve(w.size());
      for (Letter x : w) {
        out.push_back(perm[x]);
      }
      return out;
    }

    std::vector<Relation> distinct_sorted(std::vector<Relation> rels) {
      std::sort(rels.begin(), rels.end(), relation_less);
      rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
      return rels;
    }

    // Occurrence signature of every letter in the distinct relations of p;
    // invariant under renaming generators.
    using Signature = std::vector<std::tuple<std::size_t, std::size_t, int, std::size_t>>;

    std::vector<Signature> relation_signatures(std::vector<Relation> const& rels,
                                               std::size_t                  alphabet_size) {
      std::vector<Signature> sig(alphabet_size);
      for (auto const& r : rels) {
        for (int side = 0; side < 2; ++side) {
          auto const& w = side == 0 ? r.lhs : r.rhs;
          for (std::size_t i = 0; i < w.size(); ++i) {
            sig[w[i]].emplace_back(r.lhs.size(), r.rhs.size(), side, i);
          }
        }
      }
      for (auto& s : sig) {
        std::sort(s.begin(), s.end());
      }
      return sig;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GeneratorBijection
  ////////////////////////////////////////////////////////////////////////

  GeneratorBijection GeneratorBijection::inverse() const {
    GeneratorBijection inv;
    inv.map.assign(map.size(), 0);
    for (std::size_t i = 0; i < map.size(); ++i) {
      inv.map.at(map[i]) = static_cast<Letter>(i);
    }
    return inv;
  }

  Word GeneratorBijection::apply(WordView w) const {
    return map_word(w, map);
  }

  ////////////////////////////////////////////////////////////////////////
  // Redundant generators
  ////////////////////////////////////////////////////////////////////////

  std::optional<RedundantGenerator> find_redundant_generator(Presentation const& p) {
    require_c2(p, "find_redundant_generator");
    std::optional<RedundantGenerator> best;
    for (auto const& r : p.relations()) {
      if (r.trivial()) {
        continue;
      }
      for (int side = 0; side < 2; ++side) {
        auto const& one   = side == 0 ? r.lhs : r.rhs;
        auto const& other = side == 0 ? r.rhs : r.lhs;
        if (one.size() != 1) {
          continue;
        }
        RedundantGenerator cand{one[0], other};
        if (!best || cand.generator < best->generator
            || (cand.generator == best->generator
                && shortlex_less(cand.replacement, best->replacement))) {
          best = std::move(cand);
        }
      }
    }
    return best;
  }

  Presentation eliminate_generator(Presentation const& p, Letter a) {
    if (a >= p.alphabet().size()) {
      throw InvalidArgument("eliminate_generator: letter out of range");
    }
    Word const            single{a};
    std::set<Word>        hat;
    std::vector<Relation> kept;
    for (auto const& r : p.relations()) {
      if (r.lhs == single || r.rhs == single) {
        if (r.lhs != single) {
          hat.insert(r.lhs);
        }
        if (r.rhs != single) {
          hat.insert(r.rhs);
        }
      } else {
        kept.push_back(r);
      }
    }
    if (hat.empty()) {
      throw InvalidArgument("eliminate_generator: " + p.alphabet().symbol(a)
                            + " is not redundant");
    }
    std::vector<Word> sides(hat.begin(), hat.end());
    std::sort(sides.begin(), sides.end(),
              [](Word const& u, Word const& v) { return shortlex_less(u, v); });
    for (auto const& u : sides) {
      for (auto const& v : sides) {
        kept.push_back({u, v});
      }
    }
    std::vector<std::string> names;
    std::vector<Letter>      shift(p.alphabet().size(), 0);
    for (Letter x = 0; x < p.alphabet().size(); ++x) {
      if (x != a) {
        shift[x] = static_cast<Letter>(names.size());
        names.push_back(p.alphabet().symbol(x));
      }
    }
    for (auto& r : kept) {
      for (auto* w : {&r.lhs, &r.rhs}) {
        for (Letter& x : *w) {
          if (x == a) {
            throw PreconditionError("eliminate_generator: " + p.alphabet().symbol(a)
                                    + " occurs inside another relation word "
                                      "(presentation is not C(2))");
          }
          x = shift[x];
        }
      }
    }
    return Presentation(Alphabet(std::move(names)), std::move(kept));
  }

  ////////////////////////////////////////////////////////////////////////
  // Provenance
  ////////////////////////////////////////////////////////////////////////

  void Provenance::record_elimination(std::string generator,
                                      std::vector<std::string> replacement) {
    _steps.push_back({std::move(generator), std::move(replacement)});
  }

  void Provenance::record_renaming(std::string from, std::string to) {
    _renamed.emplace_back(std::move(from), std::move(to));
  }

  Word Provenance::translate(WordView w, Alphabet const& target) const {
    std::map<std::string, std::vector<std::string> const*> repl;
    for (auto const& s : _steps) {
      repl.emplace(s.generator, &s.replacement);
    }
    std::map<std::string, std::string> rename(_renamed.begin(), _renamed.end());
    Word                               out;
    // Replacement words only use generators still present when they were
    // recorded, so expansion terminates.
    std::vector<std::string> stack;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      stack.push_back(_source.symbol(*it));
    }
    while (!stack.empty()) {
      auto tok = std::move(stack.back());
      stack.pop_back();
      if (auto r = repl.find(tok); r != repl.end()) {
        for (auto jt = r->second->rbegin(); jt != r->second->rend(); ++jt) {
          stack.push_back(*jt);
        }
        continue;
      }
      auto rn = rename.find(tok);
      if (rn == rename.end()) {
        throw InvalidArgument("provenance: no image for generator " + tok);
      }
      auto x = target.index_of(rn->second);
      if (!x) {
        throw InvalidArgument("provenance: " + rn->second + " not in target alphabet");
      }
      out.push_back(*x);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Generator-minimal and canonical forms
  ////////////////////////////////////////////////////////////////////////

  Presentation generator_minimal(Presentation const& p, Provenance& provenance) {
    Presentation cur = p;
    while (auto red = find_redundant_generator(cur)) {
      provenance.record_elimination(cur.alphabet().symbol(red->generator),
                                    tokens_of(red->replacement, cur.alphabet()));
      cur = eliminate_generator(cur, red->generator);
    }
    return cur;
  }

  Presentation generator_minimal(Presentation const& p) {
    Provenance prov(p.alphabet());
    return generator_minimal(p, prov);
  }

  namespace {

    // Drops the reflexive relation of every relation word that has no
    // proper complement.  Input must be an equivalence presentation.
    Presentation prune_singletons(Presentation const& closed) {
      std::map<Word, std::size_t> degree;
      for (auto const& r : closed.relations()) {
        ++degree[r.lhs];
      }
      std::vector<Relation> kept;
      for (auto const& r : closed.relations()) {
        if (degree[r.lhs] > 1) {
          kept.push_back(r);
        }
      }
      return Presentation(closed.alphabet(), std::move(kept));
    }

    // Lexicographically least relabeled relation list; returns the label of
    // every letter.
    std::vector<Letter> canonical_labels(Presentation const& e) {
      std::size_t const m    = e.alphabet().size();
      auto const        rels = distinct_sorted(e.relations());

      // Class size of a relation word in an equivalence presentation is
      // the number of relations having it on the left.
      std::map<Word, std::size_t> class_size;
      for (auto const& r : rels) {
        ++class_size[r.lhs];
      }
      using Key = std::vector<std::tuple<std::size_t, std::size_t, std::size_t>>;
      std::vector<Key> sig(m);
      for (auto const& [w, c] : class_size) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          sig[w[i]].emplace_back(w.size(), i, c);
        }
      }
      for (auto& s : sig) {
        std::sort(s.begin(), s.end());
      }

      std::vector<Letter> used, unused;
      for (Letter x = 0; x < m; ++x) {
        (sig[x].empty() ? unused : used).push_back(x);
      }
      std::stable_sort(used.begin(), used.end(),
                       [&](Letter x, Letter y) { return sig[x] < sig[y]; });

      // Cells of letters with equal signature; labels are assigned cell by
      // cell and every permutation within each cell is tried.
      std::vector<std::pair<std::size_t, std::size_t>> cells;
      for (std::size_t i = 0; i < used.size();) {
        std::size_t j = i;
        while (j < used.size() && sig[used[j]] == sig[used[i]]) {
          ++j;
        }
        cells.emplace_back(i, j);
        i = j;
      }

      std::vector<Letter> label(m, 0);
      for (std::size_t i = 0; i < unused.size(); ++i) {
        label[unused[i]] = static_cast<Letter>(used.size() + i);
      }

      std::vector<Letter>   order = used;
      std::vector<Letter>   best_label;
      std::vector<Relation> best;
      auto                  evaluate = [&] {
        for (std::size_t i = 0; i < order.size(); ++i) {
          label[order[i]] = static_cast<Letter>(i);
        }
        std::vector<Relation> img;
        img.reserve(rels.size());
        for (auto const& r : rels) {
          img.push_back({map_word(r.lhs, label), map_word(r.rhs, label)});
        }
        std::sort(img.begin(), img.end(), relation_less);
        if (best_label.empty()
            || std::lexicographical_compare(img.begin(), img.end(), best.begin(),
                                            best.end(), relation_less)) {
          best       = std::move(img);
          best_label = label;
        }
      };
      auto search = [&](auto&& self, std::size_t cell) -> void {
        if (cell == cells.size()) {
          evaluate();
          return;
        }
        auto [lo, hi] = cells[cell];
        std::sort(order.begin() + lo, order.begin() + hi);
        do {
          self(self, cell + 1);
        } while (std::next_permutation(order.begin() + lo, order.begin() + hi));
      };
      search(search, 0);
      return best_label;
    }

  }  // namespace

  Presentation reduced_form(Presentation const& p) {
    require_c2(p, "reduced_form");
    return prune_singletons(equivalence_closure(generator_minimal(p)));
  }

  CanonicalPresentation canonicalize(Presentation const& p) {
    require_c2(p, "canonicalize");
    CanonicalPresentation out;
    out.provenance      = Provenance(p.alphabet());
    Presentation minimal = generator_minimal(p, out.provenance);
    Presentation reduced = prune_singletons(equivalence_closure(minimal));
    auto         label   = canonical_labels(reduced);
    Alphabet     target  = Alphabet::canonical(reduced.alphabet().size());
    for (Letter x = 0; x < reduced.alphabet().size(); ++x) {
      out.provenance.record_renaming(reduced.alphabet().symbol(x), target.symbol(label[x]));
    }
    std::vector<Relation> rels;
    for (auto const& r : reduced.relations()) {
      rels.push_back({map_word(r.lhs, label), map_word(r.rhs, label)});
    }
    out.presentation = Presentation(std::move(target), distinct_sorted(std::move(rels)));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism
  ////////////////////////////////////////////////////////////////////////

  bool inclusion_check(Presentation const&       p,
                       Presentation const&       q,
                       GeneratorBijection const& b) {
    if (b.map.size() != p.alphabet().size()) {
      throw InvalidArgument("inclusion_check: map is not total on the source alphabet");
    }
    for (Letter y : b.map) {
      if (y >= q.alphabet().size()) {
        throw InvalidArgument("inclusion_check: image outside the target alphabet");
      }
    }
    std::set<Relation> target(q.relations().begin(), q.relations().end());
    for (auto const& r : p.relations()) {
      if (!target.contains(Relation{b.apply(r.lhs), b.apply(r.rhs)})) {
        return false;
      }
    }
    return true;
  }

  std::optional<GeneratorBijection> presentations_isomorphic(Presentation const& p,
                                                             Presentation const& q) {
    std::size_t const m = p.alphabet().size();
    if (m != q.alphabet().size()) {
      return std::nullopt;
    }
    auto const rp = distinct_sorted(p.relations());
    auto const rq = distinct_sorted(q.relations());
    if (rp.size() != rq.size()) {
      return std::nullopt;
    }
    auto lengths = [](std::vector<Relation> const& rels) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      for (auto const& r : rels) {
        out.emplace_back(r.lhs.size(), r.rhs.size());
      }
      std::sort(out.begin(), out.end());
      return out;
    };
    if (lengths(rp) != lengths(rq)) {
      return std::nullopt;
    }
    if (PieceTable(p).pieces().size() != PieceTable(q).pieces().size()) {
      return std::nullopt;
    }

    auto const         sp = relation_signatures(rp, m);
    auto const         sq = relation_signatures(rq, m);
    std::set<Relation> target(rq.begin(), rq.end());

    // Relations of p grouped by the largest letter they use, so each can be
    // checked as soon as that letter is assigned.
    std::vector<std::vector<Relation const*>> ready(m + 1);
    for (auto const& r : rp) {
      Letter top = 0;
      bool   any = false;
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (Letter x : *w) {
          top = any ? std::max(top, x) : x;
          any = true;
        }
      }
      ready[any ? top + 1 : 0].push_back(&r);
    }
    for (auto const* r : ready[0]) {
      if (!target.contains(*r)) {
        return std::nullopt;
      }
    }

    GeneratorBijection b;
    b.map.assign(m, 0);
    std::vector<bool> taken(m, false);
    auto search = [&](auto&& self, std::size_t x) -> bool {
      if (x == m) {
        return inclusion_check(q, p, b.inverse());
      }
      for (Letter y = 0; y < m; ++y) {
        if (taken[y] || sp[x] != sq[y]) {
          continue;
        }
        b.map[x] = y;
        bool ok  = true;
        for (auto const* r : ready[x + 1]) {
          if (!target.contains(Relation{b.apply(r->lhs), b.apply(r->rhs)})) {
            ok = false;
            break;
          }
        }
        if (ok) {
          taken[y] = true;
          if (self(self, x + 1)) {
            return true;
          }
          taken[y] = false;
        }
      }
      return false;
    };
    if (!search(search, 0)) {
      return std::nullopt;
    }
    return b;
  }

  bool monoids_isomorphic(Presentation const& p, Presentation const& q) {
    auto cp = canonicalize(p);
    auto cq = canonicalize(q);
    return serialize_presentation(cp.presentation) == serialize_presentation(cq.presentation);
  }

}  // namespace sop
