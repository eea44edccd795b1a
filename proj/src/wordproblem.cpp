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

#include "sop/wordproblem.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>
#include <utility>

#include "sop/error.hpp"
#include "word_hash.hpp"

namespace sop {

  char const* to_string(EquivalenceStep s) noexcept {
    switch (s) {
      case EquivalenceStep::dump_prefix:
        return "dump-prefix";
      case EquivalenceStep::case1:
        return "case1";
      case EquivalenceStep::case2:
        return "case2";
      case EquivalenceStep::case3:
        return "case3";
      case EquivalenceStep::case4:
        return "case4";
      case EquivalenceStep::case5:
        return "case5";
      case EquivalenceStep::case6:
        return "case6";
      case EquivalenceStep::no_clean_prefix:
        return "no-clean-prefix";
      case EquivalenceStep::literal_equal:
        return "literal-equal";
    }
    return "?";
  }

  namespace {

    std::string describe_offender(PieceTable const& t, std::size_t n) {
      auto off = c_offender(t, n);
      if (!off) {
        return {};
      }
      auto const&  a = t.presentation().alphabet();
      std::string s  = "relation word " + format_word(off->relation_word, a)
                      + " is a product of " + std::to_string(off->decomposition.size())
                      + " piece(s):";
      if (off->decomposition.empty()) {
        s += " (empty word)";
      }
      for (auto const& piece : off->decomposition) {
        s += " [" + format_word(piece, a) + "]";
      }
      return s;
    }

    Word suffix_from(WordView w, std::size_t i) {
      return Word(w.begin() + i, w.end());
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // SmallOverlapSolver - setup and prefix machinery
  ////////////////////////////////////////////////////////////////////////

  SmallOverlapSolver::SmallOverlapSolver(Presentation const& p) : _table(p) {
    if (!check_c(_table, 3)) {
      throw PreconditionError("presentation is not C(3): "
                              + describe_offender(_table, 3));
    }
    _c4 = check_c(_table, 4);
    auto const& words = _table.relation_words();
    _rel.reserve(words.size());
    _xy.reserve(words.size());
    for (auto const& w : words) {
      _rel.push_back(xyz_factorization(w, _table));
      _xy.push_back(concat(_rel.back().x, _rel.back().y));
    }
    _class_of.assign(words.size(), 0);
    for (auto const& c : complement_classes(p)) {
      std::vector<std::size_t> idx;
      for (auto const& m : c.members) {
        idx.push_back(_table.relation_word_index(m).value());
      }
      for (auto i : idx) {
        _class_of[i] = _classes.size();
      }
      _classes.push_back(std::move(idx));
    }
  }

  void SmallOverlapSolver::require_c4(char const* what) const {
    if (!_c4) {
      throw PreconditionError(std::string(what) + " requires a C(4) presentation: "
                              + describe_offender(_table, 4));
    }
  }

  std::optional<std::size_t> SmallOverlapSolver::xy_at(WordView    w,
                                                       std::size_t pos) const {
    auto rest = w.subspan(pos);
    for (std::size_t i = 0; i < _xy.size(); ++i) {
      if (is_prefix(_xy[i], rest)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<SmallOverlapSolver::Occurrence>
  SmallOverlapSolver::first_xy(WordView w, std::size_t from) const {
    for (std::size_t pos = from; pos < w.size(); ++pos) {
      if (auto i = xy_at(w, pos)) {
        return Occurrence{pos, *i};
      }
    }
    return std::nullopt;
  }

  bool SmallOverlapSolver::is_clean(WordView w, Occurrence o) const {
    std::size_t const x  = _rel[o.rel].x.size();
    std::size_t const xy = _xy[o.rel].size();
    for (std::size_t t = o.pos + x + 1; t < o.pos + xy; ++t) {
      if (xy_at(w, t)) {
        return false;
      }
    }
    return true;
  }

  std::optional<SmallOverlapSolver::Occurrence>
  SmallOverlapSolver::clean_occurrence(WordView w) const {
    // Occurrences never nest, so in start order each unclean one is
    // witnessed by the next; the first clean one ends the overlap chain
    // that starts at the shortest relation prefix.
    auto o = first_xy(w, 0);
    while (o && !is_clean(w, *o)) {
      o = first_xy(w, o->pos + 1);
    }
    return o;
  }

  std::optional<std::size_t>
  SmallOverlapSolver::complement_xy_prefix(std::size_t rel, WordView v) const {
    for (auto i : complements(rel)) {
      if (is_prefix(_xy[i], v)) {
        return i;
      }
    }
    return std::nullopt;
  }

  std::optional<OverlapPrefix>
  SmallOverlapSolver::first_relation_prefix(WordView w) const {
    auto o = first_xy(w, 0);
    if (!o) {
      return std::nullopt;
    }
    auto const&   f = _rel[o->rel];
    OverlapPrefix out;
    out.leading.assign(w.begin(), w.begin() + o->pos);
    out.x                    = f.x;
    out.y                    = f.y;
    out.source_relation_word = f.relation_word;
    out.clean                = is_clean(w, *o);
    return out;
  }

  std::optional<OverlapPrefix>
  SmallOverlapSolver::clean_overlap_prefix(WordView w) const {
    require_c4("clean_overlap_prefix");
    auto o = clean_occurrence(w);
    if (!o) {
      return std::nullopt;
    }
    auto const&   f = _rel[o->rel];
    OverlapPrefix out;
    out.leading.assign(w.begin(), w.begin() + o->pos);
    out.x                    = f.x;
    out.y                    = f.y;
    out.source_relation_word = f.relation_word;
    out.clean                = true;
    return out;
  }

  std::ptrdiff_t SmallOverlapSolver::rho(WordView w) const {
    require_c4("rho");
    auto o = clean_occurrence(w);
    if (!o) {
      return -1;
    }
    return static_cast<std::ptrdiff_t>(w.size() - o->pos - _xy[o->rel].size());
  }

  ////////////////////////////////////////////////////////////////////////
  // SmallOverlapSolver - decision procedure
  ////////////////////////////////////////////////////////////////////////

  // One decision: memo tables for the branching cases (1 and 3, which
  // quantify over complements of Z) plus the trace being built.  The
  // single-successor cases loop in place.
  class SmallOverlapSolver::Search {
   public:
    explicit Search(SmallOverlapSolver const& s) : _s(s) {}

    bool equivalent(Word u, Word v, std::vector<EquivalenceStep>& steps) {
      auto key = std::make_pair(u, v);
      if (auto it = _memo.find(key); it != _memo.end()) {
        return it->second;
      }
      bool r = run(std::move(u), std::move(v), steps);
      _memo.emplace(std::move(key), r);
      return r;
    }

    bool possible_prefix(Word z, Word u) const {
      while (true) {
        if (is_prefix(z, u)) {
          return true;
        }
        auto o = _s.clean_occurrence(u);
        if (!o) {
          return false;
        }
        if (o->pos > 0) {
          // Every word equivalent to u begins with the leading word.
          if (z.size() <= o->pos
              || !std::equal(u.begin(), u.begin() + o->pos, z.begin())) {
            return false;
          }
          z = suffix_from(z, o->pos);
          u = suffix_from(u, o->pos);
          continue;
        }
        // Every word equivalent to u = XYu' begins with the X'Y' of some
        // complement; z (a piece) is shorter than any X'Y'.  A proper
        // complement is reachable iff Z is a possible prefix of u'.
        auto const& f = _s._rel[o->rel];
        bool        candidate = false;
        for (auto i : _s.complements(o->rel)) {
          if (i != o->rel && is_prefix(z, _s._xy[i])) {
            candidate = true;
            break;
          }
        }
        if (!candidate) {
          return false;
        }
        u = suffix_from(u, _s._xy[o->rel].size());
        z = f.z;
      }
    }

   private:
    bool any_complement_suffix(std::size_t                   rel,
                               Word const&                   u2,
                               Word const&                   v2,
                               std::vector<EquivalenceStep>& steps) {
      std::vector<EquivalenceStep> first_attempt;
      bool                         first = true;
      for (auto i : _s.complements(rel)) {
        auto const&                  zhat = _s._rel[i].z;
        std::vector<EquivalenceStep> sub;
        if (equivalent(concat(zhat, u2), concat(zhat, v2), sub)) {
          steps.insert(steps.end(), sub.begin(), sub.end());
          return true;
        }
        if (first) {
          first_attempt = std::move(sub);
          first         = false;
        }
      }
      steps.insert(steps.end(), first_attempt.begin(), first_attempt.end());
      return false;
    }

    bool run(Word u, Word v, std::vector<EquivalenceStep>& steps) {
      while (true) {
        auto o = _s.clean_occurrence(u);
        if (!o) {
          steps.push_back(EquivalenceStep::no_clean_prefix);
          if (u == v) {
            steps.push_back(EquivalenceStep::literal_equal);
            return true;
          }
          return false;
        }
        if (o->pos > 0) {
          steps.push_back(EquivalenceStep::dump_prefix);
          if (v.size() < o->pos || !std::equal(u.begin(), u.begin() + o->pos, v.begin())) {
            return false;
          }
          u = suffix_from(u, o->pos);
          v = suffix_from(v, o->pos);
          continue;
        }

        std::size_t const rel = o->rel;
        auto const&       z   = _s._rel[rel].z;
        auto              c   = _s.complement_xy_prefix(rel, v);
        if (!c) {
          return false;
        }
        Word       u1 = suffix_from(u, _s._xy[rel].size());
        Word       v1 = suffix_from(v, _s._xy[*c].size());
        bool const zu = is_prefix(z, u1);

        if (*c == rel) {
          if (zu && is_prefix(z, v1)) {
            steps.push_back(EquivalenceStep::case1);
            return any_complement_suffix(
                rel, suffix_from(u1, z.size()), suffix_from(v1, z.size()), steps);
          }
          steps.push_back(EquivalenceStep::case2);
          u = std::move(u1);
          v = std::move(v1);
          continue;
        }

        auto const& zbar = _s._rel[*c].z;
        bool const  zv   = is_prefix(zbar, v1);
        if (zu && zv) {
          steps.push_back(EquivalenceStep::case3);
          return any_complement_suffix(
              rel, suffix_from(u1, z.size()), suffix_from(v1, zbar.size()), steps);
        }
        if (!zu && zv) {
          steps.push_back(EquivalenceStep::case4);
          v = concat(z, WordView(v1).subspan(zbar.size()));
          u = std::move(u1);
          continue;
        }
        if (zu && !zv) {
          steps.push_back(EquivalenceStep::case5);
          u = concat(zbar, WordView(u1).subspan(z.size()));
          v = std::move(v1);
          continue;
        }
        steps.push_back(EquivalenceStep::case6);
        std::size_t common = 0;
        while (common < z.size() && common < zbar.size()
               && z[z.size() - 1 - common] == zbar[zbar.size() - 1 - common]) {
          ++common;
        }
        if (common == 0) {
          return false;
        }
        std::size_t const z1 = z.size() - common;
        std::size_t const z2 = zbar.size() - common;
        if (!is_prefix(WordView(z).first(z1), u1)
            || !is_prefix(WordView(zbar).first(z2), v1)) {
          return false;
        }
        Word u2 = suffix_from(u1, z1);
        if (!possible_prefix(Word(z.end() - common, z.end()), u2)) {
          return false;
        }
        u = std::move(u2);
        v = suffix_from(v1, z2);
      }
    }

    SmallOverlapSolver const&             _s;
    std::map<std::pair<Word, Word>, bool> _memo;
  };

  bool SmallOverlapSolver::equivalent(WordView u, WordView v) const {
    EquivalenceTrace trace;
    return equivalent(u, v, trace);
  }

  bool SmallOverlapSolver::equivalent(WordView          u,
                                      WordView          v,
                                      EquivalenceTrace& trace) const {
    require_c4("words_equivalent");
    auto const n = _table.presentation().alphabet().size();
    for (auto w : {u, v}) {
      for (Letter x : w) {
        if (x >= n) {
          throw InvalidArgument("word uses a letter outside the alphabet");
        }
      }
    }
    Search search(*this);
    trace.steps.clear();
    trace.verdict = search.equivalent(Word(u.begin(), u.end()),
                                      Word(v.begin(), v.end()),
                                      trace.steps);
    return trace.verdict;
  }

  bool SmallOverlapSolver::is_possible_prefix(WordView z, WordView u) const {
    require_c4("is_possible_prefix");
    if (!_table.is_piece(z)) {
      throw PreconditionError("is_possible_prefix: "
                              + format_word(z, presentation().alphabet())
                              + " is not a piece");
    }
    Search search(*this);
    return search.possible_prefix(Word(z.begin(), z.end()), Word(u.begin(), u.end()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Free functions
  ////////////////////////////////////////////////////////////////////////

  std::optional<OverlapPrefix> first_relation_prefix(WordView w, Presentation const& p) {
    return SmallOverlapSolver(p).first_relation_prefix(w);
  }

  std::optional<OverlapPrefix> clean_overlap_prefix(WordView w, Presentation const& p) {
    return SmallOverlapSolver(p).clean_overlap_prefix(w);
  }

  std::ptrdiff_t rho(WordView w, Presentation const& p) {
    return SmallOverlapSolver(p).rho(w);
  }

  bool words_equivalent(WordView u, WordView v, Presentation const& p) {
    return SmallOverlapSolver(p).equivalent(u, v);
  }

  bool words_equivalent(WordView            u,
                        WordView            v,
                        Presentation const& p,
                        EquivalenceTrace&   trace) {
    return SmallOverlapSolver(p).equivalent(u, v, trace);
  }

  bool is_possible_prefix(WordView z, WordView u, Presentation const& p) {
    return SmallOverlapSolver(p).is_possible_prefix(z, u);
  }

  OracleResult bfs_oracle(WordView            u,
                          WordView            v,
                          Presentation const& p,
                          std::size_t         max_len,
                          std::size_t         max_nodes) {
    OracleResult result;
    Word const   target(v.begin(), v.end());
    Word         start(u.begin(), u.end());
    if (start == target) {
      result.verdict = OracleVerdict::equivalent;
      return result;
    }
    std::unordered_set<Word, WordHash> seen{start};
    std::deque<Word>                   queue{start};
    bool                               pruned = false;
    while (!queue.empty()) {
      if (result.expanded >= max_nodes) {
        return result;
      }
      Word w = std::move(queue.front());
      queue.pop_front();
      ++result.expanded;
      for (auto& n : rewrite_neighbors(w, p)) {
        if (n.size() > max_len) {
          pruned = true;
          continue;
        }
        if (n == target) {
          result.verdict = OracleVerdict::equivalent;
          return result;
        }
        if (seen.insert(n).second) {
          queue.push_back(std::move(n));
        }
      }
    }
    result.exhaustive = !pruned;
    return result;
  }

}  // namespace sop
