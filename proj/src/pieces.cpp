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

#include "sop/pieces.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>

#include "sop/error.hpp"

namespace sop {

  namespace {

    constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

    struct ShortlexLess {
      bool operator()(Word const& u, Word const& v) const noexcept {
        return shortlex_less(u, v);
      }
    };

    std::size_t common_prefix(WordView u, WordView v) noexcept {
      std::size_t n = std::min(u.size(), v.size());
      std::size_t i = 0;
      while (i < n && u[i] == v[i]) {
        ++i;
      }
      return i;
    }

    // dp[i] = fewest pieces covering w[0, i); step[i] = length of the last
    // piece on one optimal path.  `longest(i)` is the longest piece prefix of
    // w[i..], and every shorter prefix of a piece is again a piece.
    template <typename LongestAt>
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>>
    decomposition_table(std::size_t n, LongestAt&& longest) {
      std::vector<std::size_t> dp(n + 1, kInf), step(n + 1, 0);
      dp[0] = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (dp[i] == kInf) {
          continue;
        }
        std::size_t const len = std::min(longest(i), n - i);
        for (std::size_t l = len; l >= 1; --l) {
          if (dp[i] + 1 < dp[i + l]) {
            dp[i + l]   = dp[i] + 1;
            step[i + l] = l;
          }
        }
      }
      return {std::move(dp), std::move(step)};
    }

    std::optional<std::size_t> decompose_relation_word(PieceTable const& t,
                                                       std::size_t       j) {
      auto const& w = t.relation_words()[j];
      auto [dp, step]
          = decomposition_table(w.size(), [&](std::size_t i) { return t.longest_piece_at(j, i); });
      if (dp[w.size()] == kInf) {
        return std::nullopt;
      }
      return dp[w.size()];
    }

    std::vector<std::size_t> union_find_classes(Presentation const&    p,
                                                std::vector<Word> const& words) {
      auto index = [&](Word const& w) {
        return static_cast<std::size_t>(
            std::lower_bound(words.begin(), words.end(), w, ShortlexLess{})
            - words.begin());
      };
      std::vector<std::size_t> parent(words.size());
      std::iota(parent.begin(), parent.end(), 0);
      auto find = [&](std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      };
      for (auto const& r : p.relations()) {
        auto a = find(index(r.lhs));
        auto b = find(index(r.rhs));
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
        }
      }
      for (std::size_t i = 0; i < words.size(); ++i) {
        parent[i] = find(i);
      }
      return parent;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // PieceTable
  ////////////////////////////////////////////////////////////////////////

  PieceTable::PieceTable(Presentation const& p)
      : _presentation(p), _words(sop::relation_words(p)) {
    // Concatenate the distinct relation words, each followed by a separator
    // slot, and compute for every position the longest common prefix with
    // any other position.  Rows of the LCP table are rolled from the back
    // so memory stays linear.
    std::vector<std::size_t> owner, offset;
    std::vector<Letter>      text;
    std::vector<bool>        sep;
    for (std::size_t j = 0; j < _words.size(); ++j) {
      for (std::size_t s = 0; s < _words[j].size(); ++s) {
        text.push_back(_words[j][s]);
        sep.push_back(false);
        owner.push_back(j);
        offset.push_back(s);
      }
      text.push_back(0);
      sep.push_back(true);
      owner.push_back(j);
      offset.push_back(_words[j].size());
    }
    std::size_t const        n = text.size();
    std::vector<std::size_t> next(n + 1, 0), cur(n + 1, 0), best(n, 0);
    for (std::size_t x = n; x-- > 0;) {
      for (std::size_t y = n; y-- > 0;) {
        if (sep[x] || sep[y] || text[x] != text[y]) {
          cur[y] = 0;
        } else {
          cur[y] = 1 + next[y + 1];
        }
        if (y != x) {
          best[x] = std::max(best[x], cur[y]);
        }
      }
      std::swap(cur, next);
    }
    _longest.resize(_words.size());
    for (std::size_t j = 0; j < _words.size(); ++j) {
      _longest[j].assign(_words[j].size(), 0);
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!sep[x]) {
        _longest[owner[x]][offset[x]] = best[x];
        _max_piece_length             = std::max(_max_piece_length, best[x]);
      }
    }
  }

  std::optional<std::size_t> PieceTable::relation_word_index(WordView w) const {
    Word key(w.begin(), w.end());
    auto it = std::lower_bound(_words.begin(), _words.end(), key, ShortlexLess{});
    if (it == _words.end() || *it != key) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _words.begin());
  }

  std::size_t PieceTable::longest_piece_prefix(WordView w) const {
    std::size_t best = 0;
    for (std::size_t j = 0; j < _words.size(); ++j) {
      WordView rw(_words[j]);
      for (std::size_t s = 0; s < rw.size(); ++s) {
        if (_longest[j][s] <= best) {
          continue;
        }
        best = std::max(best,
                        std::min(_longest[j][s], common_prefix(w, rw.subspan(s))));
      }
    }
    return best;
  }

  std::size_t PieceTable::longest_piece_suffix_of(std::size_t word) const {
    auto const& w = _words.at(word);
    for (std::size_t s = 0; s < w.size(); ++s) {
      if (w.size() - s <= _longest[word][s]) {
        return w.size() - s;
      }
    }
    return 0;
  }

  bool PieceTable::is_piece(WordView w) const {
    return w.empty() || longest_piece_prefix(w) >= w.size();
  }

  std::vector<Word> PieceTable::pieces() const {
    std::set<Word, ShortlexLess> out;
    out.insert(Word{});
    for (std::size_t j = 0; j < _words.size(); ++j) {
      for (std::size_t s = 0; s < _words[j].size(); ++s) {
        for (std::size_t l = 1; l <= _longest[j][s]; ++l) {
          out.emplace(_words[j].begin() + s, _words[j].begin() + s + l);
        }
      }
    }
    return {out.begin(), out.end()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Decompositions
  ////////////////////////////////////////////////////////////////////////

  std::optional<std::vector<Word>> piece_decomposition(WordView          w,
                                                       PieceTable const& t) {
    std::vector<std::size_t> longest(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      longest[i] = t.longest_piece_prefix(w.subspan(i));
    }
    auto [dp, step]
        = decomposition_table(w.size(), [&](std::size_t i) { return longest[i]; });
    if (dp[w.size()] == kInf) {
      return std::nullopt;
    }
    std::vector<Word> parts;
    for (std::size_t i = w.size(); i > 0; i -= step[i]) {
      parts.emplace_back(w.begin() + (i - step[i]), w.begin() + i);
    }
    std::reverse(parts.begin(), parts.end());
    return parts;
  }

  std::optional<std::size_t> min_piece_decomposition(WordView          w,
                                                     PieceTable const& t) {
    if (auto j = t.relation_word_index(w)) {
      return decompose_relation_word(t, *j);
    }
    auto parts = piece_decomposition(w, t);
    if (!parts) {
      return std::nullopt;
    }
    return parts->size();
  }

  std::optional<std::size_t> greedy_piece_decomposition(WordView          w,
                                                        PieceTable const& t) {
    std::size_t count = 0;
    while (!w.empty()) {
      auto l = t.longest_piece_prefix(w);
      if (l == 0) {
        return std::nullopt;
      }
      w = w.subspan(l);
      ++count;
    }
    return count;
  }

  std::optional<COffender> c_offender(PieceTable const& t, std::size_t n) {
    for (std::size_t j = 0; j < t.relation_words().size(); ++j) {
      auto d = decompose_relation_word(t, j);
      if (d && *d < n) {
        auto const& w = t.relation_words()[j];
        return COffender{w, piece_decomposition(w, t).value()};
      }
    }
    return std::nullopt;
  }

  bool check_c(PieceTable const& t, std::size_t n) {
    for (std::size_t j = 0; j < t.relation_words().size(); ++j) {
      auto d = decompose_relation_word(t, j);
      if (d && *d < n) {
        return false;
      }
    }
    return true;
  }

  bool check_c(Presentation const& p, std::size_t n) {
    return check_c(PieceTable(p), n);
  }

  bool has_repeated_relation_words(Presentation const& p) {
    std::set<Word> seen;
    for (auto const& r : p.relations()) {
      if (!seen.insert(r.lhs).second || !seen.insert(r.rhs).second) {
        return true;
      }
    }
    return false;
  }

  bool check_strong_c(PieceTable const& t, std::size_t n) {
    return !has_repeated_relation_words(t.presentation()) && check_c(t, n);
  }

  bool check_strong_c(Presentation const& p, std::size_t n) {
    return !has_repeated_relation_words(p) && check_c(PieceTable(p), n);
  }

  OverlapDegree small_overlap_degree(PieceTable const& t) {
    std::optional<std::size_t> best;
    for (std::size_t j = 0; j < t.relation_words().size(); ++j) {
      if (auto d = decompose_relation_word(t, j)) {
        best = best ? std::min(*best, *d) : *d;
      }
    }
    return best ? OverlapDegree::finite(*best) : OverlapDegree::unbounded();
  }

  OverlapDegree small_overlap_degree(Presentation const& p) {
    return small_overlap_degree(PieceTable(p));
  }

  XYZFactorization xyz_factorization(WordView r, PieceTable const& t) {
    auto j = t.relation_word_index(r);
    if (!j) {
      throw PreconditionError("xyz_factorization: "
                              + format_word(r, t.presentation().alphabet())
                              + " is not a relation word");
    }
    std::size_t const x = r.empty() ? 0 : t.longest_piece_at(*j, 0);
    std::size_t const z = t.longest_piece_suffix_of(*j);
    if (x + z >= r.size()) {
      throw PreconditionError(
          "xyz_factorization: maximal piece prefix and suffix of "
          + format_word(r, t.presentation().alphabet())
          + " leave no middle word (presentation is not C(3))");
    }
    XYZFactorization f;
    f.relation_word.assign(r.begin(), r.end());
    f.x.assign(r.begin(), r.begin() + x);
    f.y.assign(r.begin() + x, r.end() - z);
    f.z.assign(r.end() - z, r.end());
    return f;
  }

  ////////////////////////////////////////////////////////////////////////
  // Complements
  ////////////////////////////////////////////////////////////////////////

  bool ComplementClass::contains(WordView w) const {
    Word key(w.begin(), w.end());
    return std::binary_search(members.begin(), members.end(), key, ShortlexLess{});
  }

  std::vector<ComplementClass> complement_classes(Presentation const& p) {
    auto words = relation_words(p);
    auto root  = union_find_classes(p, words);
    std::map<std::size_t, ComplementClass> by_root;
    for (std::size_t i = 0; i < words.size(); ++i) {
      by_root[root[i]].members.push_back(words[i]);
    }
    std::vector<ComplementClass> out;
    out.reserve(by_root.size());
    for (auto& [r, c] : by_root) {
      out.push_back(std::move(c));
    }
    return out;
  }

  ComplementClass complement_class(WordView r, Presentation const& p) {
    for (auto& c : complement_classes(p)) {
      if (c.contains(r)) {
        return std::move(c);
      }
    }
    throw InvalidArgument("complement_class: "
                          + format_word(r, p.alphabet())
                          + " is not a relation word");
  }

}  // namespace sop
