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

#include "sop/core.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sop/error.hpp"

namespace sop {

  namespace {

    bool is_space(char c) {
      return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v'
             || c == '\f';
    }

    std::vector<std::string_view> split_tokens(std::string_view text) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_space(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_space(text[j])) {
          ++j;
        }
        if (j > i) {
          out.push_back(text.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    Word parse_word_at(std::string_view text,
                       Alphabet const&  alphabet,
                       std::size_t      line) {
      auto tokens = split_tokens(text);
      if (tokens.empty()) {
        throw ParseError("empty word (write 1 for the empty word)", line);
      }
      if (tokens.size() == 1 && tokens[0] == "1") {
        return {};
      }
      Word w;
      w.reserve(tokens.size());
      for (auto tok : tokens) {
        if (tok == "1") {
          throw ParseError("1 denotes the empty word and cannot be combined "
                           "with other letters",
                           line);
        }
        auto x = alphabet.index_of(tok);
        if (!x) {
          throw ParseError("unknown generator token '" + std::string(tok) + "'",
                           line);
        }
        w.push_back(*x);
      }
      return w;
    }

    struct ShortlexLess {
      bool operator()(Word const& u, Word const& v) const noexcept {
        return shortlex_less(u, v);
      }
    };

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  bool Alphabet::is_valid_token(std::string_view token) {
    if (token.empty()) {
      return false;
    }
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(token[0])) {
      return false;
    }
    return std::all_of(token.begin() + 1, token.end(), [&](char c) {
      return alpha(c) || digit(c) || c == '_';
    });
  }

  Alphabet::Alphabet(std::vector<std::string> symbols)
      : _symbols(std::move(symbols)) {
    std::unordered_set<std::string> seen;
    for (auto const& s : _symbols) {
      if (!is_valid_token(s)) {
        throw ParseError("invalid generator token '" + s + "'");
      }
      if (!seen.insert(s).second) {
        throw ParseError("duplicate generator '" + s + "'");
      }
    }
  }

  Alphabet Alphabet::canonical(std::size_t size) {
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      names.push_back("g" + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  Alphabet Alphabet::letters(std::size_t size) {
    std::vector<std::string> names;
    names.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
      names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i))
                             : "x" + std::to_string(i));
    }
    return Alphabet(std::move(names));
  }

  std::optional<Letter> Alphabet::index_of(std::string_view token) const {
    auto it = std::find(_symbols.begin(), _symbols.end(), token);
    if (it == _symbols.end()) {
      return std::nullopt;
    }
    return static_cast<Letter>(it - _symbols.begin());
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  Presentation::Presentation(Alphabet alphabet, std::vector<Relation> relations)
      : _alphabet(std::move(alphabet)), _relations(std::move(relations)) {
    auto const n = _alphabet.size();
    for (auto const& r : _relations) {
      for (auto const* w : {&r.lhs, &r.rhs}) {
        for (Letter x : *w) {
          if (x >= n) {
            throw InvalidArgument("letter index " + std::to_string(x)
                                  + " out of range for alphabet of size "
                                  + std::to_string(n));
          }
        }
      }
    }
  }

  std::size_t Presentation::max_relation_length() const noexcept {
    std::size_t m = 0;
    for (auto const& r : _relations) {
      m = std::max({m, r.lhs.size(), r.rhs.size()});
    }
    return m;
  }

  std::size_t Presentation::sum_relation_length() const noexcept {
    std::size_t s = 0;
    for (auto const& r : _relations) {
      s += r.lhs.size() + r.rhs.size();
    }
    return s;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return parse_word_at(text, alphabet, 0);
  }

  std::string format_word(WordView w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.symbol(w[i]);
    }
    return out;
  }

  bool is_prefix(WordView prefix, WordView w) noexcept {
    return prefix.size() <= w.size()
           && std::equal(prefix.begin(), prefix.end(), w.begin());
  }

  bool is_suffix(WordView suffix, WordView w) noexcept {
    return suffix.size() <= w.size()
           && std::equal(suffix.begin(), suffix.end(), w.end() - suffix.size());
  }

  Word concat(WordView u, WordView v) {
    Word out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u.begin(), u.end());
    out.insert(out.end(), v.begin(), v.end());
    return out;
  }

  Word reversed(WordView w) {
    return Word(w.rbegin(), w.rend());
  }

  bool shortlex_less(WordView u, WordView v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  Presentation parse_presentation(std::string_view text) {
    std::optional<Alphabet> alphabet;
    std::vector<Relation>   relations;
    std::size_t             line_no = 0;
    std::size_t             start   = 0;
    while (start <= text.size()) {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos) {
        end = text.size();
      }
      ++line_no;
      auto line = text.substr(start, end - start);
      start     = end + 1;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) {
        if (end == text.size()) {
          break;
        }
        continue;
      }
      auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        throw ParseError("expected 'generators:' or 'relation:'", line_no);
      }
      auto key  = trim(line.substr(0, colon));
      auto body = line.substr(colon + 1);
      if (key == "generators") {
        if (alphabet) {
          throw ParseError("duplicate generators line", line_no);
        }
        std::vector<std::string> names;
        for (auto tok : split_tokens(body)) {
          names.emplace_back(tok);
        }
        try {
          alphabet.emplace(std::move(names));
        } catch (ParseError const& e) {
          throw ParseError(e.what(), line_no);
        }
      } else if (key == "relation") {
        if (!alphabet) {
          throw ParseError("relation before generators line", line_no);
        }
        auto eq = body.find('=');
        if (eq == std::string_view::npos
            || body.find('=', eq + 1) != std::string_view::npos) {
          throw ParseError("relation must contain exactly one '='", line_no);
        }
        relations.push_back({parse_word_at(body.substr(0, eq), *alphabet, line_no),
                             parse_word_at(body.substr(eq + 1), *alphabet, line_no)});
      } else {
        throw ParseError("unknown line kind '" + std::string(key) + "'", line_no);
      }
      if (end == text.size()) {
        break;
      }
    }
    if (!alphabet) {
      throw ParseError("missing generators line");
    }
    return Presentation(std::move(*alphabet), std::move(relations));
  }

  Presentation parse_presentation(std::istream& in) {
    std::string text(std::istreambuf_iterator<char>(in), {});
    return parse_presentation(std::string_view(text));
  }

  Presentation load_presentation(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open '" + path + "'");
    }
    return parse_presentation(in);
  }

  std::string serialize_presentation(Presentation const& p) {
    std::ostringstream out;
    out << "generators:";
    for (auto const& s : p.alphabet().symbols()) {
      out << ' ' << s;
    }
    out << '\n';
    for (auto const& r : p.relations()) {
      out << "relation: " << format_word(r.lhs, p.alphabet()) << " = "
          << format_word(r.rhs, p.alphabet()) << '\n';
    }
    return out.str();
  }

  std::vector<Word> relation_words(Presentation const& p) {
    std::set<Word, ShortlexLess> words;
    for (auto const& r : p.relations()) {
      words.insert(r.lhs);
      words.insert(r.rhs);
    }
    return {words.begin(), words.end()};
  }

  Presentation equivalence_closure(Presentation const& p) {
    auto words = relation_words(p);
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
    std::map<std::size_t, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < words.size(); ++i) {
      classes[find(i)].push_back(i);
    }
    std::vector<Relation> rels;
    for (auto const& [root, members] : classes) {
      for (auto i : members) {
        for (auto j : members) {
          rels.push_back({words[i], words[j]});
        }
      }
    }
    std::sort(rels.begin(), rels.end(), [](Relation const& x, Relation const& y) {
      if (x.lhs != y.lhs) {
        return shortlex_less(x.lhs, y.lhs);
      }
      return shortlex_less(x.rhs, y.rhs);
    });
    return Presentation(p.alphabet(), std::move(rels));
  }

  Presentation reverse_presentation(Presentation const& p) {
    std::vector<Relation> rels;
    rels.reserve(p.relations().size());
    for (auto const& r : p.relations()) {
      rels.push_back({reversed(r.lhs), reversed(r.rhs)});
    }
    return Presentation(p.alphabet(), std::move(rels));
  }

  std::vector<Word> rewrite_neighbors(WordView w, Presentation const& p) {
    std::set<Word, ShortlexLess> out;
    auto apply = [&](Word const& from, Word const& to) {
      if (from.size() > w.size()) {
        return;
      }
      for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
        if (std::equal(from.begin(), from.end(), w.begin() + i)) {
          Word v;
          v.reserve(w.size() - from.size() + to.size());
          v.insert(v.end(), w.begin(), w.begin() + i);
          v.insert(v.end(), to.begin(), to.end());
          v.insert(v.end(), w.begin() + i + from.size(), w.end());
          out.insert(std::move(v));
        }
      }
    };
    for (auto const& r : p.relations()) {
      if (r.trivial()) {
        continue;
      }
      apply(r.lhs, r.rhs);
      apply(r.rhs, r.lhs);
    }
    return {out.begin(), out.end()};
  }

  Presentation relabel(Presentation const&        p,
                       std::vector<Letter> const& perm,
                       Alphabet const&            target) {
    if (perm.size() != p.alphabet().size()) {
      throw InvalidArgument("relabel: map size does not match alphabet");
    }
    auto map_word = [&](Word const& w) {
      Word out;
      out.reserve(w.size());
      for (Letter x : w) {
        out.push_back(perm[x]);
      }
      return out;
    };
    std::vector<Relation> rels;
    rels.reserve(p.relations().size());
    for (auto const& r : p.relations()) {
      rels.push_back({map_word(r.lhs), map_word(r.rhs)});
    }
    return Presentation(target, std::move(rels));
  }

}  // namespace sop
