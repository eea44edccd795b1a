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

#include "sop/generic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "sop/cancel.hpp"
#include "sop/canonical.hpp"
#include "sop/error.hpp"
#include "sop/pieces.hpp"

namespace sop {

  ////////////////////////////////////////////////////////////////////////
  // SplitMix64
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t SplitMix64::mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(mix(seed ^ mix(index + 0x9e3779b97f4a7c15ull)));
  }

  SplitMix64::result_type SplitMix64::operator()() noexcept {
    _state += 0x9e3779b97f4a7c15ull;
    return mix(_state);
  }

  std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
    // Lemire's multiply-and-reject.
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto              lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      std::uint64_t const t = -bound % bound;
      while (lo < t) {
        m  = static_cast<unsigned __int128>((*this)()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  ////////////////////////////////////////////////////////////////////////
  // Shapes
  ////////////////////////////////////////////////////////////////////////

  BigInt weak_composition_count(std::size_t s, std::size_t r) {
    if (r == 0) {
      throw InvalidArgument("weak_composition_count: r must be positive");
    }
    BigInt c = 1;
    // C(s + r - 1, r - 1), built incrementally so every step is exact.
    for (std::size_t i = 1; i < r; ++i) {
      c = c * (s + i) / i;
    }
    return c;
  }

  Shape sample_shape(std::size_t n, std::size_t r, SplitMix64& rng) {
    if (r == 0) {
      throw InvalidArgument("sample_shape: r must be positive");
    }
    // Floyd's sampling of r - 1 bar slots among n + r - 1.
    std::size_t const        slots = n + r - 1;
    std::vector<std::size_t> bars;
    for (std::size_t j = slots - (r - 1); j < slots; ++j) {
      std::size_t t = rng.below(j + 1);
      if (std::find(bars.begin(), bars.end(), t) != bars.end()) {
        t = j;
      }
      bars.push_back(t);
    }
    std::sort(bars.begin(), bars.end());
    Shape       shape;
    std::size_t prev = 0;
    for (std::size_t b : bars) {
      shape.push_back(b - prev);
      prev = b + 1;
    }
    shape.push_back(slots - prev);
    return shape;
  }

  char const* to_string(LengthMode m) noexcept {
    return m == LengthMode::sum ? "sum" : "max";
  }

  std::optional<LengthMode> parse_length_mode(std::string_view s) {
    if (s == "sum") {
      return LengthMode::sum;
    }
    if (s == "max") {
      return LengthMode::max;
    }
    return std::nullopt;
  }

  Presentation presentation_from_shape(std::size_t  alphabet_size,
                                       Shape const& shape,
                                       WordView     word) {
    if (shape.size() % 2 != 0) {
      throw InvalidArgument("presentation_from_shape: shape needs an even number of blocks");
    }
    std::vector<Relation> rels;
    std::size_t           pos = 0;
    auto                  take = [&](std::size_t len) {
      if (pos + len > word.size()) {
        throw InvalidArgument("presentation_from_shape: shape longer than word");
      }
      Word w(word.begin() + pos, word.begin() + pos + len);
      pos += len;
      return w;
    };
    for (std::size_t i = 0; i < shape.size(); i += 2) {
      Word l = take(shape[i]);
      Word r = take(shape[i + 1]);
      rels.push_back({std::move(l), std::move(r)});
    }
    if (pos != word.size()) {
      throw InvalidArgument("presentation_from_shape: shape shorter than word");
    }
    return Presentation(Alphabet::letters(alphabet_size), std::move(rels));
  }

  namespace {

    Word random_word(std::size_t a, std::size_t len, SplitMix64& rng) {
      Word w(len);
      for (auto& x : w) {
        x = static_cast<Letter>(rng.below(a));
      }
      return w;
    }

    void validate(SampleConfig const& cfg) {
      if (cfg.alphabet_size == 0 || cfg.relation_count == 0) {
        throw InvalidArgument("alphabet size and relation count must be positive");
      }
    }

  }  // namespace

  Presentation sample_presentation(SampleConfig const& cfg, SplitMix64& rng) {
    validate(cfg);
    std::size_t const a = cfg.alphabet_size;
    std::size_t const r = 2 * cfg.relation_count;
    if (cfg.mode == LengthMode::sum) {
      Shape shape = sample_shape(cfg.length, r, rng);
      Word  word  = random_word(a, cfg.length, rng);
      return presentation_from_shape(a, shape, word);
    }
    while (true) {
      Shape shape(r);
      for (auto& len : shape) {
        len = rng.below(cfg.length + 1);
      }
      if (*std::max_element(shape.begin(), shape.end()) != cfg.length) {
        continue;
      }
      std::size_t total = 0;
      for (auto len : shape) {
        total += len;
      }
      Word word = random_word(a, total, rng);
      return presentation_from_shape(a, shape, word);
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////

  BigInt enumeration_size(std::size_t a, std::size_t k, std::size_t n) {
    BigInt words = 1;
    for (std::size_t i = 0; i < n; ++i) {
      words *= a;
    }
    return words * weak_composition_count(n, 2 * k);
  }

  std::uint64_t enumerate_presentations(std::size_t                                     a,
                                        std::size_t                                     k,
                                        std::size_t                                     n,
                                        std::function<void(Presentation const&)> const& f) {
    if (a == 0 || k == 0) {
      throw InvalidArgument("alphabet size and relation count must be positive");
    }
    BigInt const total = enumeration_size(a, k, n);
    if (total > enumeration_limit) {
      throw InvalidArgument("enumeration guard exceeded: " + total.str()
                            + " presentations (limit "
                            + std::to_string(enumeration_limit) + ")");
    }
    std::size_t const r = 2 * k;
    std::uint64_t     count = 0;
    Shape             shape(r, 0);
    Word              word(n, 0);
    auto              each_word = [&] {
      std::fill(word.begin(), word.end(), 0);
      while (true) {
        f(presentation_from_shape(a, shape, word));
        ++count;
        std::size_t i = n;
        while (i > 0 && word[i - 1] + 1 == a) {
          word[--i] = 0;
        }
        if (i == 0) {
          return;
        }
        ++word[i - 1];
      }
    };
    // Weak compositions in lexicographic order.
    auto compositions = [&](auto&& self, std::size_t i, std::size_t left) -> void {
      if (i + 1 == r) {
        shape[i] = left;
        each_word();
        return;
      }
      for (std::size_t v = 0; v <= left; ++v) {
        shape[i] = v;
        self(self, i + 1, left - v);
      }
    };
    compositions(compositions, 0, n);
    return count;
  }

  ////////////////////////////////////////////////////////////////////////
  // Estimation
  ////////////////////////////////////////////////////////////////////////

  char const* to_string(Property p) noexcept {
    switch (p) {
      case Property::strong_c4:
        return "strong-c4";
      case Property::left_cancellative:
        return "left-cancellative";
      case Property::right_cancellative:
        return "right-cancellative";
      case Property::cancellative:
        return "cancellative";
    }
    return "?";
  }

  std::optional<Property> parse_property(std::string_view s) {
    for (auto p : {Property::strong_c4, Property::left_cancellative,
                   Property::right_cancellative, Property::cancellative}) {
      if (s == to_string(p)) {
        return p;
      }
    }
    return std::nullopt;
  }

  ProportionEstimate estimate_proportion(
      SampleConfig const&                                cfg,
      std::string                                        name,
      std::function<Verdict(Presentation const&)> const& predicate) {
    validate(cfg);
    if (cfg.trials == 0) {
      throw InvalidArgument("trials must be positive");
    }
    ProportionEstimate e;
    e.property = std::move(name);
    e.trials   = cfg.trials;
    for (std::size_t i = 0; i < cfg.trials; ++i) {
      auto    rng = SplitMix64::stream(cfg.seed, i);
      Verdict v   = predicate(sample_presentation(cfg, rng));
      e.hits += v.hit ? 1 : 0;
      e.flagged += v.flagged ? 1 : 0;
    }
    double const n = static_cast<double>(e.trials);
    e.estimate     = static_cast<double>(e.hits) / n;
    e.ci95         = 1.96 * std::sqrt(e.estimate * (1 - e.estimate) / n);
    return e;
  }

  ProportionEstimate estimate_proportion(SampleConfig const& cfg, Property property) {
    auto pred = [property](Presentation const& p) -> Verdict {
      PieceTable t(p);
      if (property == Property::strong_c4) {
        return {check_strong_c(t, 4), false};
      }
      bool const flagged = !check_c(t, 4);
      bool       hit     = false;
      switch (property) {
        case Property::left_cancellative:
          hit = left_criterion(p).holds;
          break;
        case Property::right_cancellative:
          hit = right_criterion(p).holds;
          break;
        default:
          hit = left_criterion(p).holds && right_criterion(p).holds;
          break;
      }
      return {hit, flagged};
    };
    return estimate_proportion(cfg, to_string(property), pred);
  }

  std::string csv_header() {
    return "property,a,k,n,mode,trials,hits,estimate,ci95,flagged";
  }

  std::string csv_row(SampleConfig const& cfg, ProportionEstimate const& e) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed << e.property << ',' << cfg.alphabet_size << ',' << cfg.relation_count
        << ',' << cfg.length << ',' << to_string(cfg.mode) << ',' << e.trials << ','
        << e.hits << ',' << e.estimate << ',' << e.ci95 << ',' << e.flagged;
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  IsomorphismCount count_isomorphism_types(std::size_t a, std::size_t k, std::size_t n) {
    IsomorphismCount                c;
    std::unordered_set<std::string> seen;
    c.presentations = enumerate_presentations(a, k, n, [&](Presentation const& p) {
      if (!check_strong_c(p, 2)) {
        return;
      }
      ++c.strong_c2;
      seen.insert(serialize_presentation(canonicalize(p).presentation));
    });
    c.isomorphism_types = seen.size();
    return c;
  }

}  // namespace sop
