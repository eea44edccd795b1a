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

// Random and exhaustive ordered presentations.  An ordered presentation
// with k relations and total length n is a weak composition of n into 2k
// parts (its shape) together with a word of length n cut along it.

#ifndef SOP_GENERIC_HPP
#define SOP_GENERIC_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sop/core.hpp"

namespace sop {

  using BigInt = boost::multiprecision::cpp_int;

  // SplitMix64.  Independent streams for trial i of a run come from
  // SplitMix64::stream(seed, i), so results do not depend on scheduling.
  class SplitMix64 {
   public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t seed) noexcept : _state(seed) {}

    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) noexcept;
    static std::uint64_t mix(std::uint64_t z) noexcept;

    static constexpr result_type min() noexcept {
      return 0;
    }
    static constexpr result_type max() noexcept {
      return ~result_type(0);
    }
    result_type operator()() noexcept;
    // Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound) noexcept;

   private:
    std::uint64_t _state;
  };

  // (s + r - 1) choose (r - 1).
  BigInt weak_composition_count(std::size_t s, std::size_t r);

  using Shape = std::vector<std::size_t>;

  // Uniform over weak compositions of n into r parts.
  Shape sample_shape(std::size_t n, std::size_t r, SplitMix64& rng);

  enum class LengthMode : std::uint8_t { sum, max };

  char const*               to_string(LengthMode m) noexcept;
  std::optional<LengthMode> parse_length_mode(std::string_view s);

  struct SampleConfig {
    std::size_t   alphabet_size  = 2;
    std::size_t   relation_count = 1;
    std::size_t   length         = 0;
    LengthMode    mode           = LengthMode::sum;
    std::uint64_t seed           = 0;
    std::size_t   trials         = 1;
  };

  // Relation i is (w_{2i}, w_{2i+1}) where w_j is block j of `word` cut
  // along `shape`.  Alphabet a, b, c, ...
  Presentation presentation_from_shape(std::size_t  alphabet_size,
                                       Shape const& shape,
                                       WordView     word);

  // sum: uniform shape and uniform word of length n.  max: each of the 2k
  // words gets a length uniform in [0, n] and then uniform letters; the
  // whole draw is repeated until some word has length exactly n.
  Presentation sample_presentation(SampleConfig const& cfg, SplitMix64& rng);

  inline constexpr std::uint64_t enumeration_limit = 10'000'000;

  // a^n * C'_{2k}(n).
  BigInt enumeration_size(std::size_t a, std::size_t k, std::size_t n);

  // Calls f once per ordered presentation (shapes in lexicographic order,
  // words in lexicographic order within a shape) and returns the count.
  // Throws InvalidArgument when enumeration_size exceeds the limit.
  std::uint64_t enumerate_presentations(std::size_t                                     a,
                                        std::size_t                                     k,
                                        std::size_t                                     n,
                                        std::function<void(Presentation const&)> const& f);

  enum class Property : std::uint8_t {
    strong_c4,
    left_cancellative,
    right_cancellative,
    cancellative,
  };

  char const*             to_string(Property p) noexcept;
  std::optional<Property> parse_property(std::string_view s);

  struct ProportionEstimate {
    std::string property;
    std::size_t hits    = 0;
    std::size_t trials  = 0;
    // Samples where the property was decided outside its guarantee (the
    // cancellativity criterion applied to a non-C(4) presentation).
    std::size_t flagged  = 0;
    double      estimate = 0;
    double      ci95     = 0;  // 1.96 * sqrt(p (1 - p) / trials)
  };

  // Cancellativity properties apply the syntactic criterion to every
  // sample; samples that are not C(4) still count and are flagged.
  ProportionEstimate estimate_proportion(SampleConfig const& cfg, Property property);

  // Predicate returns (hit, flagged).
  struct Verdict {
    bool hit     = false;
    bool flagged = false;
  };
  ProportionEstimate estimate_proportion(
      SampleConfig const&                                  cfg,
      std::string                                          name,
      std::function<Verdict(Presentation const&)> const& predicate);

  // CSV header and one row per estimate, in the column order
  // property,a,k,n,mode,trials,hits,estimate,ci95,flagged.
  std::string csv_header();
  std::string csv_row(SampleConfig const& cfg, ProportionEstimate const& e);

  struct IsomorphismCount {
    std::uint64_t presentations  = 0;
    std::uint64_t strong_c2      = 0;
    std::uint64_t isomorphism_types = 0;
  };

  // Enumerates all ordered presentations, keeps the strongly C(2) ones
  // and counts distinct canonical forms.  Same guard as enumeration.
  IsomorphismCount count_isomorphism_types(std::size_t a, std::size_t k, std::size_t n);

}  // namespace sop

#endif  // SOP_GENERIC_HPP
