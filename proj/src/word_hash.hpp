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

#ifndef SOP_SRC_WORD_HASH_HPP
#define SOP_SRC_WORD_HASH_HPP

#include <cstddef>
#include <cstdint>

#include "sop/core.hpp"

namespace sop {

  // FNV-1a over the letter indices.
  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept {
      std::uint64_t h = 14695981039346656037ull;
      for (Letter x : w) {
        h ^= x;
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
  };

}  // namespace sop

#endif  // SOP_SRC_WORD_HASH_HPP
