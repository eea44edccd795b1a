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

#ifndef SOP_TESTS_HELPERS_HPP
#define SOP_TESTS_HELPERS_HPP

#include <string>
#include <string_view>

#include "sop/core.hpp"

namespace sop::testing {

  inline Presentation P(std::string_view text) {
    return parse_presentation(text);
  }

  inline Word W(Presentation const& p, std::string_view w) {
    return parse_word(w, p.alphabet());
  }

  inline std::string S(Presentation const& p, WordView w) {
    return format_word(w, p.alphabet());
  }

  inline Presentation const P1 = P("generators: a b c d\nrelation: a b = c d\n");
  inline Presentation const P2 = P("generators: a b\nrelation: a b a b = b a b a\n");
  inline Presentation const P3 = P("generators: a b c d e\nrelation: a b c d e = e d c b a\n");
  inline Presentation const P3x =
      P("generators: a b c d e x\nrelation: a b c d e = e d c b a\n");
  inline Presentation const P4 = P("generators: a b c\nrelation: c = a b\n");
  inline Presentation const P5 = P("generators: a b c d e\nrelation: a b c = a d e\n");

}  // namespace sop::testing

#endif  // SOP_TESTS_HELPERS_HPP
