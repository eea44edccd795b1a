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

// Cancellativity of C(4) monoids.  A C(4) presentation is left
// cancellative iff its equivalence closure has no relation (ar, as) with
// r != s; right cancellativity is the mirror statement.

#ifndef SOP_CANCEL_HPP
#define SOP_CANCEL_HPP

#include <optional>

#include "sop/core.hpp"

namespace sop {

  struct SideCancellativity {
    bool                    holds = true;
    std::optional<Relation> witness;  // (a r, a s) or (r a, s a)
  };

  struct CancellativityReport {
    bool                    left         = true;
    bool                    right        = true;
    bool                    cancellative = true;
    std::optional<Relation> left_witness;
    std::optional<Relation> right_witness;
  };

  // Both throw PreconditionError unless p is C(4).  The left witness is
  // the least offending closure relation (shortlex on lhs, then rhs); the
  // right witness is the mirror image of the left witness of the reverse.
  SideCancellativity is_left_cancellative(Presentation const& p);
  SideCancellativity is_right_cancellative(Presentation const& p);
  CancellativityReport cancellativity_report(Presentation const& p);

  // The criteria evaluated without checking C(4).
  SideCancellativity left_criterion(Presentation const& p);
  SideCancellativity right_criterion(Presentation const& p);

  // Strongly C(4) form: inspects the relations of p directly, without
  // closure.  Meaningful only when p is strongly C(4).
  bool strong_left_criterion(Presentation const& p);

}  // namespace sop

#endif  // SOP_CANCEL_HPP
