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

#include "sop/cancel.hpp"

#include "sop/error.hpp"
#include "sop/pieces.hpp"

namespace sop {

  namespace {

    void require_c4(Presentation const& p) {
      PieceTable t(p);
      if (auto off = c_offender(t, 4)) {
        std::string dec;
        for (auto const& piece : off->decomposition) {
          dec += dec.empty() ? "" : " . ";
          dec += "(" + format_word(piece, p.alphabet()) + ")";
        }
        throw PreconditionError("cancellativity requires a C(4) presentation: relation word "
                                + format_word(off->relation_word, p.alphabet())
                                + " = " + (dec.empty() ? std::string("1") : dec));
      }
    }

    bool offends(Relation const& r) {
      return !r.lhs.empty() && !r.rhs.empty() && r.lhs != r.rhs && r.lhs[0] == r.rhs[0];
    }

  }  // namespace

  SideCancellativity left_criterion(Presentation const& p) {
    // Closure relations come sorted, so the first hit is the least.
    Presentation const closed = equivalence_closure(p);
    for (auto const& r : closed.relations()) {
      if (offends(r)) {
        return {false, r};
      }
    }
    return {};
  }

  SideCancellativity right_criterion(Presentation const& p) {
    auto res = left_criterion(reverse_presentation(p));
    if (res.witness) {
      res.witness = Relation{reversed(res.witness->lhs), reversed(res.witness->rhs)};
    }
    return res;
  }

  bool strong_left_criterion(Presentation const& p) {
    for (auto const& r : p.relations()) {
      if (!r.lhs.empty() && !r.rhs.empty() && r.lhs[0] == r.rhs[0]) {
        return false;
      }
    }
    return true;
  }

  SideCancellativity is_left_cancellative(Presentation const& p) {
    require_c4(p);
    return left_criterion(p);
  }

  SideCancellativity is_right_cancellative(Presentation const& p) {
    require_c4(p);
    return right_criterion(p);
  }

  CancellativityReport cancellativity_report(Presentation const& p) {
    require_c4(p);
    auto                 l = left_criterion(p);
    auto                 r = right_criterion(p);
    CancellativityReport out;
    out.left          = l.holds;
    out.right         = r.holds;
    out.cancellative  = l.holds && r.holds;
    out.left_witness  = l.witness;
    out.right_witness = r.witness;
    return out;
  }

}  // namespace sop
