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

#include "sop/sop.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include <json.hpp>

#include "sop/cancel.hpp"
#include "sop/canonical.hpp"
#include "sop/core.hpp"
#include "sop/error.hpp"
#include "sop/generic.hpp"
#include "sop/pieces.hpp"
#include "sop/wordproblem.hpp"

struct sop_presentation {
  sop::Presentation value;
};

namespace {

  using nlohmann::json;

  thread_local std::string last_error;

  sop_status fail(sop_status s, std::string msg) {
    last_error = std::move(msg);
    return s;
  }

  template <typename F>
  sop_status guarded(F&& f) noexcept {
    try {
      last_error.clear();
      return f();
    } catch (sop::ParseError const& e) {
      return fail(SOP_ERR_PARSE, e.what());
    } catch (sop::PreconditionError const& e) {
      return fail(SOP_ERR_PRECONDITION, e.what());
    } catch (sop::InvalidArgument const& e) {
      return fail(SOP_ERR_INVALID_ARGUMENT, e.what());
    } catch (std::bad_alloc const&) {
      return fail(SOP_ERR_INTERNAL, "out of memory");
    } catch (std::exception const& e) {
      return fail(SOP_ERR_INTERNAL, e.what());
    } catch (...) {
      return fail(SOP_ERR_INTERNAL, "unknown error");
    }
  }

  char* dup(std::string const& s) {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
      throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
  }

  void emit(char** out, json const& j) {
    if (out != nullptr) {
      *out = dup(j.dump());
    }
  }

  void require(void const* ptr, char const* what) {
    if (ptr == nullptr) {
      throw sop::InvalidArgument(std::string(what) + " must not be null");
    }
  }

  json degree_json(sop::OverlapDegree d) {
    return d.is_unbounded() ? json("unbounded") : json(d.value());
  }

  json words_json(std::vector<sop::Word> const& ws, sop::Alphabet const& a) {
    json out = json::array();
    for (auto const& w : ws) {
      out.push_back(sop::format_word(w, a));
    }
    return out;
  }

  json relation_json(std::optional<sop::Relation> const& r, sop::Alphabet const& a) {
    if (!r) {
      return nullptr;
    }
    return json::array({sop::format_word(r->lhs, a), sop::format_word(r->rhs, a)});
  }

}  // namespace

extern "C" {

const char* sop_version(void) {
  return "1.0.0";
}

const char* sop_last_error(void) {
  return last_error.c_str();
}

void sop_string_free(char* s) {
  std::free(s);
}

sop_status sop_parse(const char* text, sop_presentation** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new sop_presentation{sop::parse_presentation(std::string_view(text))};
    return SOP_OK;
  });
}

sop_status sop_load(const char* path, sop_presentation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    if (!std::ifstream(path)) {
      return fail(SOP_ERR_IO, std::string("cannot open '") + path + "'");
    }
    *out = new sop_presentation{sop::load_presentation(path)};
    return SOP_OK;
  });
}

void sop_free(sop_presentation* p) {
  delete p;
}

sop_status sop_serialize(const sop_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(out, "out");
    *out = dup(sop::serialize_presentation(p->value));
    return SOP_OK;
  });
}

sop_status sop_check(const sop_presentation* p, uint32_t n, int strong, char** out) {
  return guarded([&] {
    require(p, "presentation");
    if (n == 0) {
      throw sop::InvalidArgument("condition index must be positive");
    }
    auto const&     a = p->value.alphabet();
    sop::PieceTable t(p->value);
    bool const      repeated = sop::has_repeated_relation_words(p->value);
    auto const      off      = sop::c_offender(t, n);
    bool const      holds    = !off && !(strong && repeated);
    json            j;
    j["condition"]               = std::string(strong ? "strong-c" : "c") + std::to_string(n);
    j["n"]                       = n;
    j["strong"]                  = strong != 0;
    j["holds"]                   = holds;
    j["degree"]                  = degree_json(sop::small_overlap_degree(t));
    j["repeated_relation_words"] = repeated;
    if (off) {
      j["offender"] = {{"relation_word", sop::format_word(off->relation_word, a)},
                       {"decomposition", words_json(off->decomposition, a)}};
    } else {
      j["offender"] = nullptr;
    }
    emit(out, j);
    return holds ? SOP_OK : SOP_FALSE;
  });
}

sop_status sop_pieces(const sop_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    auto const&     a = p->value.alphabet();
    sop::PieceTable t(p->value);
    auto const      pieces = t.pieces();
    json            j;
    j["pieces"]           = words_json(pieces, a);
    j["count"]            = pieces.size();
    j["max_piece_length"] = t.max_piece_length();
    j["degree"]           = degree_json(sop::small_overlap_degree(t));
    json fs               = json::array();
    for (auto const& r : t.relation_words()) {
      json f = {{"relation_word", sop::format_word(r, a)}};
      try {
        auto xyz = sop::xyz_factorization(r, t);
        f["x"]   = sop::format_word(xyz.x, a);
        f["y"]   = sop::format_word(xyz.y, a);
        f["z"]   = sop::format_word(xyz.z, a);
      } catch (sop::PreconditionError const&) {
        f["x"] = f["y"] = f["z"] = nullptr;
      }
      fs.push_back(f);
    }
    j["factorizations"] = fs;
    json cs             = json::array();
    for (auto const& c : sop::complement_classes(p->value)) {
      cs.push_back(words_json(c.members, a));
    }
    j["complement_classes"] = cs;
    emit(out, j);
    return SOP_OK;
  });
}

sop_status sop_equivalent(const sop_presentation* p, const char* u, const char* v, char** out) {
  return guarded([&] {
    require(p, "presentation");
    require(u, "u");
    require(v, "v");
    auto const&           a  = p->value.alphabet();
    sop::Word const       wu = sop::parse_word(u, a);
    sop::Word const       wv = sop::parse_word(v, a);
    sop::EquivalenceTrace trace;
    bool const            eq = sop::words_equivalent(wu, wv, p->value, trace);
    json                  steps = json::array();
    for (auto s : trace.steps) {
      steps.push_back(sop::to_string(s));
    }
    emit(out, {{"u", sop::format_word(wu, a)},
               {"v", sop::format_word(wv, a)},
               {"equivalent", eq},
               {"trace", steps}});
    return eq ? SOP_OK : SOP_FALSE;
  });
}

sop_status sop_canonicalize(const sop_presentation* p, sop_presentation** out, char** json_out) {
  return guarded([&] {
    require(p, "presentation");
    auto        c = sop::canonicalize(p->value);
    auto const& a = c.presentation.alphabet();
    json        rels = json::array();
    for (auto const& r : c.presentation.relations()) {
      rels.push_back({sop::format_word(r.lhs, a), sop::format_word(r.rhs, a)});
    }
    json elim = json::array();
    for (auto const& s : c.provenance.eliminated()) {
      std::string w;
      for (auto const& tok : s.replacement) {
        w += (w.empty() ? "" : " ") + tok;
      }
      elim.push_back({{"generator", s.generator}, {"replacement", w.empty() ? "1" : w}});
    }
    json renamed = json::object();
    for (auto const& [from, to] : c.provenance.renamed()) {
      renamed[from] = to;
    }
    json j = {{"presentation", sop::serialize_presentation(c.presentation)},
              {"generators", a.symbols()},
              {"relations", rels},
              {"eliminated", elim},
              {"renamed", renamed}};
    if (out != nullptr) {
      *out = new sop_presentation{std::move(c.presentation)};
    }
    emit(json_out, j);
    return SOP_OK;
  });
}

sop_status sop_isomorphic(const sop_presentation* p, const sop_presentation* q, char** out) {
  return guarded([&] {
    require(p, "first presentation");
    require(q, "second presentation");
    auto const cp = sop::serialize_presentation(sop::canonicalize(p->value).presentation);
    auto const cq = sop::serialize_presentation(sop::canonicalize(q->value).presentation);
    bool const iso = cp == cq;
    emit(out, {{"isomorphic", iso}, {"canonical", {cp, cq}}});
    return iso ? SOP_OK : SOP_FALSE;
  });
}

sop_status sop_cancellativity(const sop_presentation* p, char** out) {
  return guarded([&] {
    require(p, "presentation");
    auto const  r = sop::cancellativity_report(p->value);
    auto const& a = p->value.alphabet();
    emit(out, {{"left", r.left},
               {"right", r.right},
               {"cancellative", r.cancellative},
               {"left_witness", relation_json(r.left_witness, a)},
               {"right_witness", relation_json(r.right_witness, a)}});
    return r.cancellative ? SOP_OK : SOP_FALSE;
  });
}

sop_status sop_experiment(const sop_experiment_config* cfg,
                          const char*                  property,
                          sop_format                   format,
                          char**                       out) {
  return guarded([&] {
    require(cfg, "config");
    require(property, "property");
    require(out, "out");
    auto prop = sop::parse_property(property);
    if (!prop) {
      throw sop::InvalidArgument(std::string("unknown property '") + property + "'");
    }
    if (cfg->mode != SOP_LENGTH_SUM && cfg->mode != SOP_LENGTH_MAX) {
      throw sop::InvalidArgument("unknown length mode");
    }
    sop::SampleConfig c;
    c.alphabet_size  = cfg->alphabet_size;
    c.relation_count = cfg->relation_count;
    c.length         = cfg->length;
    c.mode           = cfg->mode == SOP_LENGTH_SUM ? sop::LengthMode::sum : sop::LengthMode::max;
    c.seed           = cfg->seed;
    c.trials         = cfg->trials;
    auto const e     = sop::estimate_proportion(c, *prop);
    if (format == SOP_FORMAT_CSV) {
      *out = dup(sop::csv_row(c, e));
      return SOP_OK;
    }
    emit(out, {{"property", e.property},
               {"a", c.alphabet_size},
               {"k", c.relation_count},
               {"n", c.length},
               {"mode", sop::to_string(c.mode)},
               {"seed", c.seed},
               {"trials", e.trials},
               {"hits", e.hits},
               {"estimate", e.estimate},
               {"ci95", e.ci95},
               {"flagged", e.flagged}});
    return SOP_OK;
  });
}

const char* sop_csv_header(void) {
  static std::string const header = sop::csv_header();
  return header.c_str();
}

sop_status sop_count(uint32_t a, uint32_t k, uint32_t n, char** out) {
  return guarded([&] {
    auto const c = sop::count_isomorphism_types(a, k, n);
    emit(out, {{"a", a},
               {"k", k},
               {"n", n},
               {"presentations", c.presentations},
               {"strong_c2", c.strong_c2},
               {"isomorphism_types", c.isomorphism_types}});
    return SOP_OK;
  });
}

sop_status sop_weak_composition_count(uint32_t s, uint32_t r, char** out) {
  return guarded([&] {
    require(out, "out");
    *out = dup(sop::weak_composition_count(s, r).str());
    return SOP_OK;
  });
}

}  // extern "C"
