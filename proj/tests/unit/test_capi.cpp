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

// Exercises the shared library through the C interface only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "sop/sop.h"

using nlohmann::json;

namespace {

  struct Owned {
    sop_presentation* p = nullptr;
    ~Owned() {
      sop_free(p);
    }
  };

  std::string take(char* s) {
    std::string out = s != nullptr ? s : "";
    sop_string_free(s);
    return out;
  }

  char const* const p3x = "generators: a b c d e x\nrelation: a b c d e = e d c b a\n";
  char const* const p2  = "generators: a b\nrelation: a b a b = b a b a\n";
  char const* const p5  = "generators: a b c d e\nrelation: a b c = a d e\n";

}  // namespace

TEST_CASE("parse, serialize, errors") {
  Owned h;
  REQUIRE(sop_parse(p3x, &h.p) == SOP_OK);
  char* out = nullptr;
  REQUIRE(sop_serialize(h.p, &out) == SOP_OK);
  CHECK(take(out) == p3x);

  Owned bad;
  CHECK(sop_parse("generators: a\nrelation: a = b\n", &bad.p) == SOP_ERR_PARSE);
  CHECK(bad.p == nullptr);
  CHECK(std::string(sop_last_error()).find("line 2") != std::string::npos);
  CHECK(sop_load("/nonexistent/file.sop", &bad.p) == SOP_ERR_IO);
  CHECK(sop_parse(nullptr, &bad.p) == SOP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("check") {
  Owned h;
  REQUIRE(sop_parse(p2, &h.p) == SOP_OK);
  char* out = nullptr;
  CHECK(sop_check(h.p, 2, 0, &out) == SOP_OK);
  CHECK(json::parse(take(out))["holds"] == true);
  CHECK(sop_check(h.p, 3, 0, &out) == SOP_FALSE);
  auto j = json::parse(take(out));
  CHECK(j["degree"] == 2);
  CHECK(j["offender"]["relation_word"] == "a b a b");
  CHECK(j["offender"]["decomposition"].size() == 2);
  CHECK(sop_check(h.p, 0, 0, &out) == SOP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pieces") {
  Owned h;
  REQUIRE(sop_parse(p3x, &h.p) == SOP_OK);
  char* out = nullptr;
  REQUIRE(sop_pieces(h.p, &out) == SOP_OK);
  auto j = json::parse(take(out));
  CHECK(j["count"] == 6);
  CHECK(j["degree"] == 5);
  CHECK(j["factorizations"][0]["y"] == "b c d");
}

TEST_CASE("equivalent") {
  Owned h;
  REQUIRE(sop_parse(p3x, &h.p) == SOP_OK);
  char* out = nullptr;
  CHECK(sop_equivalent(h.p, "a b c d e x", "e d c b a x", &out) == SOP_OK);
  auto j = json::parse(take(out));
  CHECK(j["equivalent"] == true);
  CHECK(j["trace"][0] == "case3");
  CHECK(sop_equivalent(h.p, "a a b c d e", "a b c d e a", &out) == SOP_FALSE);
  take(out);
  CHECK(sop_equivalent(h.p, "a q", "a", &out) == SOP_ERR_PARSE);
  Owned h2;
  REQUIRE(sop_parse(p2, &h2.p) == SOP_OK);
  CHECK(sop_equivalent(h2.p, "a", "a", &out) == SOP_ERR_PRECONDITION);
}

TEST_CASE("canonicalize and isomorphism") {
  Owned p4, free2, canon;
  REQUIRE(sop_parse("generators: a b c\nrelation: c = a b\n", &p4.p) == SOP_OK);
  REQUIRE(sop_parse("generators: x y\n", &free2.p) == SOP_OK);
  char* out = nullptr;
  REQUIRE(sop_canonicalize(p4.p, &canon.p, &out) == SOP_OK);
  auto j = json::parse(take(out));
  CHECK(j["presentation"] == "generators: g0 g1\n");
  CHECK(j["eliminated"][0]["generator"] == "c");
  CHECK(j["eliminated"][0]["replacement"] == "a b");
  CHECK(j["renamed"]["a"] == "g0");
  REQUIRE(sop_serialize(canon.p, &out) == SOP_OK);
  CHECK(take(out) == "generators: g0 g1\n");
  CHECK(sop_isomorphic(p4.p, free2.p, &out) == SOP_OK);
  take(out);
  Owned h2;
  REQUIRE(sop_parse(p2, &h2.p) == SOP_OK);
  CHECK(sop_isomorphic(p4.p, h2.p, &out) == SOP_FALSE);
  take(out);
  Owned idem;
  REQUIRE(sop_parse("generators: a\nrelation: a a = a\n", &idem.p) == SOP_OK);
  CHECK(sop_isomorphic(p4.p, idem.p, &out) == SOP_ERR_PRECONDITION);
  CHECK(sop_canonicalize(idem.p, nullptr, nullptr) == SOP_ERR_PRECONDITION);
}

TEST_CASE("cancellativity") {
  Owned h;
  REQUIRE(sop_parse(p5, &h.p) == SOP_OK);
  char* out = nullptr;
  CHECK(sop_cancellativity(h.p, &out) == SOP_FALSE);
  auto j = json::parse(take(out));
  CHECK(j["left"] == false);
  CHECK(j["right"] == true);
  CHECK(j["left_witness"] == json::array({"a b c", "a d e"}));
  CHECK(j["right_witness"].is_null());
}

TEST_CASE("experiment, count, weak compositions") {
  sop_experiment_config cfg{2, 1, 20, SOP_LENGTH_SUM, 7, 200};
  char*                 out = nullptr;
  REQUIRE(sop_experiment(&cfg, "strong-c4", SOP_FORMAT_JSON, &out) == SOP_OK);
  auto j = json::parse(take(out));
  CHECK(j["trials"] == 200);
  REQUIRE(sop_experiment(&cfg, "strong-c4", SOP_FORMAT_CSV, &out) == SOP_OK);
  CHECK(take(out).rfind("strong-c4,2,1,20,sum,200,", 0) == 0);
  CHECK(sop_experiment(&cfg, "nope", SOP_FORMAT_JSON, &out) == SOP_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sop_csv_header()) == "property,a,k,n,mode,trials,hits,estimate,ci95,flagged");
  REQUIRE(sop_count(2, 1, 3, &out) == SOP_OK);
  CHECK(json::parse(take(out))["presentations"] == 32);
  CHECK(sop_count(2, 1, 40, &out) == SOP_ERR_INVALID_ARGUMENT);
  REQUIRE(sop_weak_composition_count(10, 4, &out) == SOP_OK);
  CHECK(take(out) == "286");
}
