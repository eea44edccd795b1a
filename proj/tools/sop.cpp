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

// Command-line front end.  Talks to the library only through sop.h.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sop/sop.h"

namespace {

  using nlohmann::json;

  enum Exit : int { exit_true = 0, exit_false = 1, exit_usage = 2, exit_precondition = 3 };

  int exit_code(sop_status s) {
    switch (s) {
      case SOP_OK:
        return exit_true;
      case SOP_FALSE:
        return exit_false;
      case SOP_ERR_PRECONDITION:
        return exit_precondition;
      default:
        return exit_usage;
    }
  }

  struct Handle {
    sop_presentation* p = nullptr;
    ~Handle() {
      sop_free(p);
    }
  };

  // Takes ownership of a C string from the library.
  std::string take(char* s) {
    std::string out = s != nullptr ? s : "";
    sop_string_free(s);
    return out;
  }

  bool is_error(sop_status s) {
    return s != SOP_OK && s != SOP_FALSE;
  }

  int report(sop_status s) {
    std::cerr << "sop: " << sop_last_error() << '\n';
    return exit_code(s);
  }

  std::string degree_text(json const& d) {
    return d.is_string() ? d.get<std::string>() : std::to_string(d.get<std::size_t>());
  }

  std::string yes_no(bool b) {
    return b ? "yes" : "no";
  }

  struct Options {
    bool        as_json = false;
    std::string file, file2, word1, word2, condition = "c4", out, csv;
    uint32_t    a = 2, k = 1, n = 0;
    std::string mode = "sum";
    uint64_t    trials = 1000;
    uint64_t    seed   = 0;
    std::vector<std::string> properties;
  };

  int load(std::string const& path, Handle& h) {
    auto s = sop_load(path.c_str(), &h.p);
    return is_error(s) ? report(s) : -1;
  }

  int cmd_check(Options const& o) {
    std::string c = o.condition;
    bool        strong = false;
    if (c.rfind("strong-", 0) == 0) {
      strong = true;
      c      = c.substr(7);
    }
    if (c.size() < 2 || c[0] != 'c' || c.find_first_not_of("0123456789", 1) != std::string::npos) {
      std::cerr << "sop: condition must be c<n> or strong-c<n>\n";
      return exit_usage;
    }
    unsigned long n = 0;
    try {
      n = std::stoul(c.substr(1));
    } catch (std::exception const&) {
      n = 0;
    }
    if (n == 0 || n > UINT32_MAX) {
      std::cerr << "sop: condition index must be a positive integer\n";
      return exit_usage;
    }
    Handle h;
    if (int rc = load(o.file, h); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_check(h.p, static_cast<uint32_t>(n), strong, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
      return exit_code(s);
    }
    auto j = json::parse(text);
    std::cout << (strong ? "strongly C(" : "C(") << n << "): "
              << (j["holds"].get<bool>() ? "holds" : "fails") << '\n';
    std::cout << "degree: " << degree_text(j["degree"]) << '\n';
    if (strong && j["repeated_relation_words"].get<bool>()) {
      std::cout << "repeated relation words: yes\n";
    }
    if (!j["offender"].is_null()) {
      std::cout << "offender: " << j["offender"]["relation_word"].get<std::string>() << " =";
      for (auto const& piece : j["offender"]["decomposition"]) {
        std::cout << " (" << piece.get<std::string>() << ")";
      }
      std::cout << '\n';
    }
    return exit_code(s);
  }

  int cmd_pieces(Options const& o) {
    Handle h;
    if (int rc = load(o.file, h); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_pieces(h.p, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
      return exit_true;
    }
    auto j = json::parse(text);
    std::cout << "pieces (" << j["count"].get<std::size_t>() << "):";
    for (auto const& w : j["pieces"]) {
      std::cout << "  " << w.get<std::string>();
    }
    std::cout << "\ndegree: " << degree_text(j["degree"]) << '\n';
    for (auto const& f : j["factorizations"]) {
      std::cout << "relation word " << f["relation_word"].get<std::string>() << ": ";
      if (f["x"].is_null()) {
        std::cout << "no XYZ factorization\n";
      } else {
        std::cout << "X = " << f["x"].get<std::string>() << ", Y = " << f["y"].get<std::string>()
                  << ", Z = " << f["z"].get<std::string>() << '\n';
      }
    }
    for (auto const& c : j["complement_classes"]) {
      std::cout << "class:";
      for (auto const& w : c) {
        std::cout << "  " << w.get<std::string>();
      }
      std::cout << '\n';
    }
    return exit_true;
  }

  int cmd_eq(Options const& o) {
    Handle h;
    if (int rc = load(o.file, h); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_equivalent(h.p, o.word1.c_str(), o.word2.c_str(), &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
      return exit_code(s);
    }
    auto j = json::parse(text);
    std::cout << (j["equivalent"].get<bool>() ? "equivalent" : "not equivalent") << '\n';
    std::cout << "trace:";
    for (auto const& step : j["trace"]) {
      std::cout << ' ' << step.get<std::string>();
    }
    std::cout << '\n';
    return exit_code(s);
  }

  int cmd_canon(Options const& o) {
    Handle h;
    if (int rc = load(o.file, h); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_canonicalize(h.p, nullptr, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    auto j    = json::parse(text);
    auto ser  = j["presentation"].get<std::string>();
    if (!o.out.empty()) {
      std::ofstream f(o.out, std::ios::binary);
      if (!(f << ser)) {
        std::cerr << "sop: cannot write '" << o.out << "'\n";
        return exit_usage;
      }
    }
    if (o.as_json) {
      std::cout << text << '\n';
    } else if (o.out.empty()) {
      std::cout << ser;
    } else {
      std::cout << "wrote " << o.out << '\n';
    }
    return exit_true;
  }

  int cmd_iso(Options const& o) {
    Handle h1, h2;
    if (int rc = load(o.file, h1); rc >= 0) {
      return rc;
    }
    if (int rc = load(o.file2, h2); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_isomorphic(h1.p, h2.p, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
    } else {
      std::cout << (s == SOP_OK ? "isomorphic" : "not isomorphic") << '\n';
    }
    return exit_code(s);
  }

  int cmd_cancel(Options const& o) {
    Handle h;
    if (int rc = load(o.file, h); rc >= 0) {
      return rc;
    }
    char* out = nullptr;
    auto  s   = sop_cancellativity(h.p, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
      return exit_code(s);
    }
    auto j    = json::parse(text);
    auto side = [&](char const* name, char const* flag, char const* wit) {
      std::cout << name << " cancellative: " << yes_no(j[flag].get<bool>());
      if (!j[wit].is_null()) {
        std::cout << " (witness " << j[wit][0].get<std::string>() << " = "
                  << j[wit][1].get<std::string>() << ")";
      }
      std::cout << '\n';
    };
    side("left", "left", "left_witness");
    side("right", "right", "right_witness");
    std::cout << "cancellative: " << yes_no(j["cancellative"].get<bool>()) << '\n';
    return exit_code(s);
  }

  int cmd_experiment(Options const& o) {
    sop_experiment_config cfg{};
    cfg.alphabet_size  = o.a;
    cfg.relation_count = o.k;
    cfg.length         = o.n;
    cfg.seed           = o.seed;
    cfg.trials         = o.trials;
    if (o.mode == "sum") {
      cfg.mode = SOP_LENGTH_SUM;
    } else if (o.mode == "max") {
      cfg.mode = SOP_LENGTH_MAX;
    } else {
      std::cerr << "sop: mode must be sum or max\n";
      return exit_usage;
    }
    std::vector<std::string> props = o.properties;
    if (props.empty()) {
      props = {"strong-c4", "left-cancellative", "right-cancellative", "cancellative"};
    }
    std::vector<json>        rows;
    std::vector<std::string> csv;
    for (auto const& prop : props) {
      char* out = nullptr;
      auto  s   = sop_experiment(&cfg, prop.c_str(), SOP_FORMAT_JSON, &out);
      if (is_error(s)) {
        return report(s);
      }
      rows.push_back(json::parse(take(out)));
      s = sop_experiment(&cfg, prop.c_str(), SOP_FORMAT_CSV, &out);
      if (is_error(s)) {
        return report(s);
      }
      csv.push_back(take(out));
    }
    if (!o.csv.empty()) {
      std::ostringstream body;
      body << sop_csv_header() << '\n';
      for (auto const& r : csv) {
        body << r << '\n';
      }
      if (o.csv == "-") {
        std::cout << body.str();
      } else {
        std::ofstream f(o.csv, std::ios::binary);
        if (!(f << body.str())) {
          std::cerr << "sop: cannot write '" << o.csv << "'\n";
          return exit_usage;
        }
      }
    }
    if (o.as_json) {
      std::cout << json{{"rows", rows}}.dump() << '\n';
    } else if (o.csv != "-") {
      std::cout << std::left << std::setw(20) << "property" << std::setw(10) << "hits"
                << std::setw(10) << "trials" << std::setw(12) << "estimate" << std::setw(12)
                << "ci95" << "flagged\n";
      for (auto const& r : rows) {
        std::cout << std::left << std::setw(20) << r["property"].get<std::string>()
                  << std::setw(10) << r["hits"].get<uint64_t>() << std::setw(10)
                  << r["trials"].get<uint64_t>() << std::setw(12) << std::fixed
                  << std::setprecision(4) << r["estimate"].get<double>() << std::setw(12)
                  << r["ci95"].get<double>() << r["flagged"].get<uint64_t>() << '\n';
      }
    }
    return exit_true;
  }

  int cmd_count(Options const& o) {
    char* out = nullptr;
    auto  s   = sop_count(o.a, o.k, o.n, &out);
    if (is_error(s)) {
      return report(s);
    }
    auto text = take(out);
    if (o.as_json) {
      std::cout << text << '\n';
      return exit_true;
    }
    auto j = json::parse(text);
    std::cout << "ordered presentations: " << j["presentations"].get<uint64_t>() << '\n'
              << "strongly C(2): " << j["strong_c2"].get<uint64_t>() << '\n'
              << "isomorphism types: " << j["isomorphism_types"].get<uint64_t>() << '\n';
    return exit_true;
  }

  std::optional<uint64_t> env_seed() {
    char const* s = std::getenv("SOP_SEED");
    if (s == nullptr || *s == '\0') {
      return uint64_t{0};
    }
    try {
      std::size_t used = 0;
      auto        v    = std::stoull(s, &used, 0);
      if (used != std::strlen(s)) {
        return std::nullopt;
      }
      return v;
    } catch (std::exception const&) {
      return std::nullopt;
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Small overlap monoid presentations"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sop_version()));

  Options o;
  app.add_flag("--json", o.as_json, "JSON output");

  auto seed = env_seed();
  if (!seed) {
    std::cerr << "sop: SOP_SEED must be an unsigned integer\n";
    return exit_usage;
  }
  o.seed = *seed;

  auto* check = app.add_subcommand("check", "Check C(n) or strongly C(n)");
  check->add_option("file", o.file, "Presentation file")->required();
  check->add_option("--condition", o.condition, "c<n> or strong-c<n>")->capture_default_str();

  auto* pieces = app.add_subcommand("pieces", "List pieces and XYZ factorizations");
  pieces->add_option("file", o.file, "Presentation file")->required();

  auto* eq = app.add_subcommand("eq", "Decide whether two words are equal (C(4))");
  eq->add_option("file", o.file, "Presentation file")->required();
  eq->add_option("word1", o.word1, "First word, tokens separated by spaces")->required();
  eq->add_option("word2", o.word2, "Second word")->required();

  auto* canon = app.add_subcommand("canon", "Canonical generator-minimal presentation (C(2))");
  canon->add_option("file", o.file, "Presentation file")->required();
  canon->add_option("--out", o.out, "Write the canonical presentation here");

  auto* iso = app.add_subcommand("iso", "Decide monoid isomorphism (C(2))");
  iso->add_option("file1", o.file, "First presentation")->required();
  iso->add_option("file2", o.file2, "Second presentation")->required();

  auto* cancel = app.add_subcommand("cancel", "Left/right cancellativity (C(4))");
  cancel->add_option("file", o.file, "Presentation file")->required();

  auto* exp = app.add_subcommand("experiment", "Monte Carlo proportion estimates");
  exp->add_option("--a", o.a, "Alphabet size")->check(CLI::PositiveNumber)->capture_default_str();
  exp->add_option("--k", o.k, "Number of relations")->check(CLI::PositiveNumber)->capture_default_str();
  exp->add_option("--n", o.n, "Length")->required();
  exp->add_option("--mode", o.mode, "sum or max")->capture_default_str();
  exp->add_option("--trials", o.trials, "Number of samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  exp->add_option("--seed", o.seed, "Seed (default $SOP_SEED or 0)");
  exp->add_option("--property", o.properties,
                  "strong-c4, left-cancellative, right-cancellative, cancellative (repeatable)");
  exp->add_option("--csv", o.csv, "Write CSV here ('-' for stdout)");

  auto* count = app.add_subcommand("count", "Exhaustive isomorphism-type count");
  count->add_option("--a", o.a, "Alphabet size")->check(CLI::PositiveNumber)->capture_default_str();
  count->add_option("--k", o.k, "Number of relations")->check(CLI::PositiveNumber)->capture_default_str();
  count->add_option("--n", o.n, "Sum of relation lengths")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForVersion const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  if (*check) {
    return cmd_check(o);
  }
  if (*pieces) {
    return cmd_pieces(o);
  }
  if (*eq) {
    return cmd_eq(o);
  }
  if (*canon) {
    return cmd_canon(o);
  }
  if (*iso) {
    return cmd_iso(o);
  }
  if (*cancel) {
    return cmd_cancel(o);
  }
  if (*exp) {
    return cmd_experiment(o);
  }
  return cmd_count(o);
}
