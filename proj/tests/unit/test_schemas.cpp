// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <sstream>

#include "kronstab/cli.hpp"
#include "../schema_check.hpp"

namespace {

nlohmann::json run_json(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), {"kron-stab", "--no-cache", "--json"});
  std::istringstream in(input);
  std::ostringstream out, err;
  REQUIRE(kronstab::cli::run(args, in, out, err) == 0);
  return nlohmann::json::parse(out.str());
}

const schema::Validator& validator() {
  static const schema::Validator v(KRONSTAB_SCHEMA_DIR);
  return v;
}

}  // namespace

TEST_CASE("sequence output validates") {
  const auto j = run_json({"seq", "--kind", "kron", "--base", "3,1", "3,1", "2,2", "--dmax", "3"});
  CHECK(validator().validate("sequence.schema.json", j).empty());
  auto bad = j;
  bad.erase("dmax");
  CHECK_FALSE(validator().validate("sequence.schema.json", bad).empty());
  bad = j;
  bad["kind"] = "other";
  CHECK_FALSE(validator().validate("sequence.schema.json", bad).empty());
  bad = j;
  bad["extra"] = 1;
  CHECK_FALSE(validator().validate("sequence.schema.json", bad).empty());
  bad = j;
  bad["base"][0] = nlohmann::json::array({0});
  CHECK_FALSE(validator().validate("sequence.schema.json", bad).empty());
}

TEST_CASE("big values are strings and still validate") {
  auto j = run_json({"seq", "--kind", "kron", "--base", "1", "1", "1", "--dmax", "1"});
  j["values"][1] = "123456789012345678901234567890";
  CHECK(validator().validate("sequence.schema.json", j).empty());
  j["values"][1] = "-5";
  CHECK_FALSE(validator().validate("sequence.schema.json", j).empty());
}

TEST_CASE("fit output validates") {
  const auto j = run_json({"fit"}, "1\n0\n2\n1\n3\n2\n4\n");
  CHECK(validator().validate("fit.schema.json", j).empty());
  auto bad = j;
  bad["quasi_polynomial"]["components"][0][0] = "1/0";
  CHECK_FALSE(validator().validate("fit.schema.json", bad).empty());
}

TEST_CASE("report output validates") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"stable-check", "--kind", "kron", "3", "3", "1,1,1", "--dmax", "3"},
           {"stable-check", "--kind", "kron", "1,1", "1,1", "2", "--dmax", "3", "--shift", "1", "1", "1"},
           {"stable-check", "--kind", "lr", "2,1", "1", "1,1"},
           {"stable-check", "--kind", "pleth", "1", "2,1", "2,1", "--dmax", "3"}}) {
    const auto j = run_json(args);
    const auto errors = validator().validate("report.schema.json", j);
    CHECK_MESSAGE(errors.empty(), j.dump());
  }
  auto bad = run_json({"stable-check", "--kind", "kron", "1", "1", "1", "--dmax", "2"});
  bad["verdict"] = nlohmann::json{{"type", "CertifiedUpTo"}};
  CHECK_FALSE(validator().validate("report.schema.json", bad).empty());
}
