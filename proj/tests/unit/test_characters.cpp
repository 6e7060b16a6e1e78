// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include <unistd.h>

#include "kronstab/characters.hpp"
#include "kronstab/errors.hpp"
#include "../oracles.hpp"

using namespace kronstab;
namespace fs = std::filesystem;

namespace {

fs::path fresh_dir(const std::string& tag) {
  const auto dir = fs::temp_directory_path() / ("kronstab-test-" + tag + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

Config no_cache() {
  Config cfg;
  cfg.use_cache = false;
  return cfg;
}

}  // namespace

TEST_CASE("centralizer_order") {
  CHECK(centralizer_order({1, 1, 1}) == 6);
  CHECK(centralizer_order({3}) == 3);
  CHECK(centralizer_order({2, 1}) == 2);
  CHECK(centralizer_order({}) == 1);
  CHECK(centralizer_order({2, 2, 1}) == 8);
}

TEST_CASE("cycle_types") {
  const auto c3 = cycle_types(3);
  REQUIRE(c3.size() == 3);
  CHECK(c3[0].shape == Partition{3});
  CHECK(c3[1].shape == Partition{2, 1});
  CHECK(c3[2].shape == Partition{1, 1, 1});
  CHECK(c3[0].z == 3);
  CHECK(c3[1].z == 2);
  CHECK(c3[2].z == 6);

  const auto c0 = cycle_types(0);
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].shape.empty());
  CHECK(c0[0].z == 1);

  for (int n = 0; n <= 7; ++n) {
    const auto enumerated = oracle::class_sizes_by_enumeration(n);
    const auto types = cycle_types(n);
    CHECK(types.size() == enumerated.size());
    BigInt total = 0;
    for (const auto& t : types) {
      CHECK(t.z * t.class_size == factorial(n));
      CHECK(t.class_size == enumerated.at(t.shape));
      total += t.class_size;
    }
    CHECK(total == factorial(n));
  }

  Config capped;
  capped.rank_cap = 5;
  CHECK_THROWS_AS(cycle_types(6, capped), RefusalError);
}

TEST_CASE("mn_character values") {
  CHECK(mn_character({2, 1}, {3}) == -1);
  CHECK(mn_character({3, 1}, {2, 2}) == -1);
  CHECK(mn_character({}, {}) == 1);
  for (int n = 1; n <= 8; ++n) {
    for (const auto& mu : partitions_of(n)) CHECK(mn_character({n}, mu) == 1);
  }
  CHECK_THROWS_AS(mn_character({2, 1}, {2}), PreconditionError);
}

TEST_CASE("frobenius_character values") {
  CHECK(frobenius_character({2, 1}, {1, 1, 1}) == 2);
  CHECK(frobenius_character({3, 1}, {4}) == -1);
  for (int n = 1; n <= 7; ++n) {
    const Partition sign(std::vector<int>(n, 1));
    CHECK(frobenius_character(sign, {n}) == (n % 2 ? 1 : -1));
  }
  CHECK_THROWS_AS(frobenius_character({2, 1}, {2}), PreconditionError);
}

TEST_CASE("Murnaghan-Nakayama agrees with Frobenius and with Jacobi-Trudi") {
  for (int n = 0; n <= 8; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& lambda : ps) {
      for (const auto& mu : ps) {
        const BigInt mn = mn_character(lambda, mu);
        CHECK(mn == frobenius_character(lambda, mu));
        if (n <= 7) CHECK(mn == oracle::young_character(lambda, mu));
      }
    }
  }
}

TEST_CASE("S_3 table") {
  const auto t = character_table(3, no_cache());
  CHECK(t.rows() == std::vector<std::vector<BigInt>>{{1, 1, 1}, {-1, 0, 2}, {1, -1, 1}});
  const auto t0 = character_table(0, no_cache());
  REQUIRE(t0.rows().size() == 1);
  CHECK(t0.rows()[0] == std::vector<BigInt>{1});
  CHECK(t.value({2, 1}, {3}) == -1);
  CHECK(t.class_index({1, 1, 1}) == 2);
}

TEST_CASE("orthogonality and table invariants") {
  for (int n = 0; n <= 10; ++n) {
    const auto t = character_table(n, no_cache());
    const auto& cls = t.classes();
    REQUIRE(t.rows().size() == cls.size());
    REQUIRE(t.shapes() == partitions_of(n));
    for (std::size_t a = 0; a < t.rows().size(); ++a) {
      CHECK(t.rows()[a].back() == sn_dim(t.shapes()[a]));
      for (std::size_t b = a; b < t.rows().size(); ++b) {
        Rational s = 0;
        for (std::size_t i = 0; i < cls.size(); ++i) {
          Rational term(t.rows()[a][i] * t.rows()[b][i], cls[i].z);
          term.canonicalize();
          s += term;
        }
        CHECK(s == (a == b ? 1 : 0));
      }
    }
    if (n > 8) continue;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i; j < cls.size(); ++j) {
        BigInt s = 0;
        for (const auto& row : t.rows()) s += row[i] * row[j];
        CHECK(s == (i == j ? cls[i].z : BigInt(0)));
      }
    }
    for (std::size_t a = 0; a < t.rows().size(); ++a) {
      const auto& conj_row = t.row(conjugate(t.shapes()[a]));
      for (std::size_t i = 0; i < cls.size(); ++i) {
        const int sign = (n - cls[i].shape.length()) % 2 ? -1 : 1;
        CHECK(conj_row[i] == sign * t.rows()[a][i]);
      }
    }
  }
}

TEST_CASE("character_row matches the table") {
  const auto t = character_table(9, no_cache());
  for (const auto& lambda : t.shapes()) CHECK(character_row(lambda, no_cache()) == t.row(lambda));
}

TEST_CASE("table is identical across worker counts") {
  Config one = no_cache();
  one.threads = 1;
  Config four = no_cache();
  four.threads = 4;
  for (int n : {6, 11, 14}) CHECK(compute_character_table(n, one) == compute_character_table(n, four));
}

TEST_CASE("cache round trip") {
  const auto dir = fresh_dir("cache");
  Config cfg;
  cfg.cache_dir = dir;
  std::vector<std::string> warnings;
  cfg.warn = [&](const std::string& w) { warnings.push_back(w); };

  const auto cold = character_table(8, cfg);
  const auto file = cache::table_path(dir, 8);
  REQUIRE(fs::exists(file));
  const auto warm = character_table(8, cfg);
  CHECK(cold == warm);
  CHECK(warnings.empty());

  const auto read = cache::read_table(file, 8, cfg);
  REQUIRE(read.has_value());
  CHECK(*read == cold);

  SUBCASE("corrupt file is ignored with a warning") {
    {
      std::ofstream out(file, std::ios::trunc);
      out << "{\"format\":\"kron-stab-chars\",\"version\":1,\"n\":8,\"class_order\":\"revlex\"}\n"
          << "not json\n";
    }
    const auto again = character_table(8, cfg);
    CHECK(again == cold);
    CHECK(!warnings.empty());
    CHECK(cache::read_table(file, 8, cfg).has_value());
  }

  SUBCASE("wrong header is rejected") {
    {
      std::ofstream out(file, std::ios::trunc);
      out << "{\"format\":\"kron-stab-chars\",\"version\":1,\"n\":7,\"class_order\":\"revlex\"}\n";
    }
    CHECK_FALSE(cache::read_table(file, 8, cfg).has_value());
    CHECK(!warnings.empty());
  }

  SUBCASE("truncated file is rejected") {
    std::string text;
    {
      std::ifstream in(file);
      text.assign(std::istreambuf_iterator<char>(in), {});
    }
    {
      std::ofstream out(file, std::ios::trunc);
      out << text.substr(0, text.size() / 2);
    }
    CHECK_FALSE(cache::read_table(file, 8, cfg).has_value());
  }

  fs::remove_all(dir);
}
