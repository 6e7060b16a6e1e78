// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/characters.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <unistd.h>

#include <json.hpp>

#include "kronstab/errors.hpp"
#include "kronstab/kernels.hpp"
#include "rim_hooks.hpp"

namespace kronstab {

namespace {

void check_cap(int n, const Config& cfg) {
  if (n < 0) throw PreconditionError("rank must be nonnegative");
  if (n > cfg.rank_cap) {
    throw RefusalError("rank " + std::to_string(n) + " exceeds the rank cap " +
                       std::to_string(cfg.rank_cap) + " (raise it with --rank-cap)");
  }
}

void check_same_size(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) {
    throw PreconditionError("character size mismatch: |" + lambda.to_string() + "| = " +
                            std::to_string(lambda.size()) + " but |" + mu.to_string() +
                            "| = " + std::to_string(mu.size()));
  }
}

}  // namespace

BigInt centralizer_order(const Partition& mu) {
  BigInt z = 1;
  const auto& parts = mu.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(parts[i]), j - i);
    z *= pow * factorial(static_cast<unsigned>(j - i));
    i = j;
  }
  return z;
}

std::vector<CycleType> cycle_types(int n, const Config& cfg) {
  check_cap(n, cfg);
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  std::vector<CycleType> out;
  for (auto& shape : partitions_of(n)) {
    BigInt z = centralizer_order(shape);
    BigInt size = n_fact / z;
    out.push_back({std::move(shape), std::move(z), std::move(size)});
  }
  return out;
}

BigInt mn_character(const Partition& lambda, const Partition& mu) {
  check_same_size(lambda, mu);
  // Memo on (remaining shape, number of cycles already consumed).
  std::map<std::pair<std::vector<int>, std::size_t>, BigInt> memo;
  const auto& cycles = mu.parts();
  auto rec = [&](auto&& self, const std::vector<int>& shape, std::size_t used) -> BigInt {
    if (used == cycles.size()) return 1;
    auto key = std::make_pair(shape, used);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt total = 0;
    detail::remove_rim_hooks(shape, cycles[used], [&](const std::vector<int>& next, int sign) {
      BigInt v = self(self, next, used + 1);
      if (sign > 0) {
        total += v;
      } else {
        total -= v;
      }
    });
    memo.emplace(std::move(key), total);
    return total;
  };
  return rec(rec, lambda.parts(), 0);
}

BigInt frobenius_character(const Partition& lambda, const Partition& mu) {
  check_same_size(lambda, mu);
  const int vars = lambda.length();
  if (vars == 0) return 1;
  // Target exponent lambda + delta, delta = (vars-1, ..., 0).
  std::vector<int> target(vars);
  for (int i = 0; i < vars; ++i) target[i] = lambda[i] + (vars - 1 - i);

  // Power-sum product, truncated to exponents that can still reach the
  // target after multiplying by a monomial of the alternant.
  std::map<std::vector<int>, BigInt> poly;
  poly.emplace(std::vector<int>(vars, 0), 1);
  for (int cycle : mu.parts()) {
    std::map<std::vector<int>, BigInt> next;
    for (const auto& [exp, coeff] : poly) {
      for (int i = 0; i < vars; ++i) {
        if (exp[i] + cycle > target[i]) continue;
        auto e = exp;
        e[i] += cycle;
        next[e] += coeff;
      }
    }
    poly = std::move(next);
  }

  // Sum over permutations sigma of sign(sigma) * [x^{target - sigma(delta)}].
  std::vector<int> perm(vars);
  std::iota(perm.begin(), perm.end(), 0);
  BigInt total = 0;
  std::vector<int> want(vars);
  do {
    bool ok = true;
    for (int i = 0; i < vars && ok; ++i) {
      want[i] = target[i] - (vars - 1 - perm[i]);
      ok = want[i] >= 0;
    }
    if (!ok) continue;
    auto it = poly.find(want);
    if (it == poly.end()) continue;
    int inversions = 0;
    for (int i = 0; i < vars; ++i) {
      for (int j = i + 1; j < vars; ++j) inversions += perm[i] > perm[j];
    }
    if (inversions % 2) {
      total -= it->second;
    } else {
      total += it->second;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

CharacterTable::CharacterTable(int n, std::vector<CycleType> classes, std::vector<Partition> shapes,
                               std::vector<std::vector<BigInt>> rows)
    : n_(n), classes_(std::move(classes)), shapes_(std::move(shapes)), rows_(std::move(rows)) {}

namespace {

std::size_t revlex_index(const std::vector<Partition>& sorted_desc, const Partition& p) {
  auto it = std::lower_bound(sorted_desc.begin(), sorted_desc.end(), p,
                             [](const Partition& a, const Partition& b) { return a > b; });
  if (it == sorted_desc.end() || *it != p) {
    throw PreconditionError("partition " + p.to_string() + " is not in the table");
  }
  return static_cast<std::size_t>(it - sorted_desc.begin());
}

}  // namespace

const std::vector<BigInt>& CharacterTable::row(const Partition& lambda) const {
  return rows_[revlex_index(shapes_, lambda)];
}

std::size_t CharacterTable::class_index(const Partition& mu) const {
  // Class shapes and row shapes are the same list.
  return revlex_index(shapes_, mu);
}

const BigInt& CharacterTable::value(const Partition& lambda, const Partition& mu) const {
  return row(lambda)[class_index(mu)];
}

std::vector<BigInt> character_row(const Partition& lambda, const Config& cfg) {
  check_cap(lambda.size(), cfg);
  return kernels::character_rows({lambda}, lambda.size(), cfg).front();
}

CharacterTable compute_character_table(int n, const Config& cfg) {
  auto classes = cycle_types(n, cfg);
  auto shapes = partitions_of(n);
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(shapes.size());
  // Chunk rows so per-thread lattices stay small.
  constexpr std::size_t kChunk = 32;
  for (std::size_t start = 0; start < shapes.size(); start += kChunk) {
    std::vector<Partition> chunk(shapes.begin() + start,
                                 shapes.begin() + std::min(shapes.size(), start + kChunk));
    for (auto& r : kernels::character_rows(chunk, n, cfg)) rows.push_back(std::move(r));
  }
  return CharacterTable(n, std::move(classes), std::move(shapes), std::move(rows));
}

CharacterTable character_table(int n, const Config& cfg) {
  check_cap(n, cfg);
  if (!cfg.use_cache) return compute_character_table(n, cfg);
  const auto file = cache::table_path(resolve_cache_dir(cfg), n);
  if (auto cached = cache::read_table(file, n, cfg)) return std::move(*cached);
  auto table = compute_character_table(n, cfg);
  try {
    cache::write_table(file, table);
  } catch (const std::exception& e) {
    emit_warning(cfg, std::string("could not write character cache: ") + e.what());
  }
  return table;
}

namespace cache {

std::filesystem::path table_path(const std::filesystem::path& dir, int n) {
  char name[64];
  std::snprintf(name, sizeof(name), "sn_chars_v1_n%02d.jsonl", n);
  return dir / name;
}

std::optional<CharacterTable> read_table(const std::filesystem::path& file, int n,
                                         const Config& cfg) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  auto reject = [&](const std::string& why) -> std::optional<CharacterTable> {
    emit_warning(cfg, "ignoring corrupt character cache " + file.string() + ": " + why);
    return std::nullopt;
  };
  try {
    std::string line;
    if (!std::getline(in, line)) return reject("missing header");
    auto header = nlohmann::json::parse(line);
    if (header.value("format", "") != "kron-stab-chars" || header.value("version", 0) != 1 ||
        header.value("n", -1) != n || header.value("class_order", "") != "revlex") {
      return reject("header mismatch");
    }
    auto shapes = partitions_of(n);
    std::vector<std::vector<BigInt>> rows;
    rows.reserve(shapes.size());
    for (const auto& shape : shapes) {
      if (!std::getline(in, line)) return reject("truncated");
      auto obj = nlohmann::json::parse(line);
      if (Partition(obj.at("lambda").get<std::vector<int>>()) != shape) {
        return reject("row order mismatch at " + shape.to_string());
      }
      const auto& values = obj.at("values");
      if (!values.is_array() || values.size() != shapes.size()) {
        return reject("row " + shape.to_string() + " has the wrong length");
      }
      std::vector<BigInt> row;
      row.reserve(values.size());
      for (const auto& v : values) row.push_back(parse_bigint(v.get<std::string>()));
      rows.push_back(std::move(row));
    }
    while (std::getline(in, line)) {
      if (!line.empty()) return reject("trailing data");
    }
    return CharacterTable(n, cycle_types(n, cfg), std::move(shapes), std::move(rows));
  } catch (const RefusalError&) {
    throw;
  } catch (const std::exception& e) {
    return reject(e.what());
  }
}

void write_table(const std::filesystem::path& file, const CharacterTable& table) {
  std::filesystem::create_directories(file.parent_path());
  std::random_device rd;
  auto tmp = file;
  tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(rd());
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string());
    nlohmann::ordered_json header = {{"format", "kron-stab-chars"},
                             {"version", 1},
                             {"n", table.n()},
                             {"class_order", "revlex"}};
    out << header.dump() << '\n';
    for (std::size_t r = 0; r < table.shapes().size(); ++r) {
      nlohmann::json values = nlohmann::json::array();
      for (const auto& v : table.rows()[r]) values.push_back(to_decimal(v));
      nlohmann::ordered_json row = {{"lambda", table.shapes()[r].parts()}, {"values", std::move(values)}};
      out << row.dump() << '\n';
    }
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, file, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw Error("rename to " + file.string() + " failed: " + ec.message());
  }
}

}  // namespace cache

}  // namespace kronstab
