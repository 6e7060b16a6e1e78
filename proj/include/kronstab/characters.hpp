// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <vector>

#include "kronstab/bigint.hpp"
#include "kronstab/config.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Conjugacy class of S_n labelled by cycle type.
struct CycleType {
  Partition shape;
  BigInt z;           // centralizer order
  BigInt class_size;  // n! / z
  bool operator==(const CycleType&) const = default;
};

/// z_mu = prod_i i^{m_i} m_i!
BigInt centralizer_order(const Partition& mu);

/// Every class of S_n in revlex order. Refuses n above cfg.rank_cap.
std::vector<CycleType> cycle_types(int n, const Config& cfg = default_config());

/// chi_lambda(mu) by Murnaghan-Nakayama, consuming the largest cycle first
/// with a memo local to the call.
BigInt mn_character(const Partition& lambda, const Partition& mu);

/// chi_lambda(mu) as the coefficient of x^{lambda+delta} in
/// a_delta * p_mu, expanded in length(lambda) variables. Slow; kept as an
/// oracle for mn_character.
BigInt frobenius_character(const Partition& lambda, const Partition& mu);

/// Full character table of S_n. Rows and classes are both in revlex order.
class CharacterTable {
 public:
  CharacterTable() = default;
  CharacterTable(int n, std::vector<CycleType> classes, std::vector<Partition> shapes,
                 std::vector<std::vector<BigInt>> rows);

  int n() const noexcept { return n_; }
  const std::vector<CycleType>& classes() const noexcept { return classes_; }
  const std::vector<Partition>& shapes() const noexcept { return shapes_; }
  const std::vector<std::vector<BigInt>>& rows() const noexcept { return rows_; }

  /// Row of chi_lambda across classes; throws PreconditionError for a
  /// partition of the wrong size.
  const std::vector<BigInt>& row(const Partition& lambda) const;
  std::size_t class_index(const Partition& mu) const;
  const BigInt& value(const Partition& lambda, const Partition& mu) const;

  bool operator==(const CharacterTable&) const = default;

 private:
  int n_ = 0;
  std::vector<CycleType> classes_;
  std::vector<Partition> shapes_;
  std::vector<std::vector<BigInt>> rows_;
};

/// Table served from the on-disk cache when a valid file is present,
/// otherwise computed and written atomically (unless cfg.use_cache is off).
CharacterTable character_table(int n, const Config& cfg = default_config());

/// Computes the table without touching the cache.
CharacterTable compute_character_table(int n, const Config& cfg = default_config());

/// On-demand row mode: chi_lambda over every class of S_|lambda| (revlex)
/// without building the table.
std::vector<BigInt> character_row(const Partition& lambda, const Config& cfg = default_config());

namespace cache {

std::filesystem::path table_path(const std::filesystem::path& dir, int n);

/// Returns nullopt (after a warning) when the file is missing, has the wrong
/// header, or fails validation.
std::optional<CharacterTable> read_table(const std::filesystem::path& file, int n,
                                         const Config& cfg);

/// Writes to a temporary sibling then renames over `file`.
void write_table(const std::filesystem::path& file, const CharacterTable& table);

}  // namespace cache

}  // namespace kronstab
