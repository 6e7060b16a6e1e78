// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "kronstab/bigint.hpp"

namespace kronstab {

/// A weakly decreasing sequence of positive integers. Stored without
/// trailing zeros, so every partition has exactly one representation.
class Partition {
 public:
  Partition() = default;

  /// Validates the parts. Trailing zeros are stripped; anything else that
  /// breaks the invariant throws PreconditionError.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }

  /// Part i (0-based), or 0 past the end.
  int operator[](std::size_t i) const noexcept {
    return i < parts_.size() ? parts_[i] : 0;
  }

  /// Canonical text: parts joined by commas, "-" for the empty partition.
  std::string to_string() const;

  bool operator==(const Partition& other) const noexcept {
    return parts_ == other.parts_;
  }
  /// Lexicographic on parts. Revlex (the canonical class order) is the
  /// reverse of this.
  std::strong_ordering operator<=>(const Partition& other) const noexcept {
    return parts_ <=> other.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct PartitionTriple {
  Partition first;
  Partition second;
  Partition third;

  bool operator==(const PartitionTriple&) const = default;
};

/// Parses `"-" | int ("," int)*`. Errors name the 1-based token position.
Partition parse_partition(std::string_view text);

/// Componentwise d*alpha + lambda.
Partition scale_add(const Partition& alpha, int d, const Partition& lambda);

Partition conjugate(const Partition& lambda);

/// Number of standard Young tableaux (hook length formula).
BigInt sn_dim(const Partition& lambda);

/// Dimension of the Schur functor S_lambda applied to a k-dimensional space
/// (hook content formula); 0 when the partition has more than k rows.
BigInt gl_dim(const Partition& lambda, int k);

/// True iff mu fits inside lambda.
bool skew_contains(const Partition& lambda, const Partition& mu);

/// All partitions of n in revlex order: (n) first, (1^n) last.
std::vector<Partition> partitions_of(int n);

/// All partitions of n with at most `max_length` parts, revlex order.
std::vector<Partition> partitions_of(int n, int max_length);

}  // namespace kronstab

template <>
struct std::hash<kronstab::Partition> {
  std::size_t operator()(const kronstab::Partition& p) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    for (int part : p.parts()) {
      h ^= static_cast<std::size_t>(part) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};
