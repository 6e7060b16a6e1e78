// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "kronstab/bigint.hpp"
#include "kronstab/config.hpp"
#include "kronstab/partition.hpp"

// Class-sum kernels over every cycle type of S_n.
//
// The parallel versions walk the prefix trie of cycle types (largest cycle
// first) carrying one sparse vector of skew-character states per requested
// row, so classes sharing a prefix share all border-strip work. Subtrees are
// distributed across OpenMP threads. The serial versions evaluate each class
// independently with mn_character and exist for cross-checking.
namespace kronstab::kernels {

/// Sum over classes mu of |class(mu)| * chi_a(mu) chi_b(mu) chi_c(mu).
/// Equals n! times the Kronecker coefficient.
BigInt kronecker_class_sum(const Partition& a, const Partition& b, const Partition& c,
                           const Config& cfg = default_config());

BigInt kronecker_class_sum_serial(const Partition& a, const Partition& b, const Partition& c);

/// rows[r][i] = chi_{shapes[r]}(class i), classes in revlex order.
std::vector<std::vector<BigInt>> character_rows(const std::vector<Partition>& shapes, int n,
                                                const Config& cfg = default_config());

std::vector<std::vector<BigInt>> character_rows_serial(const std::vector<Partition>& shapes,
                                                       int n);

}  // namespace kronstab::kernels
