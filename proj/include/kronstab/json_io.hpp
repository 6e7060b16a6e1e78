// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON encodings shared by the CLI and its tests. Objects keep field order
// so output is byte-stable.

#include <json.hpp>

#include "kronstab/bigint.hpp"
#include "kronstab/partition.hpp"
#include "kronstab/stability.hpp"
#include "kronstab/symfunc.hpp"

namespace kronstab::json {

using Json = nlohmann::ordered_json;

/// JSON number when the value fits in int64, decimal string otherwise.
Json integer(const BigInt& v);
/// Accepts a JSON integer or a decimal string.
BigInt read_integer(const Json& j);

Json partition(const Partition& p);
Partition read_partition(const Json& j);
Json triple(const PartitionTriple& t);

Json sequence(const CoeffSequence& seq);
CoeffSequence read_sequence(const Json& j);

Json quasi_polynomial(const QuasiPolynomial& q);
QuasiPolynomial read_quasi_polynomial(const Json& j);

Json verdict(const Verdict& v);
Json report(const StabilityReport& r);

/// [{"partition": [...], "coeff": "<decimal>"}, ...] in revlex order.
Json schur_expansion(const SchurExpansion& e);

}  // namespace kronstab::json
