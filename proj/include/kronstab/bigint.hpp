// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace kronstab {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt factorial(unsigned n);

std::string to_decimal(const BigInt& v);

/// "p/q" in lowest terms, or just "p" when the denominator is 1.
std::string to_string(const Rational& v);

/// Accepts "p" or "p/q" with optional leading '-'. Throws ParseError.
Rational parse_rational(std::string_view text);

BigInt parse_bigint(std::string_view text);

BigInt from_int128(__int128 v);

}  // namespace kronstab
