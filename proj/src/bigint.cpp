// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/bigint.hpp"

#include <cstdint>

#include "kronstab/errors.hpp"

namespace kronstab {

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_decimal(const BigInt& v) { return v.get_str(10); }

std::string to_string(const Rational& v) {
  Rational c = v;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str(10);
  return c.get_num().get_str(10) + "/" + c.get_den().get_str(10);
}

namespace {

bool is_integer_text(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && text[i] == '-') ++i;
  if (i == text.size()) return false;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') return false;
  }
  return true;
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  if (!is_integer_text(text)) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && den_text[0] == '-') {
    throw ParseError("negative denominator: '" + std::string(text) + "'");
  }
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

BigInt from_int128(__int128 v) {
  bool negative = v < 0;
  unsigned __int128 mag = negative ? -static_cast<unsigned __int128>(v)
                                   : static_cast<unsigned __int128>(v);
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(mag >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(mag)));
  BigInt out = (hi << 64) + lo;
  return negative ? BigInt(-out) : out;
}

}  // namespace kronstab
