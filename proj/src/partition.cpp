// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/partition.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "kronstab/errors.hpp"

namespace kronstab {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  long long total = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) {
      throw PreconditionError("partition part " + std::to_string(i + 1) + " is not positive");
    }
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw PreconditionError("partition parts not weakly decreasing at position " +
                              std::to_string(i + 1));
    }
    total += parts_[i];
  }
  if (total > std::numeric_limits<int>::max()) {
    throw PreconditionError("partition size overflows");
  }
  size_ = static_cast<int>(total);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

std::string Partition::to_string() const {
  if (parts_.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition parse_partition(std::string_view text) {
  if (text == "-") return {};
  if (text.empty()) throw ParseError("empty partition text (use '-' for the empty partition)");
  std::vector<int> parts;
  std::size_t pos = 0;
  int index = 1;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view token =
        text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size()) {
      throw ParseError("partition '" + std::string(text) + "': token " + std::to_string(index) +
                       " ('" + std::string(token) + "') is not a decimal integer");
    }
    if (value <= 0) {
      throw ParseError("partition '" + std::string(text) + "': part " + std::to_string(index) +
                       " must be positive");
    }
    if (!parts.empty() && value > parts.back()) {
      throw ParseError("partition '" + std::string(text) + "': part " + std::to_string(index) +
                       " breaks weak decrease");
    }
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
    ++index;
  }
  return Partition(std::move(parts));
}

Partition scale_add(const Partition& alpha, int d, const Partition& lambda) {
  if (d < 0) throw PreconditionError("scale_add: negative scale");
  std::size_t len = std::max(alpha.parts().size(), lambda.parts().size());
  std::vector<int> parts(len);
  for (std::size_t i = 0; i < len; ++i) parts[i] = d * alpha[i] + lambda[i];
  return Partition(std::move(parts));
}

Partition conjugate(const Partition& lambda) {
  if (lambda.empty()) return {};
  std::vector<int> out(lambda.parts().front());
  for (int part : lambda.parts()) {
    for (int j = 0; j < part; ++j) ++out[j];
  }
  return Partition(std::move(out));
}

BigInt sn_dim(const Partition& lambda) {
  Partition conj = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    }
  }
  return factorial(static_cast<unsigned>(lambda.size())) / hooks;
}

BigInt gl_dim(const Partition& lambda, int k) {
  if (lambda.length() > k) return 0;
  Partition conj = conjugate(lambda);
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      num *= k + j - i;
      den *= (lambda[i] - j) + (conj[j] - i) - 1;
    }
  }
  return num / den;
}

bool skew_contains(const Partition& lambda, const Partition& mu) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i) {
    if (mu[i] > lambda[i]) return false;
  }
  return true;
}

namespace {

void collect(int remaining, int max_part, int max_length, std::vector<int>& prefix,
             std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  if (static_cast<int>(prefix.size()) == max_length) return;
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    prefix.push_back(k);
    collect(remaining - k, k, max_length, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_length) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> prefix;
  collect(n, n, max_length, prefix, out);
  return out;
}

std::vector<Partition> partitions_of(int n) { return partitions_of(n, std::max(n, 0)); }

}  // namespace kronstab
