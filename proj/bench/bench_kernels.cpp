// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
// Times the trie kernels against the per-class serial references.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "kronstab/kernels.hpp"

using namespace kronstab;

namespace {

double seconds(const std::function<void()>& f) {
  const auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void compare_class_sum(const Partition& a, const Partition& b, const Partition& c, int threads) {
  Config cfg;
  cfg.threads = threads;
  BigInt fast, slow;
  const double tf = seconds([&] { fast = kernels::kronecker_class_sum(a, b, c, cfg); });
  const double ts = seconds([&] { slow = kernels::kronecker_class_sum_serial(a, b, c); });
  std::printf("class_sum  n=%-3d %-12s %-12s %-12s trie %9.4fs  serial %9.4fs  x%-7.1f %s\n",
              a.size(), a.to_string().c_str(), b.to_string().c_str(), c.to_string().c_str(), tf,
              ts, ts / tf, fast == slow ? "match" : "MISMATCH");
}

void compare_rows(int n, int threads) {
  Config cfg;
  cfg.threads = threads;
  const auto shapes = partitions_of(n);
  std::vector<std::vector<BigInt>> fast, slow;
  const double tf = seconds([&] { fast = kernels::character_rows(shapes, n, cfg); });
  const double ts = seconds([&] { slow = kernels::character_rows_serial(shapes, n); });
  std::printf("table      n=%-3d %-38s trie %9.4fs  serial %9.4fs  x%-7.1f %s\n", n, "", tf, ts,
              ts / tf, fast == slow ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const int threads = argc > 1 ? std::atoi(argv[1]) : 0;
  std::printf("threads=%d (0 = OpenMP default)\n", threads);
  compare_class_sum({2, 1}, {2, 1}, {2, 1}, threads);
  compare_class_sum({4, 2}, {4, 2}, {4, 2}, threads);
  compare_class_sum({6, 6}, {7, 5}, {6, 4, 2}, threads);
  compare_class_sum({12, 12}, {14, 10}, {12, 8, 4}, threads);
  compare_class_sum({9, 9}, {10, 8}, {9, 6, 3}, threads);
  compare_class_sum({18, 18}, {21, 15}, {18, 12, 6}, threads);
  for (int n : {8, 12, 16}) compare_rows(n, threads);
  return 0;
}
