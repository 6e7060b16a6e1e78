// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <memory>
#include <utility>

#include "kronstab/characters.hpp"
#include "kronstab/errors.hpp"
#include "rim_hooks.hpp"

namespace kronstab::kernels {
namespace {

struct Overflow {};

template <class T>
struct Arith;

template <>
struct Arith<__int128> {
  static void add(__int128& acc, const __int128& v, int sign) {
    __int128 r;
    bool overflow = sign > 0 ? __builtin_add_overflow(acc, v, &r) : __builtin_sub_overflow(acc, v, &r);
    if (overflow) throw Overflow{};
    acc = r;
  }
  static BigInt big(const __int128& v) { return from_int128(v); }
};

template <>
struct Arith<BigInt> {
  static void add(BigInt& acc, const BigInt& v, int sign) {
    if (sign > 0) {
      acc += v;
    } else {
      acc -= v;
    }
  }
  static BigInt big(const BigInt& v) { return v; }
};

template <class T>
using State = std::vector<std::pair<int, T>>;

/// Dense accumulator reused across strip applications.
template <class T>
struct Scratch {
  std::vector<T> dense;
  std::vector<char> live;
  std::vector<int> touched;

  void reserve(int size) {
    if (static_cast<int>(dense.size()) < size) {
      dense.resize(size);
      live.resize(size, 0);
    }
  }
};

template <class T>
void apply_strip(const State<T>& in, int k, detail::ShapeLattice& lattice, Scratch<T>& scratch,
                 State<T>& out) {
  out.clear();
  for (const auto& [id, coeff] : in) {
    const auto& moves = lattice.moves(id, k);
    scratch.reserve(lattice.size());
    for (const auto& m : moves) {
      if (!scratch.live[m.target]) {
        scratch.live[m.target] = 1;
        scratch.touched.push_back(m.target);
        scratch.dense[m.target] = 0;
      }
      Arith<T>::add(scratch.dense[m.target], coeff, m.sign);
    }
  }
  for (int id : scratch.touched) {
    scratch.live[id] = 0;
    if (scratch.dense[id] != 0) out.emplace_back(id, scratch.dense[id]);
  }
  scratch.touched.clear();
}

/// counts[m][k] = number of partitions of m with parts <= k.
std::vector<std::vector<long long>> partition_counts(int n) {
  std::vector<std::vector<long long>> counts(n + 1, std::vector<long long>(n + 1, 0));
  for (int k = 0; k <= n; ++k) counts[0][k] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int k = 1; k <= n; ++k) {
      counts[m][k] = counts[m][k - 1] + (k <= m ? counts[m - k][k] : 0);
    }
  }
  return counts;
}

/// A subtree of the cycle-type trie: fixed leading cycles plus the index of
/// its first leaf in revlex order.
struct Task {
  std::vector<int> prefix;
  long long first_leaf = 0;
};

std::vector<Task> split_tasks(int n, const std::vector<std::vector<long long>>& counts) {
  std::vector<Task> tasks;
  if (n == 0) {
    tasks.push_back({{}, 0});
    return tasks;
  }
  long long index = 0;
  for (int k1 = n; k1 >= 1; --k1) {
    const int rest = n - k1;
    if (rest == 0) {
      tasks.push_back({{k1}, index});
      index += 1;
      continue;
    }
    for (int k2 = std::min(k1, rest); k2 >= 1; --k2) {
      tasks.push_back({{k1, k2}, index});
      index += counts[rest - k2][k2];
    }
  }
  return tasks;
}

/// Depth-first walk below one task. Visit(prefix, leaf_index, values) is
/// called per surviving leaf with chi values per row (nullptr = zero).
/// `prune_if_any_empty` drops a subtree as soon as one row vanishes;
/// otherwise only when every row vanishes.
template <class T>
class Walker {
 public:
  Walker(std::vector<detail::ShapeLattice*> lattices, bool prune_if_any_empty,
         const std::vector<std::vector<long long>>& counts)
      : lattices_(std::move(lattices)), prune_any_(prune_if_any_empty), counts_(counts) {}

  template <class Visit>
  void run(const Task& task, int n, Visit&& visit) {
    const std::size_t rows = lattices_.size();
    levels_.assign(n + 2, std::vector<State<T>>(rows));
    scratch_.resize(rows);
    for (std::size_t r = 0; r < rows; ++r) {
      levels_[0][r].assign(1, {lattices_[r]->root(), T(1)});
    }
    prefix_.clear();
    int rem = n;
    int depth = 0;
    for (int k : task.prefix) {
      for (std::size_t r = 0; r < rows; ++r) {
        apply_strip(levels_[depth][r], k, *lattices_[r], scratch_[r], levels_[depth + 1][r]);
      }
      ++depth;
      rem -= k;
      prefix_.push_back(k);
      if (pruned(depth)) return;
    }
    descend(depth, rem, task.prefix.empty() ? n : task.prefix.back(), task.first_leaf, visit);
  }

 private:
  bool pruned(int depth) const {
    bool any_empty = false;
    bool all_empty = true;
    for (const auto& s : levels_[depth]) {
      if (s.empty()) {
        any_empty = true;
      } else {
        all_empty = false;
      }
    }
    return prune_any_ ? any_empty : all_empty;
  }

  template <class Visit>
  void descend(int depth, int rem, int max_part, long long first_leaf, Visit& visit) {
    const std::size_t rows = lattices_.size();
    if (rem == 0) {
      leaf_.assign(rows, nullptr);
      for (std::size_t r = 0; r < rows; ++r) {
        for (const auto& [id, coeff] : levels_[depth][r]) {
          if (id == lattices_[r]->empty_shape()) leaf_[r] = &coeff;
        }
      }
      visit(prefix_, first_leaf, leaf_);
      return;
    }
    long long index = first_leaf;
    for (int k = std::min(rem, max_part); k >= 1; --k) {
      const long long leaves = counts_[rem - k][k];
      for (std::size_t r = 0; r < rows; ++r) {
        apply_strip(levels_[depth][r], k, *lattices_[r], scratch_[r], levels_[depth + 1][r]);
      }
      if (!pruned(depth + 1)) {
        prefix_.push_back(k);
        descend(depth + 1, rem - k, k, index, visit);
        prefix_.pop_back();
      }
      index += leaves;
    }
  }

  std::vector<detail::ShapeLattice*> lattices_;
  bool prune_any_;
  const std::vector<std::vector<long long>>& counts_;
  std::vector<std::vector<State<T>>> levels_;
  std::vector<Scratch<T>> scratch_;
  std::vector<int> prefix_;
  std::vector<const T*> leaf_;
};

/// One set of lattices per OpenMP thread.
class LatticePool {
 public:
  LatticePool(const std::vector<Partition>& shapes, int threads) {
    pools_.resize(threads);
    for (auto& pool : pools_) {
      for (const auto& s : shapes) pool.push_back(std::make_unique<detail::ShapeLattice>(s));
    }
  }
  std::vector<detail::ShapeLattice*> for_thread(int t) {
    std::vector<detail::ShapeLattice*> out;
    for (auto& l : pools_[t]) out.push_back(l.get());
    return out;
  }

 private:
  std::vector<std::vector<std::unique_ptr<detail::ShapeLattice>>> pools_;
};

int thread_count(const Config& cfg) {
  return cfg.threads > 0 ? cfg.threads : omp_get_max_threads();
}

BigInt centralizer_of_prefix(const std::vector<int>& parts) {
  BigInt z = 1;
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    const unsigned long mult = j - i;
    BigInt pow;
    mpz_ui_pow_ui(pow.get_mpz_t(), static_cast<unsigned long>(parts[i]), mult);
    z *= pow * factorial(static_cast<unsigned>(mult));
    i = j;
  }
  return z;
}

void check_sizes(const std::vector<Partition>& shapes, int n) {
  for (const auto& s : shapes) {
    if (s.size() != n) {
      throw PreconditionError("character row " + s.to_string() + " is not a partition of " +
                              std::to_string(n));
    }
  }
}

class Progress {
 public:
  Progress(const Config& cfg, long long total) : cfg_(cfg), total_(total) {}
  void tick() {
    if (!cfg_.progress) return;
#pragma omp critical(kronstab_progress)
    cfg_.progress(++done_, total_);
  }

 private:
  const Config& cfg_;
  long long total_;
  long long done_ = 0;
};

}  // namespace

BigInt kronecker_class_sum(const Partition& a, const Partition& b, const Partition& c,
                           const Config& cfg) {
  const int n = a.size();
  check_sizes({a, b, c}, n);
  if (n > cfg.rank_cap) {
    throw RefusalError("rank " + std::to_string(n) + " exceeds the rank cap " +
                       std::to_string(cfg.rank_cap));
  }

  std::vector<Partition> shapes{a};
  if (b != a) shapes.push_back(b);
  if (c != a && c != b) shapes.push_back(c);
  std::vector<int> slot{0, b == a ? 0 : 1, 0};
  slot[2] = c == a ? 0 : (c == b ? slot[1] : static_cast<int>(shapes.size()) - 1);

  const auto counts = partition_counts(n);
  const auto tasks = split_tasks(n, counts);
  const int threads = thread_count(cfg);
  LatticePool pool(shapes, threads);
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  std::vector<BigInt> partial(tasks.size());
  Progress progress(cfg, static_cast<long long>(tasks.size()));

  auto run_task = [&]<class T>(const Task& task, std::vector<detail::ShapeLattice*> lattices,
                               BigInt& acc) {
    Walker<T> walker(std::move(lattices), /*prune_if_any_empty=*/true, counts);
    walker.run(task, n, [&](const std::vector<int>& parts, long long, const std::vector<const T*>& v) {
      BigInt product = Arith<T>::big(*v[slot[0]]);
      product *= Arith<T>::big(*v[slot[1]]);
      product *= Arith<T>::big(*v[slot[2]]);
      acc += product * (n_fact / centralizer_of_prefix(parts));
    });
  };

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto lattices = pool.for_thread(omp_get_thread_num());
    BigInt acc = 0;
    try {
      run_task.template operator()<__int128>(tasks[t], lattices, acc);
    } catch (const Overflow&) {
      acc = 0;
      run_task.template operator()<BigInt>(tasks[t], lattices, acc);
    }
    partial[t] = std::move(acc);
    progress.tick();
  }

  BigInt total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

BigInt kronecker_class_sum_serial(const Partition& a, const Partition& b, const Partition& c) {
  const int n = a.size();
  check_sizes({a, b, c}, n);
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  BigInt total = 0;
  for (const auto& mu : partitions_of(n)) {
    BigInt product = mn_character(a, mu) * mn_character(b, mu) * mn_character(c, mu);
    total += product * (n_fact / centralizer_order(mu));
  }
  return total;
}

std::vector<std::vector<BigInt>> character_rows(const std::vector<Partition>& shapes, int n,
                                                const Config& cfg) {
  check_sizes(shapes, n);
  if (n > cfg.rank_cap) {
    throw RefusalError("rank " + std::to_string(n) + " exceeds the rank cap " +
                       std::to_string(cfg.rank_cap));
  }
  const auto counts = partition_counts(n);
  const long long classes = counts[n][n];
  std::vector<std::vector<BigInt>> rows(shapes.size(), std::vector<BigInt>(classes, 0));
  if (shapes.empty()) return rows;

  const auto tasks = split_tasks(n, counts);
  const int threads = thread_count(cfg);
  LatticePool pool(shapes, threads);
  Progress progress(cfg, static_cast<long long>(tasks.size()));

  auto run_task = [&]<class T>(const Task& task, std::vector<detail::ShapeLattice*> lattices) {
    Walker<T> walker(std::move(lattices), /*prune_if_any_empty=*/false, counts);
    walker.run(task, n, [&](const std::vector<int>&, long long index, const std::vector<const T*>& v) {
      for (std::size_t r = 0; r < v.size(); ++r) {
        if (v[r]) rows[r][index] = Arith<T>::big(*v[r]);
      }
    });
  };

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    auto lattices = pool.for_thread(omp_get_thread_num());
    try {
      run_task.template operator()<__int128>(tasks[t], lattices);
    } catch (const Overflow&) {
      run_task.template operator()<BigInt>(tasks[t], lattices);
    }
    progress.tick();
  }
  return rows;
}

std::vector<std::vector<BigInt>> character_rows_serial(const std::vector<Partition>& shapes,
                                                       int n) {
  check_sizes(shapes, n);
  const auto classes = partitions_of(n);
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(shapes.size());
  for (const auto& lambda : shapes) {
    std::vector<BigInt> row;
    row.reserve(classes.size());
    for (const auto& mu : classes) row.push_back(mn_character(lambda, mu));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace kronstab::kernels
