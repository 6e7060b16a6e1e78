// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// Border-strip removal on the sub-shapes of a fixed partition.

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "kronstab/partition.hpp"

namespace kronstab::detail {

struct StripMove {
  int target;  // sub-shape id after removal
  int sign;    // (-1)^{height}
};

/// Removes every border strip of length k from `shape` (padded to `rows`
/// entries) and calls emit(new_shape, sign). Uses beta numbers: a strip of
/// length k is a bead sliding from b to b-k onto an empty position; the sign
/// counts the beads jumped over.
template <class Emit>
void remove_rim_hooks(const std::vector<int>& shape, int k, Emit&& emit) {
  const int rows = static_cast<int>(shape.size());
  std::vector<int> beta(rows);
  for (int i = 0; i < rows; ++i) beta[i] = shape[i] + (rows - 1 - i);
  std::vector<int> next(rows);
  for (int i = 0; i < rows; ++i) {
    const int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (int j = i + 1; j < rows; ++j) {
      if (beta[j] == target) {
        occupied = true;
        break;
      }
      if (beta[j] > target) ++jumped;
    }
    if (occupied) continue;
    // New strictly decreasing beta set: beta[i] moves to position i + jumped.
    int w = 0;
    for (int j = 0; j < rows; ++j) {
      if (j == i) continue;
      if (w == i + jumped) next[w++] = target;
      next[w++] = beta[j];
    }
    if (w == i + jumped) next[w++] = target;
    for (int j = 0; j < rows; ++j) next[j] -= (rows - 1 - j);
    emit(next, (jumped % 2) ? -1 : 1);
  }
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

/// Lazily interned sub-shapes of one partition, with cached strip moves.
/// Not thread-safe; kernels keep one lattice per thread.
class ShapeLattice {
 public:
  explicit ShapeLattice(const Partition& top) : rows_(top.length()), max_k_(top.size()) {
    root_ = intern(top.parts());
    empty_ = intern(std::vector<int>(rows_, 0));
  }

  int root() const noexcept { return root_; }
  int empty_shape() const noexcept { return empty_; }
  int size() const noexcept { return static_cast<int>(shapes_.size()); }

  const std::vector<StripMove>& moves(int id, int k) {
    const std::size_t slot = static_cast<std::size_t>(id) * (max_k_ + 1) + k;
    if (slot >= computed_.size()) {
      computed_.resize(shapes_.size() * (max_k_ + 1), 0);
      moves_.resize(shapes_.size() * (max_k_ + 1));
    }
    if (!computed_[slot]) {
      std::vector<StripMove> out;
      const std::vector<int> shape = shapes_[id];
      remove_rim_hooks(shape, k, [&](const std::vector<int>& next, int sign) {
        out.push_back({intern(next), sign});
      });
      // intern() may have grown the tables; index again.
      if (slot >= computed_.size()) {
        computed_.resize(shapes_.size() * (max_k_ + 1), 0);
        moves_.resize(shapes_.size() * (max_k_ + 1));
      }
      moves_[slot] = std::move(out);
      computed_[slot] = 1;
    }
    return moves_[slot];
  }

 private:
  int intern(const std::vector<int>& shape) {
    std::vector<int> padded = shape;
    padded.resize(rows_, 0);
    auto [it, inserted] = ids_.try_emplace(padded, static_cast<int>(shapes_.size()));
    if (inserted) shapes_.push_back(std::move(padded));
    return it->second;
  }

  int rows_;
  int max_k_;
  int root_ = 0;
  int empty_ = 0;
  std::unordered_map<std::vector<int>, int, VectorHash> ids_;
  std::vector<std::vector<int>> shapes_;
  std::vector<std::vector<StripMove>> moves_;
  std::vector<char> computed_;
};

}  // namespace kronstab::detail
