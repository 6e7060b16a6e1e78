// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "kronstab/characters.hpp"
#include "kronstab/errors.hpp"

namespace kronstab {

void PowerExpansion::add(const Partition& mu, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(mu, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

const Rational& PowerExpansion::coeff(const Partition& mu) const {
  static const Rational zero = 0;
  auto it = terms.find(mu);
  return it == terms.end() ? zero : it->second;
}

void SchurExpansion::add(const Partition& lambda, const BigInt& c) {
  if (c == 0) return;
  auto [it, inserted] = terms.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

BigInt SchurExpansion::coeff(const Partition& lambda) const {
  auto it = terms.find(lambda);
  return it == terms.end() ? BigInt(0) : it->second;
}

void SparsePolynomial::add(const Exponents& e, const BigInt& c) {
  if (static_cast<int>(e.size()) != vars_) {
    throw PreconditionError("exponent vector length " + std::to_string(e.size()) +
                            " does not match " + std::to_string(vars_) + " variables");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt SparsePolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt SparsePolynomial::evaluate_at_ones() const {
  BigInt total = 0;
  for (const auto& [e, c] : terms_) total += c;
  return total;
}

bool SparsePolynomial::is_symmetric() const {
  Exponents swapped;
  for (const auto& [e, c] : terms_) {
    for (int i = 0; i + 1 < vars_; ++i) {
      if (e[i] == e[i + 1]) continue;
      swapped = e;
      std::swap(swapped[i], swapped[i + 1]);
      auto it = terms_.find(swapped);
      if (it == terms_.end() || it->second != c) return false;
    }
  }
  return true;
}

SparsePolynomial& SparsePolynomial::operator+=(const SparsePolynomial& other) {
  if (other.vars_ != vars_) throw PreconditionError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add(e, c);
  return *this;
}

SparsePolynomial& SparsePolynomial::operator-=(const SparsePolynomial& other) {
  if (other.vars_ != vars_) throw PreconditionError("variable count mismatch");
  for (const auto& [e, c] : other.terms_) add(e, -c);
  return *this;
}

SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b) {
  if (a.vars_ != b.vars_) throw PreconditionError("variable count mismatch");
  SparsePolynomial out(a.vars_);
  Exponents e(a.vars_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (int i = 0; i < a.vars_; ++i) e[i] = ea[i] + eb[i];
      out.add(e, ca * cb);
    }
  }
  return out;
}

SparsePolynomial operator*(const BigInt& c, const SparsePolynomial& p) {
  SparsePolynomial out(p.vars_);
  if (c == 0) return out;
  for (const auto& [e, v] : p.terms_) out.terms_.emplace(e, c * v);
  return out;
}

namespace {

std::unordered_map<Partition, std::size_t> class_positions(int n) {
  std::unordered_map<Partition, std::size_t> pos;
  auto shapes = partitions_of(n);
  for (std::size_t i = 0; i < shapes.size(); ++i) pos.emplace(std::move(shapes[i]), i);
  return pos;
}

}  // namespace

PowerExpansion schur_to_power(const Partition& lambda, const Config& cfg) {
  const int n = lambda.size();
  const auto row = character_row(lambda, cfg);
  const auto classes = cycle_types(n, cfg);
  PowerExpansion out;
  out.degree = n;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    Rational c(row[i], classes[i].z);
    c.canonicalize();
    out.add(classes[i].shape, c);
  }
  return out;
}

SchurExpansion power_to_schur(const PowerExpansion& f, const Config& cfg) {
  const int n = f.degree;
  SchurExpansion out;
  out.degree = n;
  if (f.terms.empty()) return out;
  const auto table = character_table(n, cfg);
  const auto pos = class_positions(n);
  for (std::size_t r = 0; r < table.shapes().size(); ++r) {
    const auto& row = table.rows()[r];
    Rational total = 0;
    for (const auto& [mu, c] : f.terms) total += c * row[pos.at(mu)];
    if (total.get_den() != 1) {
      throw IntegrityError("non-integral Schur coefficient " + to_string(total) + " at " +
                           table.shapes()[r].to_string());
    }
    out.add(table.shapes()[r], total.get_num());
  }
  return out;
}

Rational schur_coefficient(const PowerExpansion& f, const Partition& lambda, const Config& cfg) {
  if (lambda.size() != f.degree) return 0;
  if (f.terms.empty()) return 0;
  const auto row = character_row(lambda, cfg);
  const auto pos = class_positions(f.degree);
  Rational total = 0;
  for (const auto& [mu, c] : f.terms) total += c * row[pos.at(mu)];
  return total;
}

namespace {

/// Fills the cells of lambda in row-major order with entries in 1..k,
/// weakly increasing along rows and strictly down columns.
void enumerate_ssyt(const Partition& lambda, int k, std::size_t cell,
                    const std::vector<std::pair<int, int>>& cells, std::vector<std::vector<int>>& tab,
                    Exponents& weight, SparsePolynomial& out) {
  if (cell == cells.size()) {
    out.add(weight, 1);
    return;
  }
  const auto [r, c] = cells[cell];
  int lo = 1;
  if (c > 0) lo = std::max(lo, tab[r][c - 1]);
  if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
  // Column below needs room: entry + (rows remaining in this column) <= k.
  int below = 0;
  for (int rr = r + 1; rr < lambda.length() && lambda[rr] > c; ++rr) ++below;
  for (int v = lo; v + below <= k; ++v) {
    tab[r][c] = v;
    ++weight[v - 1];
    enumerate_ssyt(lambda, k, cell + 1, cells, tab, weight, out);
    --weight[v - 1];
  }
}

SparsePolynomial build_schur_polynomial(const Partition& lambda, int k) {
  SparsePolynomial out(k);
  if (lambda.length() > k) return out;
  std::vector<std::pair<int, int>> cells;
  std::vector<std::vector<int>> tab(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) {
    tab[r].assign(lambda[r], 0);
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  Exponents weight(k, 0);
  enumerate_ssyt(lambda, k, 0, cells, tab, weight, out);
  return out;
}

}  // namespace

const SparsePolynomial& schur_polynomial(const Partition& lambda, int k) {
  if (k < 0) throw PreconditionError("negative variable count");
  static std::mutex mutex;
  static std::map<std::pair<Partition, int>, SparsePolynomial> memo;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(lambda, k);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo.emplace(std::move(key), build_schur_polynomial(lambda, k)).first->second;
}

SchurExpansion decompose_into_schur(const SparsePolynomial& f, int k) {
  if (f.vars() != k) {
    throw PreconditionError("polynomial has " + std::to_string(f.vars()) + " variables, expected " +
                            std::to_string(k));
  }
  if (!f.is_symmetric()) throw PreconditionError("polynomial is not symmetric");
  SchurExpansion out;
  if (f.is_zero()) return out;

  auto degree_of = [](const Exponents& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
  };
  out.degree = degree_of(f.terms().begin()->first);

  // A symmetric polynomial is determined by its coefficients on weakly
  // decreasing exponents, so only those are tracked.
  auto dominant = [](const Exponents& e) { return std::is_sorted(e.rbegin(), e.rend()); };
  std::map<Exponents, BigInt> rest;
  for (const auto& [e, c] : f.terms()) {
    if (degree_of(e) != out.degree) throw PreconditionError("polynomial is not homogeneous");
    if (dominant(e)) rest.emplace(e, c);
  }

  // Each step strictly lowers the leading exponent among partitions of the
  // degree with at most k parts.
  const std::size_t bound = partitions_of(out.degree, k).size();
  std::size_t steps = 0;
  while (!rest.empty()) {
    if (++steps > bound) throw IntegrityError("Schur decomposition did not terminate");
    const auto [lead, c] = *rest.rbegin();
    Partition lambda(lead);
    out.add(lambda, c);
    for (const auto& [e, v] : schur_polynomial(lambda, k).terms()) {
      if (!dominant(e)) continue;
      auto [it, inserted] = rest.try_emplace(e, 0);
      it->second -= c * v;
      if (it->second == 0) rest.erase(it);
    }
  }
  return out;
}

PowerExpansion power_sum(const Partition& mu) {
  PowerExpansion out;
  out.degree = mu.size();
  out.add(mu, 1);
  return out;
}

namespace {

Partition merge(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  parts.reserve(a.parts().size() + b.parts().size());
  std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(), b.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

}  // namespace

PowerExpansion multiply(const PowerExpansion& a, const PowerExpansion& b) {
  PowerExpansion out;
  out.degree = a.degree + b.degree;
  for (const auto& [ma, ca] : a.terms) {
    for (const auto& [mb, cb] : b.terms) out.add(merge(ma, mb), ca * cb);
  }
  return out;
}

PowerExpansion plethysm_power(const PowerExpansion& f, const PowerExpansion& g) {
  // p_n[g]: scale every part of every term by n.
  std::map<int, PowerExpansion> inner;
  auto inner_for = [&](int n) -> const PowerExpansion& {
    auto it = inner.find(n);
    if (it != inner.end()) return it->second;
    PowerExpansion out;
    out.degree = n * g.degree;
    for (const auto& [mu, c] : g.terms) {
      std::vector<int> parts = mu.parts();
      for (int& p : parts) p *= n;
      out.add(Partition(std::move(parts)), c);
    }
    return inner.emplace(n, std::move(out)).first->second;
  };

  PowerExpansion out;
  out.degree = f.degree * g.degree;
  for (const auto& [rho, c] : f.terms) {
    PowerExpansion term = power_sum({});
    for (int part : rho.parts()) term = multiply(term, inner_for(part));
    for (const auto& [mu, v] : term.terms) out.add(mu, c * v);
  }
  return out;
}

}  // namespace kronstab
