// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/coefficients.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "kronstab/characters.hpp"
#include "kronstab/errors.hpp"
#include "kronstab/kernels.hpp"

namespace kronstab {

namespace {

std::string sizes(const Partition& a, const Partition& b, const Partition& c) {
  return std::to_string(a.size()) + ", " + std::to_string(b.size()) + ", " +
         std::to_string(c.size());
}

void require_kronecker_balance(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() != mu.size() || mu.size() != nu.size()) {
    throw PreconditionError("Kronecker triple is unbalanced: sizes " + sizes(lambda, mu, nu));
  }
}

void require_lr_balance(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (mu.size() + nu.size() != lambda.size()) {
    throw PreconditionError("Littlewood-Richardson triple needs |mu| + |nu| = |lambda|, got " +
                            std::to_string(mu.size()) + " + " + std::to_string(nu.size()) +
                            " != " + std::to_string(lambda.size()));
  }
}

void require_plethysm_balance(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (lambda.size() * mu.size() != nu.size()) {
    throw PreconditionError("plethysm triple needs |lambda| * |mu| = |nu|, got " +
                            std::to_string(lambda.size() * mu.size()) +
                            " != " + std::to_string(nu.size()));
  }
}

bool weakly_decreasing(Exponents::const_iterator first, Exponents::const_iterator last) {
  return std::is_sorted(std::make_reverse_iterator(last), std::make_reverse_iterator(first));
}

}  // namespace

BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                 const Config& cfg) {
  require_kronecker_balance(lambda, mu, nu);
  const int n = lambda.size();
  if (n > cfg.rank_cap) {
    throw RefusalError("rank " + std::to_string(n) + " exceeds the rank cap " +
                       std::to_string(cfg.rank_cap) + " (raise it with --rank-cap)");
  }
  const BigInt sum = kernels::kronecker_class_sum(lambda, mu, nu, cfg);
  const BigInt n_fact = factorial(static_cast<unsigned>(n));
  if (sum % n_fact != 0 || sum < 0) {
    throw IntegrityError("Kronecker class sum " + to_decimal(sum) + " is not a nonnegative multiple of " +
                         std::to_string(n) + "!");
  }
  return sum / n_fact;
}

BigInt kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_kronecker_balance(lambda, mu, nu);
  if (lambda.size() > kKroneckerOracleMax) {
    throw RefusalError("Kronecker oracle is limited to n <= " + std::to_string(kKroneckerOracleMax));
  }
  if (lambda.size() == 0) return 1;
  const int a = mu.length();
  const int b = nu.length();

  // Substitute z_{ij} = x_i y_j; keep only terms whose x part and y part are
  // both weakly decreasing. A polynomial symmetric in x and in y separately
  // is determined by those.
  auto bi_dominant = [a](const Exponents& e) {
    return weakly_decreasing(e.begin(), e.begin() + a) && weakly_decreasing(e.begin() + a, e.end());
  };
  std::map<Exponents, BigInt> rest;
  Exponents xy(a + b);
  for (const auto& [e, c] : schur_polynomial(lambda, a * b).terms()) {
    std::fill(xy.begin(), xy.end(), 0);
    for (int i = 0; i < a; ++i) {
      for (int j = 0; j < b; ++j) {
        xy[i] += e[i * b + j];
        xy[a + j] += e[i * b + j];
      }
    }
    if (!bi_dominant(xy)) continue;
    auto [it, inserted] = rest.try_emplace(xy, 0);
    it->second += c;
    if (it->second == 0) rest.erase(it);
  }

  // Peel off c * s_alpha(x) s_beta(y) at the lex-leading (x, y) exponent.
  while (!rest.empty()) {
    const auto [lead, c] = *rest.rbegin();
    Partition alpha(Exponents(lead.begin(), lead.begin() + a));
    Partition beta(Exponents(lead.begin() + a, lead.end()));
    if (alpha == mu && beta == nu) return c;
    const auto& sx = schur_polynomial(alpha, a);
    const auto& sy = schur_polynomial(beta, b);
    for (const auto& [ex, cx] : sx.terms()) {
      if (!weakly_decreasing(ex.begin(), ex.end())) continue;
      std::copy(ex.begin(), ex.end(), xy.begin());
      for (const auto& [ey, cy] : sy.terms()) {
        if (!weakly_decreasing(ey.begin(), ey.end())) continue;
        std::copy(ey.begin(), ey.end(), xy.begin() + a);
        auto [it, inserted] = rest.try_emplace(xy, 0);
        it->second -= c * cx * cy;
        if (it->second == 0) rest.erase(it);
      }
    }
  }
  return 0;
}

namespace {

class LrFilling {
 public:
  LrFilling(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu), counts_(nu.length() + 1, 0), tab_(lambda.length()) {
    for (int r = 0; r < lambda.length(); ++r) {
      tab_[r].assign(lambda[r], 0);
      // Reverse reading order: rows top to bottom, each right to left.
      for (int c = lambda[r] - 1; c >= mu[r]; --c) cells_.emplace_back(r, c);
    }
  }

  std::uint64_t count() { return search(0); }

 private:
  std::uint64_t search(std::size_t cell) {
    if (cell == cells_.size()) return 1;
    const auto [r, c] = cells_[cell];
    int hi = nu_.length();
    if (c + 1 < lambda_[r]) hi = std::min(hi, tab_[r][c + 1]);
    hi = std::min(hi, r + 1);  // entries in row r of a ballot filling are <= r + 1
    int lo = 1;
    if (r > 0 && c >= mu_[r - 1]) lo = tab_[r - 1][c] + 1;
    std::uint64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      if (counts_[v] + 1 > nu_[v - 1]) continue;
      if (v > 1 && counts_[v] + 1 > counts_[v - 1]) continue;
      ++counts_[v];
      tab_[r][c] = v;
      total += search(cell + 1);
      --counts_[v];
    }
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  std::vector<int> counts_;
  std::vector<std::vector<int>> tab_;
  std::vector<std::pair<int, int>> cells_;
};

}  // namespace

BigInt littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_lr_balance(lambda, mu, nu);
  if (!skew_contains(lambda, mu) || !skew_contains(lambda, nu)) return 0;
  LrFilling filling(lambda, mu, nu);
  return BigInt(static_cast<unsigned long>(filling.count()));
}

BigInt lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_lr_balance(lambda, mu, nu);
  if (lambda.size() > kLrOracleMax) {
    throw RefusalError("Littlewood-Richardson oracle is limited to |lambda| <= " +
                       std::to_string(kLrOracleMax));
  }
  const int k = mu.length() + nu.length();
  if (lambda.length() > k) return 0;
  static std::mutex mutex;
  static std::map<std::pair<Partition, Partition>, SchurExpansion> memo;
  std::unique_lock lock(mutex);
  auto key = std::make_pair(mu, nu);
  auto it = memo.find(key);
  if (it == memo.end()) {
    lock.unlock();
    SchurExpansion product =
        decompose_into_schur(schur_polynomial(mu, k) * schur_polynomial(nu, k), k);
    lock.lock();
    it = memo.emplace(std::move(key), std::move(product)).first;
  }
  return it->second.coeff(lambda);
}

SchurExpansion plethysm_expansion(const Partition& lambda, const Partition& mu, const Config& cfg) {
  const int degree = lambda.size() * mu.size();
  if (degree > cfg.plethysm_cap) {
    throw RefusalError("plethysm degree " + std::to_string(degree) + " exceeds the cap " +
                       std::to_string(cfg.plethysm_cap));
  }
  SchurExpansion out =
      power_to_schur(plethysm_power(schur_to_power(lambda, cfg), schur_to_power(mu, cfg)), cfg);
  for (const auto& [nu, c] : out.terms) {
    if (c < 0) {
      throw IntegrityError("plethysm coefficient of " + nu.to_string() + " is negative (" +
                           to_decimal(c) + ")");
    }
  }
  return out;
}

BigInt plethysm_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      const Config& cfg, bool strict) {
  if (lambda.size() * mu.size() != nu.size()) {
    if (strict) require_plethysm_balance(lambda, mu, nu);
    return 0;
  }
  if (nu.size() > cfg.plethysm_cap) {
    throw RefusalError("plethysm degree " + std::to_string(nu.size()) + " exceeds the cap " +
                       std::to_string(cfg.plethysm_cap));
  }
  const auto composed = plethysm_power(schur_to_power(lambda, cfg), schur_to_power(mu, cfg));
  const Rational value = schur_coefficient(composed, nu, cfg);
  if (value.get_den() != 1 || value < 0) {
    throw IntegrityError("plethysm coefficient " + to_string(value) + " is not a nonnegative integer");
  }
  return value.get_num();
}

SchurExpansion plethysm_oracle_expansion(const Partition& lambda, const Partition& mu, int k) {
  if (lambda.size() * mu.size() > kPlethysmOracleMax) {
    throw RefusalError("plethysm oracle is limited to |lambda| * |mu| <= " +
                       std::to_string(kPlethysmOracleMax));
  }
  // Each monomial of s_mu(x) becomes one variable y_j, repeated by
  // multiplicity; s_lambda(y) is enumerated tableau by tableau and each
  // tableau contributes the product of its monomials.
  std::vector<Exponents> monomials;
  for (const auto& [e, c] : schur_polynomial(mu, k).terms()) {
    for (BigInt i = 0; i < c; ++i) monomials.push_back(e);
  }
  const int m = static_cast<int>(monomials.size());
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < lambda.length(); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  std::vector<std::vector<int>> tab(lambda.length());
  for (int r = 0; r < lambda.length(); ++r) tab[r].assign(lambda[r], 0);
  std::map<Exponents, long> counts;
  Exponents e(k, 0);
  auto fill = [&](auto&& self, std::size_t i) -> void {
    if (i == cells.size()) {
      ++counts[e];
      return;
    }
    const auto [r, c] = cells[i];
    int lo = 0;
    if (c > 0) lo = tab[r][c - 1];
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    for (int v = lo; v < m; ++v) {
      tab[r][c] = v;
      for (int x = 0; x < k; ++x) e[x] += monomials[v][x];
      self(self, i + 1);
      for (int x = 0; x < k; ++x) e[x] -= monomials[v][x];
    }
  };
  fill(fill, 0);
  SparsePolynomial composed(k);
  for (const auto& [ex, c] : counts) composed.add(ex, c);
  SchurExpansion out = decompose_into_schur(composed, k);
  out.degree = lambda.size() * mu.size();
  return out;
}

BigInt plethysm_oracle(const Partition& lambda, const Partition& mu, const Partition& nu) {
  require_plethysm_balance(lambda, mu, nu);
  const int k = std::max(nu.length(), 2);
  return plethysm_oracle_expansion(lambda, mu, k).coeff(nu);
}

SchurWeylReport verify_schur_weyl_dim(const Partition& lambda, int a, int b, const Config& cfg) {
  if (lambda.size() > kSchurWeylMaxSize || a < 1 || b < 1 || a > kSchurWeylMaxDim ||
      b > kSchurWeylMaxDim) {
    throw RefusalError("Schur-Weyl dimension check needs |lambda| <= " +
                       std::to_string(kSchurWeylMaxSize) + " and 1 <= a, b <= " +
                       std::to_string(kSchurWeylMaxDim));
  }
  SchurWeylReport report;
  report.lhs = gl_dim(lambda, a * b);
  report.rhs = 0;
  const int n = lambda.size();
  for (const auto& mu : partitions_of(n, a)) {
    for (const auto& nu : partitions_of(n, b)) {
      report.rhs += kronecker(lambda, mu, nu, cfg) * gl_dim(mu, a) * gl_dim(nu, b);
    }
  }
  report.equal = report.lhs == report.rhs;
  return report;
}

}  // namespace kronstab
