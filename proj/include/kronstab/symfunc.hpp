// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <vector>

#include "kronstab/bigint.hpp"
#include "kronstab/config.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

/// Homogeneous symmetric function in power-sum coordinates, sum c_mu p_mu.
struct PowerExpansion {
  int degree = 0;
  std::map<Partition, Rational> terms;

  /// Adds c * p_mu; drops the entry if it cancels to zero.
  void add(const Partition& mu, const Rational& c);
  const Rational& coeff(const Partition& mu) const;

  bool operator==(const PowerExpansion&) const = default;
};

/// Homogeneous symmetric function in the Schur basis with integer
/// coefficients.
struct SchurExpansion {
  int degree = 0;
  std::map<Partition, BigInt> terms;

  void add(const Partition& lambda, const BigInt& c);
  BigInt coeff(const Partition& lambda) const;

  bool operator==(const SchurExpansion&) const = default;
};

using Exponents = std::vector<int>;

/// Polynomial in a fixed number of variables with integer coefficients.
/// Terms are ordered lexicographically with x1 > x2 > ..., so the leading
/// term is the last map entry.
class SparsePolynomial {
 public:
  SparsePolynomial() = default;
  explicit SparsePolynomial(int vars) : vars_(vars) {}

  int vars() const noexcept { return vars_; }
  const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Exponents& e, const BigInt& c);
  BigInt coeff(const Exponents& e) const;

  /// Sum of coefficients, i.e. the value at (1, ..., 1).
  BigInt evaluate_at_ones() const;

  /// Checks invariance under every adjacent transposition of variables.
  bool is_symmetric() const;

  SparsePolynomial& operator+=(const SparsePolynomial& other);
  SparsePolynomial& operator-=(const SparsePolynomial& other);
  friend SparsePolynomial operator*(const SparsePolynomial& a, const SparsePolynomial& b);
  friend SparsePolynomial operator*(const BigInt& c, const SparsePolynomial& p);

  bool operator==(const SparsePolynomial&) const = default;

 private:
  int vars_ = 0;
  std::map<Exponents, BigInt> terms_;
};

/// s_lambda = sum_mu chi_lambda(mu) / z_mu p_mu.
PowerExpansion schur_to_power(const Partition& lambda, const Config& cfg = default_config());

/// <f, s_lambda> for every lambda of the right degree. Throws
/// IntegrityError when any coefficient is not an integer.
SchurExpansion power_to_schur(const PowerExpansion& f, const Config& cfg = default_config());

/// <f, s_lambda> for a single lambda via on-demand row mode. Exact rational;
/// callers asserting integrality check the denominator themselves.
Rational schur_coefficient(const PowerExpansion& f, const Partition& lambda,
                           const Config& cfg = default_config());

/// s_lambda(x_1..x_k) as the generating function of semistandard tableaux.
/// Zero when lambda has more than k rows. Results are memoized.
const SparsePolynomial& schur_polynomial(const Partition& lambda, int k);

/// Writes a symmetric polynomial in k variables as a sum of Schur
/// polynomials by repeatedly subtracting the lex-leading term.
SchurExpansion decompose_into_schur(const SparsePolynomial& f, int k);

/// Product in the power-sum basis (p_mu p_nu = p_{mu union nu}).
PowerExpansion multiply(const PowerExpansion& a, const PowerExpansion& b);

/// f[g]: p_n[g] replaces each p_m in g by p_{nm}, extended multiplicatively
/// and linearly over f.
PowerExpansion plethysm_power(const PowerExpansion& f, const PowerExpansion& g);

/// p_mu as a one-term expansion.
PowerExpansion power_sum(const Partition& mu);

}  // namespace kronstab
