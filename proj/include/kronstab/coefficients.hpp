// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "kronstab/bigint.hpp"
#include "kronstab/config.hpp"
#include "kronstab/partition.hpp"
#include "kronstab/symfunc.hpp"

namespace kronstab {

// Oracle scales. The oracles are exponential and refuse beyond these.
inline constexpr int kKroneckerOracleMax = 5;
inline constexpr int kLrOracleMax = 10;
inline constexpr int kPlethysmOracleMax = 8;
inline constexpr int kSchurWeylMaxSize = 6;
inline constexpr int kSchurWeylMaxDim = 3;

/// Kronecker coefficient g_{lambda,mu,nu}: multiplicity of the S_n
/// irreducible M_lambda in M_mu (x) M_nu, as
/// (1/n!) sum_classes |class| chi_lambda chi_mu chi_nu.
BigInt kronecker(const Partition& lambda, const Partition& mu, const Partition& nu,
                 const Config& cfg = default_config());

/// Kronecker coefficient read off s_lambda(x_i y_j) = sum g s_mu(x) s_nu(y)
/// in length(mu) * length(nu) product variables. n <= 5.
BigInt kronecker_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^lambda_{mu,nu}: ballot skew tableaux of shape lambda/mu and weight nu.
BigInt littlewood_richardson(const Partition& lambda, const Partition& mu, const Partition& nu);

/// c^lambda_{mu,nu} from the product s_mu s_nu in length(mu)+length(nu)
/// variables. |lambda| <= 10.
BigInt lr_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Multiplicity of S_nu in S_lambda o S_mu via power sums.
/// With `strict` false a size mismatch yields 0 instead of throwing.
BigInt plethysm_coeff(const Partition& lambda, const Partition& mu, const Partition& nu,
                      const Config& cfg = default_config(), bool strict = true);

/// Full Schur expansion of s_lambda[s_mu].
SchurExpansion plethysm_expansion(const Partition& lambda, const Partition& mu,
                                  const Config& cfg = default_config());

/// Plethysm coefficient by substituting the monomials of s_mu(x_1..x_k)
/// into s_lambda, k = max(length(nu), 2). |lambda| * |mu| <= 8.
BigInt plethysm_oracle(const Partition& lambda, const Partition& mu, const Partition& nu);

/// s_lambda[s_mu] restricted to k variables, decomposed into Schur
/// polynomials (exact for partitions with at most k rows).
SchurExpansion plethysm_oracle_expansion(const Partition& lambda, const Partition& mu, int k);

struct SchurWeylReport {
  BigInt lhs;  // dim S_lambda(C^{ab})
  BigInt rhs;  // sum_{mu,nu} g_{lambda,mu,nu} dim S_mu(C^a) dim S_nu(C^b)
  bool equal = false;
};

SchurWeylReport verify_schur_weyl_dim(const Partition& lambda, int a, int b,
                                      const Config& cfg = default_config());

}  // namespace kronstab
