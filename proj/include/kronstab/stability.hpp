// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kronstab/bigint.hpp"
#include "kronstab/config.hpp"
#include "kronstab/errors.hpp"
#include "kronstab/partition.hpp"

namespace kronstab {

enum class Family { kKronecker, kLittlewoodRichardson, kPlethysm };

/// "kronecker", "littlewood-richardson", "plethysm".
std::string_view family_name(Family kind);

/// Accepts the long names and the short forms kron, lr, pleth.
Family parse_family(std::string_view text);

/// Values of a stretched-and-shifted coefficient for d = 0..dmax:
///   kronecker  g(d*a + l, d*b + m, d*c + n)
///   LR         c^{d*a + l}_{d*b + m, d*c + n}
///   plethysm   a^{d*c + n}_{d*a + l, b}   (b fixed; the shift's middle
///              entry must be empty)
struct CoeffSequence {
  Family kind = Family::kKronecker;
  PartitionTriple base;
  PartitionTriple shift;
  int dmax = 0;
  std::vector<BigInt> values;
};

/// The triple whose coefficient is term d of the sequence.
PartitionTriple stretched_triple(Family kind, const PartitionTriple& base,
                                 const PartitionTriple& shift, int d);

/// One term, computed directly.
BigInt sequence_term(Family kind, const PartitionTriple& base, const PartitionTriple& shift, int d,
                     const Config& cfg = default_config());

/// Largest dmax the configured caps admit for this base and shift.
int max_admissible_dmax(Family kind, const PartitionTriple& base, const PartitionTriple& shift,
                        const Config& cfg = default_config());

CoeffSequence coefficient_sequence(Family kind, const PartitionTriple& base,
                                   const PartitionTriple& shift, int dmax,
                                   const Config& cfg = default_config());

struct Stabilization {
  BigInt value;
  int onset = 0;
  bool operator==(const Stabilization&) const = default;
};

/// Heuristic: constant on the last `window` values. Returns the value and
/// the first index from which the tail is constant.
std::optional<Stabilization> detect_stabilization(const std::vector<BigInt>& values,
                                                  int window = 3);

/// Period plus one polynomial per residue class. Component j governs
/// d == j (mod period) and is written in powers of d itself.
class QuasiPolynomial {
 public:
  QuasiPolynomial() = default;
  QuasiPolynomial(int period, std::vector<std::vector<Rational>> components);

  int period() const noexcept { return period_; }
  const std::vector<std::vector<Rational>>& components() const noexcept { return components_; }

  /// Max component degree; -1 for the zero quasi-polynomial.
  int degree() const noexcept;
  bool is_zero() const noexcept { return degree() < 0; }

  /// Defined for every integer; negative d uses the nonnegative residue.
  Rational operator()(long long d) const;

  bool operator==(const QuasiPolynomial&) const = default;

 private:
  int period_ = 1;
  std::vector<std::vector<Rational>> components_;
};

struct FitAttempt {
  int period = 0;
  int degree = 0;
  int mismatches = 0;  // points the per-class interpolants failed to reproduce
};

class NoFitError : public Error {
 public:
  NoFitError(const std::string& what, std::vector<FitAttempt> attempts)
      : Error(what), attempts_(std::move(attempts)) {}
  const std::vector<FitAttempt>& attempts() const noexcept { return attempts_; }

 private:
  std::vector<FitAttempt> attempts_;
};

struct QuasiPolynomialFit {
  QuasiPolynomial q;
  int first_index = 0;
  /// Sample count per residue class.
  std::vector<int> samples;
  /// True when every class had a point beyond those that fixed its
  /// polynomial; false means some component is interpolated, not checked.
  bool fully_verified = false;
};

/// Minimal quasi-polynomial through values[i] at d = first_index + i:
/// smallest period, then smallest degree, reproducing every input exactly.
/// A candidate (period, degree) is tried when every residue class holds at
/// least degree+1 samples and some class holds degree+2.
QuasiPolynomialFit fit_quasipolynomial(const std::vector<BigInt>& values, int period_max = 6,
                                       int first_index = 0);

inline Rational evaluate_quasipolynomial(const QuasiPolynomial& q, long long d) { return q(d); }

/// 1 + degree; 0 for the zero quasi-polynomial.
int krull_estimate(const QuasiPolynomial& q);

struct ReciprocityViolation {
  long long d = 0;
  Rational at_d;
  Rational at_minus_d;
};

/// Every 1 <= d <= dmax with q(d) < |q(-d)|.
std::vector<ReciprocityViolation> reciprocity_scan(const QuasiPolynomial& q, long long dmax);

struct NotStable {
  enum class Reason { kBaseVanishes, kDiagonalNotOne };
  Reason reason = Reason::kDiagonalNotOne;
  int witness_d = 0;
  BigInt witness_value;
};
struct CertifiedUpTo {
  int dmax = 0;
};
struct DecidedStable {};
struct DecidedNotStable {};

using Verdict = std::variant<NotStable, CertifiedUpTo, DecidedStable, DecidedNotStable>;

std::string_view verdict_name(const Verdict& v);

struct StabilityReport {
  Family kind = Family::kKronecker;
  PartitionTriple triple;
  Verdict verdict;
  /// Diagonal coefficients for d = 0..dmax (d = 0 is the empty coefficient).
  std::vector<BigInt> diagonal_values;
  /// The coefficient of the triple itself (d = 1).
  BigInt g_base;
  /// Present only when a shifted sequence was requested.
  std::optional<CoeffSequence> shifted;
  std::optional<Stabilization> stable_value;
};

/// Optional shifted sequence to attach to a report.
struct ShiftRequest {
  PartitionTriple shift;
  int dmax = 0;
  int window = 3;
};

StabilityReport kronecker_stability(const Partition& alpha, const Partition& beta,
                                    const Partition& gamma, int dmax,
                                    const Config& cfg = default_config(),
                                    const std::optional<ShiftRequest>& shift = std::nullopt);

/// Exact decision: stable iff c^alpha_{beta,gamma} = 1.
StabilityReport lr_stability(const Partition& alpha, const Partition& beta, const Partition& gamma,
                             const Config& cfg = default_config(),
                             const std::optional<ShiftRequest>& shift = std::nullopt);

StabilityReport plethysm_stability(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma, int dmax,
                                   const Config& cfg = default_config(),
                                   const std::optional<ShiftRequest>& shift = std::nullopt);

}  // namespace kronstab
