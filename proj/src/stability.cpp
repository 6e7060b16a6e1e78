// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/stability.hpp"

#include <algorithm>
#include <climits>

#include "kronstab/coefficients.hpp"

namespace kronstab {

std::string_view family_name(Family kind) {
  switch (kind) {
    case Family::kKronecker:
      return "kronecker";
    case Family::kLittlewoodRichardson:
      return "littlewood-richardson";
    case Family::kPlethysm:
      return "plethysm";
  }
  return "unknown";
}

Family parse_family(std::string_view text) {
  if (text == "kron" || text == "kronecker") return Family::kKronecker;
  if (text == "lr" || text == "littlewood-richardson") return Family::kLittlewoodRichardson;
  if (text == "pleth" || text == "plethysm") return Family::kPlethysm;
  throw ParseError("unknown coefficient kind '" + std::string(text) + "' (expected kron, lr or pleth)");
}

PartitionTriple stretched_triple(Family kind, const PartitionTriple& base,
                                 const PartitionTriple& shift, int d) {
  PartitionTriple out;
  out.first = scale_add(base.first, d, shift.first);
  out.second = kind == Family::kPlethysm ? base.second : scale_add(base.second, d, shift.second);
  out.third = scale_add(base.third, d, shift.third);
  return out;
}

namespace {

struct Balance {
  bool ok;
  std::string identity;
};

Balance check_balance(Family kind, const PartitionTriple& t) {
  const int a = t.first.size(), b = t.second.size(), c = t.third.size();
  switch (kind) {
    case Family::kKronecker:
      return {a == b && b == c, "|first| = |second| = |third| (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ", " + std::to_string(c) + ")"};
    case Family::kLittlewoodRichardson:
      return {b + c == a, "|second| + |third| = |first| (" + std::to_string(b) + " + " +
                              std::to_string(c) + " vs " + std::to_string(a) + ")"};
    case Family::kPlethysm:
      return {a * b == c, "|first| * |second| = |third| (" + std::to_string(a) + " * " +
                              std::to_string(b) + " vs " + std::to_string(c) + ")"};
  }
  return {false, "unknown family"};
}

void require_sequence_balance(Family kind, const PartitionTriple& base, const PartitionTriple& shift) {
  if (kind == Family::kPlethysm && !shift.second.empty()) {
    throw PreconditionError("plethysm sequences keep the inner partition fixed; the shift's middle entry must be '-'");
  }
  for (int d : {0, 1}) {
    auto balance = check_balance(kind, stretched_triple(kind, base, shift, d));
    if (!balance.ok) {
      throw PreconditionError("unbalanced " + std::string(family_name(kind)) + " sequence at d = " +
                              std::to_string(d) + ": needs " + balance.identity);
    }
  }
}

/// Size governed by the cap, as (per-step growth, constant) in d.
std::pair<int, int> capped_size(Family kind, const PartitionTriple& base, const PartitionTriple& shift) {
  if (kind == Family::kPlethysm) return {base.third.size(), shift.third.size()};
  return {base.first.size(), shift.first.size()};
}

int cap_for(Family kind, const Config& cfg) {
  return kind == Family::kPlethysm ? cfg.plethysm_cap : cfg.rank_cap;
}

}  // namespace

BigInt sequence_term(Family kind, const PartitionTriple& base, const PartitionTriple& shift, int d,
                     const Config& cfg) {
  const auto t = stretched_triple(kind, base, shift, d);
  switch (kind) {
    case Family::kKronecker:
      return kronecker(t.first, t.second, t.third, cfg);
    case Family::kLittlewoodRichardson:
      return littlewood_richardson(t.first, t.second, t.third);
    case Family::kPlethysm:
      return plethysm_coeff(t.first, t.second, t.third, cfg, /*strict=*/false);
  }
  return 0;
}

int max_admissible_dmax(Family kind, const PartitionTriple& base, const PartitionTriple& shift,
                        const Config& cfg) {
  const auto [step, constant] = capped_size(kind, base, shift);
  const int cap = cap_for(kind, cfg);
  if (constant > cap) return -1;
  if (step == 0) return INT_MAX;
  return (cap - constant) / step;
}

CoeffSequence coefficient_sequence(Family kind, const PartitionTriple& base,
                                   const PartitionTriple& shift, int dmax, const Config& cfg) {
  if (dmax < 0) throw PreconditionError("dmax must be nonnegative");
  require_sequence_balance(kind, base, shift);
  const int admissible = max_admissible_dmax(kind, base, shift, cfg);
  if (dmax > admissible) {
    const auto [step, constant] = capped_size(kind, base, shift);
    throw RefusalError("d = " + std::to_string(dmax) + " needs size " +
                       std::to_string(dmax * step + constant) + " above the " +
                       (kind == Family::kPlethysm ? "plethysm cap " : "rank cap ") +
                       std::to_string(cap_for(kind, cfg)) +
                       "; largest admissible dmax is " + std::to_string(admissible));
  }
  CoeffSequence seq{kind, base, shift, dmax, {}};
  seq.values.reserve(dmax + 1);
  for (int d = 0; d <= dmax; ++d) seq.values.push_back(sequence_term(kind, base, shift, d, cfg));
  return seq;
}

std::optional<Stabilization> detect_stabilization(const std::vector<BigInt>& values, int window) {
  if (window < 1) throw PreconditionError("stabilization window must be positive");
  if (static_cast<int>(values.size()) < window) return std::nullopt;
  const BigInt& last = values.back();
  for (std::size_t i = values.size() - window; i < values.size(); ++i) {
    if (values[i] != last) return std::nullopt;
  }
  int onset = static_cast<int>(values.size()) - 1;
  while (onset > 0 && values[onset - 1] == last) --onset;
  return Stabilization{last, onset};
}

QuasiPolynomial::QuasiPolynomial(int period, std::vector<std::vector<Rational>> components)
    : period_(period), components_(std::move(components)) {
  if (period_ < 1 || static_cast<int>(components_.size()) != period_) {
    throw PreconditionError("quasi-polynomial needs one component per residue class");
  }
  for (auto& c : components_) {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
}

int QuasiPolynomial::degree() const noexcept {
  int deg = -1;
  for (const auto& c : components_) deg = std::max(deg, static_cast<int>(c.size()) - 1);
  return deg;
}

namespace {

Rational as_rational(long long v) { return Rational(static_cast<long>(v)); }

Rational horner(const std::vector<Rational>& coeffs, const Rational& x) {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Coefficients (constant first) of the interpolating polynomial of degree
/// < points.size() through the given points, via Newton divided differences.
std::vector<Rational> interpolate(const std::vector<std::pair<long long, Rational>>& points) {
  const std::size_t m = points.size();
  std::vector<Rational> dd(m);
  for (std::size_t i = 0; i < m; ++i) dd[i] = points[i].second;
  for (std::size_t level = 1; level < m; ++level) {
    for (std::size_t i = m - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / as_rational(points[i].first - points[i - level].first);
    }
  }
  // Expand the Newton form from the innermost factor outwards.
  std::vector<Rational> coeffs{dd[m - 1]};
  for (std::size_t i = m - 1; i-- > 0;) {
    // coeffs := coeffs * (x - x_i) + dd[i]
    std::vector<Rational> next(coeffs.size() + 1, Rational(0));
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * as_rational(points[i].first);
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  return coeffs;
}

}  // namespace

Rational QuasiPolynomial::operator()(long long d) const {
  const long long residue = ((d % period_) + period_) % period_;
  return horner(components_[residue], as_rational(d));
}

QuasiPolynomialFit fit_quasipolynomial(const std::vector<BigInt>& values, int period_max,
                                       int first_index) {
  if (period_max < 1) throw PreconditionError("period_max must be positive");
  const long long n = static_cast<long long>(values.size());
  std::vector<FitAttempt> attempts;
  for (int period = 1; period <= period_max && period <= n; ++period) {
    std::vector<std::vector<std::pair<long long, Rational>>> classes(period);
    for (long long i = 0; i < n; ++i) {
      const long long d = first_index + i;
      classes[((d % period) + period) % period].emplace_back(d, Rational(values[i]));
    }
    int fewest = INT_MAX, most = 0;
    for (const auto& c : classes) {
      fewest = std::min(fewest, static_cast<int>(c.size()));
      most = std::max(most, static_cast<int>(c.size()));
    }
    for (int degree = 0; degree + 1 <= fewest && degree + 2 <= most; ++degree) {
      std::vector<std::vector<Rational>> components;
      int mismatches = 0;
      for (const auto& c : classes) {
        std::vector<std::pair<long long, Rational>> head(c.begin(), c.begin() + degree + 1);
        auto poly = interpolate(head);
        for (const auto& [d, v] : c) {
          if (horner(poly, as_rational(d)) != v) ++mismatches;
        }
        components.push_back(std::move(poly));
      }
      attempts.push_back({period, degree, mismatches});
      if (mismatches == 0) {
        QuasiPolynomialFit fit;
        fit.q = QuasiPolynomial(period, std::move(components));
        fit.first_index = first_index;
        for (const auto& c : classes) fit.samples.push_back(static_cast<int>(c.size()));
        fit.fully_verified = fewest >= degree + 2;
        return fit;
      }
    }
  }
  std::string what = "no quasi-polynomial with period <= " + std::to_string(period_max) +
                     " reproduces the " + std::to_string(n) + " values";
  if (!attempts.empty()) {
    auto best = std::min_element(attempts.begin(), attempts.end(),
                                 [](const FitAttempt& a, const FitAttempt& b) {
                                   return a.mismatches < b.mismatches;
                                 });
    what += " (best: period " + std::to_string(best->period) + ", degree " +
            std::to_string(best->degree) + ", " + std::to_string(best->mismatches) +
            " mismatched points)";
  }
  throw NoFitError(what, std::move(attempts));
}

int krull_estimate(const QuasiPolynomial& q) { return q.is_zero() ? 0 : q.degree() + 1; }

std::vector<ReciprocityViolation> reciprocity_scan(const QuasiPolynomial& q, long long dmax) {
  std::vector<ReciprocityViolation> out;
  for (long long d = 1; d <= dmax; ++d) {
    Rational at_d = q(d);
    Rational at_minus_d = q(-d);
    if (at_d < abs(at_minus_d)) out.push_back({d, std::move(at_d), std::move(at_minus_d)});
  }
  return out;
}

std::string_view verdict_name(const Verdict& v) {
  struct Visitor {
    std::string_view operator()(const NotStable&) const { return "NotStable"; }
    std::string_view operator()(const CertifiedUpTo&) const { return "CertifiedUpTo"; }
    std::string_view operator()(const DecidedStable&) const { return "DecidedStable"; }
    std::string_view operator()(const DecidedNotStable&) const { return "DecidedNotStable"; }
  };
  return std::visit(Visitor{}, v);
}

namespace {

void attach_shift(StabilityReport& report, const std::optional<ShiftRequest>& shift, const Config& cfg) {
  if (!shift) return;
  report.shifted = coefficient_sequence(report.kind, report.triple, shift->shift, shift->dmax, cfg);
  report.stable_value = detect_stabilization(report.shifted->values, shift->window);
}

/// Shared by the Kronecker and plethysm checks: the first d >= 1 whose
/// diagonal value is not 1 disproves stability.
Verdict diagonal_verdict(const std::vector<BigInt>& diagonal, int dmax) {
  if (diagonal[1] == 0) return NotStable{NotStable::Reason::kBaseVanishes, 1, BigInt(0)};
  for (int d = 1; d <= dmax; ++d) {
    if (diagonal[d] != 1) return NotStable{NotStable::Reason::kDiagonalNotOne, d, diagonal[d]};
  }
  return CertifiedUpTo{dmax};
}

StabilityReport diagonal_report(Family kind, const Partition& alpha, const Partition& beta,
                                const Partition& gamma, int dmax, const Config& cfg,
                                const std::optional<ShiftRequest>& shift) {
  if (dmax < 1) throw PreconditionError("dmax must be at least 1");
  StabilityReport report;
  report.kind = kind;
  report.triple = {alpha, beta, gamma};
  auto diagonal = coefficient_sequence(kind, report.triple, {}, dmax, cfg);
  report.diagonal_values = std::move(diagonal.values);
  report.g_base = report.diagonal_values[1];
  report.verdict = diagonal_verdict(report.diagonal_values, dmax);
  attach_shift(report, shift, cfg);
  return report;
}

}  // namespace

StabilityReport kronecker_stability(const Partition& alpha, const Partition& beta,
                                    const Partition& gamma, int dmax, const Config& cfg,
                                    const std::optional<ShiftRequest>& shift) {
  return diagonal_report(Family::kKronecker, alpha, beta, gamma, dmax, cfg, shift);
}

StabilityReport plethysm_stability(const Partition& alpha, const Partition& beta,
                                   const Partition& gamma, int dmax, const Config& cfg,
                                   const std::optional<ShiftRequest>& shift) {
  return diagonal_report(Family::kPlethysm, alpha, beta, gamma, dmax, cfg, shift);
}

StabilityReport lr_stability(const Partition& alpha, const Partition& beta, const Partition& gamma,
                             const Config& cfg, const std::optional<ShiftRequest>& shift) {
  StabilityReport report;
  report.kind = Family::kLittlewoodRichardson;
  report.triple = {alpha, beta, gamma};
  report.g_base = littlewood_richardson(alpha, beta, gamma);
  report.diagonal_values = {BigInt(1), report.g_base};
  if (report.g_base == 1) {
    report.verdict = DecidedStable{};
  } else {
    report.verdict = DecidedNotStable{};
  }
  attach_shift(report, shift, cfg);
  return report;
}

}  // namespace kronstab
