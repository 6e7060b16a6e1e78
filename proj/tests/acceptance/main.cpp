// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any FAIL.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>
#include <unistd.h>

#include "kronstab/characters.hpp"
#include "kronstab/cli.hpp"
#include "kronstab/coefficients.hpp"
#include "kronstab/stability.hpp"
#include "../oracles.hpp"
#include "../schema_check.hpp"

using namespace kronstab;
namespace fs = std::filesystem;

namespace {

// Collects failed expectations for one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  std::string summary() const {
    std::string s;
    for (const auto& f : failures_) s += "\n      " + f;
    if (failed_ > static_cast<int>(failures_.size())) {
      s += "\n      (" + std::to_string(failed_ - failures_.size()) + " more)";
    }
    return s;
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

double elapsed(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string str(const BigInt& v) { return to_decimal(v); }

std::string triple_text(const Partition& a, const Partition& b, const Partition& c) {
  return "(" + a.to_string() + " " + b.to_string() + " " + c.to_string() + ")";
}

Partition rect(int d, const Partition& p) { return scale_add(p, d, {}); }

Config fresh() {
  Config cfg;
  cfg.use_cache = false;
  return cfg;
}

// 1 ------------------------------------------------------------------------
void known_values(Checker& c) {
  const auto t0 = std::chrono::steady_clock::now();
  const Config cfg = fresh();
  c.expect(kronecker({2, 1}, {2, 1}, {2, 1}, cfg) == 1, "g(2,1)^3 = 1");
  c.expect(kronecker({4, 2}, {4, 2}, {4, 2}, cfg) == 2, "g(4,2)^3 = 2");
  for (int d = 1; d <= 4; ++d) {
    const BigInt g = kronecker(rect(d, {3}), rect(d, {3}), rect(d, {1, 1, 1}), cfg);
    c.expect(g == 0, "g(d(3), d(3), d(1,1,1)) = 0 at d = " + std::to_string(d) + ", got " + str(g));
  }
  c.expect(kronecker({4, 1, 1}, {4, 1, 1}, {2, 2, 2}, cfg) == 1, "g((4,1,1),(4,1,1),(2,2,2)) = 1");
  for (int d = 1; d <= 10; ++d) {
    c.expect(kronecker({d}, {d}, {d}, cfg) == 1, "g((d),(d),(d)) = 1 at d = " + std::to_string(d));
  }
  const double s = elapsed(t0);
  c.expect(s < 1.0, "total time " + std::to_string(s) + " s exceeds 1 s");
}

// 2 ------------------------------------------------------------------------
void two_row_diagonal(Checker& c) {
  const Config cfg = fresh();
  const PartitionTriple base{{6, 6}, {7, 5}, {6, 4, 2}};
  auto t0 = std::chrono::steady_clock::now();
  const auto upto3 = coefficient_sequence(Family::kKronecker, base, {}, 3, cfg);
  const double s3 = elapsed(t0);
  t0 = std::chrono::steady_clock::now();
  const BigInt d4 = sequence_term(Family::kKronecker, base, {}, 4, cfg);
  const double s4 = elapsed(t0);
  std::vector<BigInt> values = upto3.values;
  values.push_back(d4);
  const std::vector<BigInt> expected = {1, 0, 2, 1, 3};
  std::string got;
  for (const auto& v : values) got += str(v) + " ";
  c.expect(values == expected, "diagonal d=0..4 is " + got);
  c.expect(s3 < 300, "d <= 3 took " + std::to_string(s3) + " s");
  c.expect(s4 < 1800, "d = 4 took " + std::to_string(s4) + " s");

  const auto fit = fit_quasipolynomial(values);
  c.expect(fit.q.period() == 2, "period " + std::to_string(fit.q.period()));
  if (fit.q.period() == 2) {
    // (d+2)/2 on even d, (d-1)/2 on odd d
    c.expect(fit.q.components()[0] == std::vector<Rational>{1, Rational(1, 2)}, "even component");
    c.expect(fit.q.components()[1] == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)},
             "odd component");
  }
  c.expect(evaluate_quasipolynomial(fit.q, 1) == 0, "p(1) = 0");
  c.expect(evaluate_quasipolynomial(fit.q, -1) == -1, "p(-1) = -1");
  const auto scan = reciprocity_scan(fit.q, 4);
  c.expect(!scan.empty() && scan.front().d == 1, "reciprocity violation at d = 1");
  c.expect(krull_estimate(fit.q) == 2, "Krull estimate 2");
  std::printf("    diagonal %s; d<=3 %.2f s, d=4 %.2f s\n", got.c_str(), s3, s4);
}

// 3 ------------------------------------------------------------------------
bool certified(const StabilityReport& r, int D) {
  const auto* v = std::get_if<CertifiedUpTo>(&r.verdict);
  return v && v->dmax == D;
}

void stability_verdicts(Checker& c) {
  const Config cfg = fresh();
  c.expect(certified(kronecker_stability({1}, {1}, {1}, 10, cfg), 10), "((1),(1),(1)) CertifiedUpTo(10)");
  c.expect(certified(kronecker_stability({1, 1}, {1, 1}, {2}, 8, cfg), 8),
           "((1,1),(1,1),(2)) CertifiedUpTo(8)");
  const auto r = kronecker_stability({2, 1}, {2, 1}, {2, 1}, 4, cfg);
  const auto* ns = std::get_if<NotStable>(&r.verdict);
  c.expect(ns && ns->witness_d == 2 && ns->witness_value == 2, "((2,1)^3) NotStable at d = 2, value 2");
  const auto z = kronecker_stability({3}, {3}, {1, 1, 1}, 4, cfg);
  const auto* nz = std::get_if<NotStable>(&z.verdict);
  c.expect(nz && nz->reason == NotStable::Reason::kBaseVanishes && z.g_base == 0,
           "((3),(3),(1,1,1)) NotStable via g_base = 0");

  std::mt19937 rng(20260101);
  std::uniform_int_distribution<int> size(1, 4);
  int stabilized = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const int n = size(rng);
    const PartitionTriple shift{oracle::random_partition(rng, n), oracle::random_partition(rng, n),
                                oracle::random_partition(rng, n)};
    const auto seq = coefficient_sequence(Family::kKronecker, {{1}, {1}, {1}}, shift, 12, cfg);
    const auto st = detect_stabilization(seq.values);
    c.expect(st.has_value(), "shift " + triple_text(shift.first, shift.second, shift.third) +
                                 " did not stabilize by d = 12");
    if (st) ++stabilized;
  }
  std::printf("    Murnaghan shifts stabilized: %d/10\n", stabilized);
}

// 4 ------------------------------------------------------------------------
void lr_suite(Checker& c) {
  const Config cfg = fresh();
  const auto yes = lr_stability({2}, {1}, {1}, cfg);
  c.expect(std::holds_alternative<DecidedStable>(yes.verdict) && yes.diagonal_values.size() == 2,
           "lr_stability((2),(1),(1)) decided stable from one coefficient");
  const auto no = lr_stability({3, 2, 1}, {2, 1}, {2, 1}, cfg);
  c.expect(std::holds_alternative<DecidedNotStable>(no.verdict) && no.g_base == 2,
           "lr_stability((3,2,1),(2,1),(2,1)) decided not stable, c = 2");

  int triples = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int m = 1; m < n; ++m) {
      for (const auto& a : partitions_of(n)) {
        for (const auto& b : partitions_of(m)) {
          for (const auto& g : partitions_of(n - m)) {
            if (triples >= 40 || littlewood_richardson(a, b, g) != 1) continue;
            ++triples;
            c.expect(std::holds_alternative<DecidedStable>(lr_stability(a, b, g, cfg).verdict),
                     "verdict for " + triple_text(a, b, g));
            const auto seq = coefficient_sequence(Family::kLittlewoodRichardson, {a, b, g}, {}, 6, cfg);
            for (int d = 1; d <= 6; ++d) {
              c.expect(seq.values[d] == 1, "stretched " + triple_text(a, b, g) + " at d = " + std::to_string(d));
            }
          }
        }
      }
    }
  }
  c.expect(triples >= 20, "only " + std::to_string(triples) + " multiplicity-free triples");

  long long compared = 0;
  for (int n = 0; n <= 8; ++n) {
    for (int m = 0; m <= n; ++m) {
      for (const auto& mu : partitions_of(m)) {
        for (const auto& nu : partitions_of(n - m)) {
          for (const auto& lambda : partitions_of(n)) {
            ++compared;
            c.expect(littlewood_richardson(lambda, mu, nu) == lr_oracle(lambda, mu, nu),
                     "LR rule vs oracle at " + triple_text(lambda, mu, nu));
          }
        }
      }
    }
  }
  std::printf("    %d stretched triples, %lld rule/oracle comparisons\n", triples, compared);
}

// 5 ------------------------------------------------------------------------
void plethysm_suite(Checker& c) {
  const Config cfg = fresh();
  for (int d = 0; d <= 6; ++d) {
    const Partition outer = d ? Partition{2 * d} : Partition{};
    c.expect(plethysm_coeff(outer, {2}, rect(d, {2, 2}), cfg) == 1,
             "a^{d(2,2)}_{d(2),(2)} = 1 at d = " + std::to_string(d));
  }
  for (const Partition& beta : {Partition{2}, Partition{1, 1}, Partition{2, 1}}) {
    for (int d = 0; d <= 4; ++d) {
      const Partition outer = d ? Partition{d} : Partition{};
      c.expect(plethysm_coeff(outer, beta, rect(d, beta), cfg) == 1,
               "Brion a^{d beta}_{(d), beta} for beta " + beta.to_string() + " at d = " + std::to_string(d));
    }
  }
  int pairs = 0;
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; a * b <= 8; ++b) {
      for (const auto& lambda : partitions_of(a)) {
        for (const auto& mu : partitions_of(b)) {
          ++pairs;
          const auto fast = plethysm_expansion(lambda, mu, cfg);
          const auto slow = plethysm_oracle_expansion(lambda, mu, a * b);
          c.expect(fast == slow, "expansion of s_" + lambda.to_string() + "[s_" + mu.to_string() + "]");
          for (const auto& nu : partitions_of(a * b)) {
            c.expect(plethysm_coeff(lambda, mu, nu, cfg) == slow.coeff(nu), "coefficient mismatch");
          }
        }
      }
    }
  }
  std::printf("    %d (lambda, mu) pairs compared against the substitution oracle\n", pairs);
}

// 6 ------------------------------------------------------------------------
void identity_suites(Checker& c) {
  const Config cfg = fresh();
  for (int n = 0; n <= 8; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (const auto& m : partitions_of(n)) {
        c.expect(mn_character(l, m) == frobenius_character(l, m),
                 "chi_" + l.to_string() + "(" + m.to_string() + ")");
      }
    }
  }
  for (int n = 0; n <= 10; ++n) {
    const auto t = character_table(n, cfg);
    for (std::size_t a = 0; a < t.rows().size(); ++a) {
      for (std::size_t b = a; b < t.rows().size(); ++b) {
        Rational s = 0;
        for (std::size_t i = 0; i < t.classes().size(); ++i) {
          Rational term(t.rows()[a][i] * t.rows()[b][i], t.classes()[i].z);
          term.canonicalize();
          s += term;
        }
        c.expect(s == (a == b ? 1 : 0), "row orthogonality at n = " + std::to_string(n));
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        for (const auto& g : ps) {
          const BigInt k = kronecker(a, b, g, cfg);
          const std::string at = triple_text(a, b, g);
          c.expect(kronecker(a, g, b, cfg) == k && kronecker(b, a, g, cfg) == k &&
                       kronecker(b, g, a, cfg) == k && kronecker(g, a, b, cfg) == k &&
                       kronecker(g, b, a, cfg) == k,
                   "S3 symmetry at " + at);
          c.expect(kronecker(a, conjugate(b), conjugate(g), cfg) == k &&
                       kronecker(conjugate(a), conjugate(b), g, cfg) == k,
                   "transpose symmetry at " + at);
          if (n <= 4) c.expect(kronecker_oracle(a, b, g) == k, "kronecker vs oracle at " + at);
        }
      }
    }
  }
  for (int n = 1; n <= 7; ++n) {
    const auto ps = partitions_of(n);
    for (const auto& a : ps) {
      for (const auto& b : ps) {
        BigInt s = 0;
        for (const auto& g : ps) s += kronecker(a, b, g, cfg) * sn_dim(g);
        c.expect(s == sn_dim(a) * sn_dim(b), "dimension sum at n = " + std::to_string(n));
      }
    }
  }
  int sw = 0;
  for (int n = 0; n <= kSchurWeylMaxSize; ++n) {
    for (const auto& l : partitions_of(n)) {
      for (int a = 1; a <= kSchurWeylMaxDim; ++a) {
        for (int b = 1; b <= kSchurWeylMaxDim; ++b) {
          ++sw;
          c.expect(verify_schur_weyl_dim(l, a, b, cfg).equal,
                   "Schur-Weyl dimension at " + l.to_string() + " " + std::to_string(a) + "x" + std::to_string(b));
        }
      }
    }
  }
  std::printf("    %d Schur-Weyl dimension checks\n", sw);
}

// 7 ------------------------------------------------------------------------
struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "kron-stab");
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> with(std::vector<std::string> prefix, const std::vector<std::string>& rest) {
  prefix.insert(prefix.end(), rest.begin(), rest.end());
  return prefix;
}

void engineering(Checker& c, const fs::path& schema_dir) {
  const auto dir = fs::temp_directory_path() / ("kronstab-accept-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  const std::vector<std::string> cache = {"--cache-dir", dir.string()};

  // Determinism across repeated runs and worker counts.
  const std::vector<std::vector<std::string>> commands = {
      {"kron", "6,6", "7,5", "6,4,2"},
      {"seq", "--kind", "kron", "--base", "6,6", "7,5", "6,4,2", "--dmax", "3", "--json"},
      {"chartable", "10", "--json"},
      {"stable-check", "--kind", "kron", "2,1", "2,1", "2,1", "--dmax", "4", "--json"},
      {"pleth", "3", "2", "--expand", "--csv"},
  };
  for (const auto& cmd : commands) {
    const auto base = cli(with({"--no-cache", "--threads", "1"}, cmd));
    c.expect(base.code == 0, "exit 0 for " + cmd.front());
    for (int threads : {1, 2, 4}) {
      for (int rep = 0; rep < 2; ++rep) {
        const auto again = cli(with({"--no-cache", "--threads", std::to_string(threads)}, cmd));
        c.expect(again.out == base.out, cmd.front() + " output differs with " + std::to_string(threads) + " threads");
      }
    }
  }

  // Cache round trip: cold build, warm read, and the table contents agree.
  const auto cold = cli(with(cache, {"chartable", "9", "--json"}));
  const bool written = fs::exists(cache::table_path(dir, 9));
  c.expect(written, "cache file written on cold run");
  const auto warm = cli(with(cache, {"chartable", "9", "--json"}));
  c.expect(cold.code == 0 && cold.out == warm.out, "cold and warm chartable output agree");
  Config cfg;
  cfg.cache_dir = dir;
  const auto from_disk = cache::read_table(cache::table_path(dir, 9), 9, cfg);
  c.expect(from_disk && *from_disk == compute_character_table(9, fresh()), "cached table equals a fresh build");

  // One invocation per exit-code class.
  c.expect(cli({"--no-cache", "kron", "2,1", "2,1", "2,1"}).code == 0, "exit 0");
  c.expect(cli({"--no-cache", "kron", "2,1", "2,1", "2"}).code == 1, "exit 1 on size mismatch");
  c.expect(cli({"--no-cache", "kron", "2,3", "2,1", "2,1"}).code == 1, "exit 1 on malformed partition");
  c.expect(cli({"no-such-command"}).code == 1, "exit 1 on unknown subcommand");
  c.expect(cli({"--no-cache", "--rank-cap", "20", "kron", "21", "21", "21"}).code == 2, "exit 2 on rank cap");
  c.expect(cli({"pleth", "5", "5", "25"}).code == 2, "exit 2 on plethysm cap");
  // A well-formed cache file with one wrong character value makes a
  // plethysm expansion negative.
  cli(with(cache, {"chartable", "4"}));
  const auto file4 = cache::table_path(dir, 4);
  {
    std::ifstream in(file4);
    std::string header, line;
    std::getline(in, header);
    std::vector<std::string> rows;
    while (std::getline(in, line)) rows.push_back(line);
    in.close();
    // chi_(2,2) at the identity: 2 becomes 1.
    auto row = nlohmann::ordered_json::parse(rows.at(2));
    auto& values = row.at("values");
    values[4] = values[4].is_string() ? nlohmann::ordered_json("1") : nlohmann::ordered_json(1);
    rows[2] = row.dump();
    std::ofstream out(file4, std::ios::trunc);
    out << header << '\n';
    for (const auto& r : rows) out << r << '\n';
  }
  const auto integrity = cli(with(cache, {"pleth", "2", "2", "--expand"}));
  c.expect(integrity.code == 3, "exit 3 on corrupted character data (got " + std::to_string(integrity.code) + ")");

  // Schema validation of machine-readable output.
  const schema::Validator validator(schema_dir);
  auto validate = [&](const std::string& schema_file, const CliResult& r, const std::string& what) {
    c.expect(r.code == 0, what + " exited " + std::to_string(r.code));
    if (r.code != 0) return;
    const auto errors = validator.validate(schema_file, nlohmann::json::parse(r.out));
    c.expect(errors.empty(), what + ": " + (errors.empty() ? "" : errors.front()));
  };
  const auto seq = cli({"--no-cache", "seq", "--kind", "kron", "--base", "6,6", "7,5", "6,4,2", "--dmax", "3", "--json"});
  validate("sequence.schema.json", seq, "seq kron");
  validate("sequence.schema.json",
           cli({"--no-cache", "seq", "--kind", "lr", "--base", "2,1", "1", "1,1", "--shift", "1", "1", "-", "--dmax", "4", "--json"}),
           "seq lr");
  validate("sequence.schema.json",
           cli({"--no-cache", "seq", "--kind", "pleth", "--base", "2", "2", "2,2", "--dmax", "3", "--json"}), "seq pleth");
  validate("fit.schema.json", cli({"fit", "--json"}, "1\n0\n2\n1\n3\n"), "fit period 2");
  validate("fit.schema.json", cli({"fit", "--json", "--json-in"}, seq.out), "fit from seq");
  validate("fit.schema.json", cli({"fit", "--json"}, "1\n0\n0\n0\n0\n"), "fit zero tail");
  validate("report.schema.json",
           cli({"--no-cache", "stable-check", "--kind", "kron", "2,1", "2,1", "2,1", "--dmax", "4", "--json"}),
           "report NotStable");
  validate("report.schema.json",
           cli({"--no-cache", "stable-check", "--kind", "kron", "1", "1", "1", "--shift", "2,1", "2,1", "3", "--json"}),
           "report CertifiedUpTo with shift");
  validate("report.schema.json",
           cli({"--no-cache", "stable-check", "--kind", "lr", "3,2,1", "2,1", "2,1", "--json"}), "report LR");
  validate("report.schema.json",
           cli({"--no-cache", "stable-check", "--kind", "pleth", "2", "2", "3,1", "--dmax", "2", "--json"}),
           "report plethysm");
  // The validator itself must reject a broken document.
  auto broken = nlohmann::json::parse(seq.out);
  broken["values"][0] = -1;
  c.expect(!validator.validate("sequence.schema.json", broken).empty(), "validator rejects a negative value");

  fs::remove_all(dir);
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path schema_dir = argc > 1 ? fs::path(argv[1]) : fs::path(KRONSTAB_SCHEMA_DIR);
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Checker&)> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "known-value regressions", known_values},
      {2, "period-2 diagonal quasi-polynomial", two_row_diagonal},
      {3, "stability verdicts and Murnaghan stabilization", stability_verdicts},
      {4, "Littlewood-Richardson suite", lr_suite},
      {5, "plethysm suite", plethysm_suite},
      {6, "oracle and identity suites", identity_suites},
      {7, "engineering contracts (determinism, cache, exit codes, schemas)",
       [&](Checker& c) { engineering(c, schema_dir); }},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.body(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double s = elapsed(t0);
    std::printf("criterion %d: %s  %s  [%d checks, %.2f s]%s\n", cr.id, c.ok() ? "PASS" : "FAIL", cr.title,
                c.checks(), s, c.ok() ? "" : c.summary().c_str());
    std::fflush(stdout);
    if (!c.ok()) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
