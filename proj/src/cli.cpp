// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "kronstab/characters.hpp"
#include "kronstab/coefficients.hpp"
#include "kronstab/errors.hpp"
#include "kronstab/json_io.hpp"
#include "kronstab/stability.hpp"

namespace kronstab::cli {
namespace {

enum class Mode { kTable, kJson, kCsv };

struct Session {
  Config cfg;
  Mode mode = Mode::kTable;
  std::istream* in = nullptr;
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::vector<Partition> parse_all(const std::vector<std::string>& texts) {
  std::vector<Partition> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_partition(t));
  return out;
}

void print_json(Session& s, const json::Json& j) { *s.out << j.dump() << '\n'; }

// kron / lr / pleth ---------------------------------------------------------

void emit_coefficient(Session& s, Family kind, const std::vector<Partition>& p, const BigInt& value) {
  switch (s.mode) {
    case Mode::kTable:
      *s.out << to_decimal(value) << '\n';
      break;
    case Mode::kJson: {
      json::Json j;
      j["kind"] = std::string(family_name(kind));
      j["triple"] = json::triple({p[0], p[1], p[2]});
      j["value"] = to_decimal(value);
      print_json(s, j);
      break;
    }
    case Mode::kCsv:
      *s.out << "kind,first,second,third,value\n"
             << family_name(kind) << ',' << csv_field(p[0].to_string()) << ','
             << csv_field(p[1].to_string()) << ',' << csv_field(p[2].to_string()) << ','
             << to_decimal(value) << '\n';
      break;
  }
}

void emit_expansion(Session& s, const std::vector<Partition>& p, const SchurExpansion& e) {
  switch (s.mode) {
    case Mode::kTable:
      for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        *s.out << to_decimal(it->second) << '\t' << it->first.to_string() << '\n';
      }
      break;
    case Mode::kJson: {
      json::Json j;
      j["kind"] = "plethysm";
      j["outer"] = json::partition(p[0]);
      j["inner"] = json::partition(p[1]);
      j["expansion"] = json::schur_expansion(e);
      print_json(s, j);
      break;
    }
    case Mode::kCsv:
      *s.out << "partition,coeff\n";
      for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
        *s.out << csv_field(it->first.to_string()) << ',' << to_decimal(it->second) << '\n';
      }
      break;
  }
}

// chartable -----------------------------------------------------------------

void emit_table(Session& s, const CharacterTable& table) {
  const auto& classes = table.classes();
  switch (s.mode) {
    case Mode::kTable: {
      std::vector<std::vector<std::string>> cells;
      cells.push_back({"lambda\\mu"});
      for (const auto& c : classes) cells.back().push_back(c.shape.to_string());
      for (std::size_t r = 0; r < table.shapes().size(); ++r) {
        cells.push_back({table.shapes()[r].to_string()});
        for (const auto& v : table.rows()[r]) cells.back().push_back(to_decimal(v));
      }
      std::vector<std::size_t> width(cells.front().size(), 0);
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
      }
      for (const auto& row : cells) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) *s.out << "  ";
          *s.out << std::string(width[i] - row[i].size(), ' ') << row[i];
        }
        *s.out << '\n';
      }
      break;
    }
    case Mode::kJson: {
      json::Json j;
      j["n"] = table.n();
      j["class_order"] = "revlex";
      json::Json cls = json::Json::array();
      for (const auto& c : classes) {
        cls.push_back(json::Json{{"shape", json::partition(c.shape)},
                                 {"z", to_decimal(c.z)},
                                 {"class_size", to_decimal(c.class_size)}});
      }
      j["classes"] = std::move(cls);
      json::Json rows = json::Json::array();
      for (std::size_t r = 0; r < table.shapes().size(); ++r) {
        json::Json values = json::Json::array();
        for (const auto& v : table.rows()[r]) values.push_back(to_decimal(v));
        rows.push_back(json::Json{{"lambda", json::partition(table.shapes()[r])},
                                  {"values", std::move(values)}});
      }
      j["rows"] = std::move(rows);
      print_json(s, j);
      break;
    }
    case Mode::kCsv:
      *s.out << "lambda";
      for (const auto& c : classes) *s.out << ',' << csv_field(c.shape.to_string());
      *s.out << '\n';
      for (std::size_t r = 0; r < table.shapes().size(); ++r) {
        *s.out << csv_field(table.shapes()[r].to_string());
        for (const auto& v : table.rows()[r]) *s.out << ',' << to_decimal(v);
        *s.out << '\n';
      }
      break;
  }
}

// seq -----------------------------------------------------------------------

void emit_sequence(Session& s, const CoeffSequence& seq) {
  switch (s.mode) {
    case Mode::kTable:
      *s.out << "# " << family_name(seq.kind) << " base " << seq.base.first.to_string() << ' '
             << seq.base.second.to_string() << ' ' << seq.base.third.to_string() << " shift "
             << seq.shift.first.to_string() << ' ' << seq.shift.second.to_string() << ' '
             << seq.shift.third.to_string() << '\n';
      *s.out << "d\tvalue\n";
      for (std::size_t d = 0; d < seq.values.size(); ++d) {
        *s.out << d << '\t' << to_decimal(seq.values[d]) << '\n';
      }
      break;
    case Mode::kJson:
      print_json(s, json::sequence(seq));
      break;
    case Mode::kCsv:
      *s.out << "d,value\n";
      for (std::size_t d = 0; d < seq.values.size(); ++d) {
        *s.out << d << ',' << to_decimal(seq.values[d]) << '\n';
      }
      break;
  }
}

// stable-check --------------------------------------------------------------

std::string join(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += to_decimal(values[i]);
  }
  return out;
}

std::string describe(const Verdict& v) {
  if (const auto* ns = std::get_if<NotStable>(&v)) {
    if (ns->reason == NotStable::Reason::kBaseVanishes) return "NotStable (base coefficient is 0)";
    return "NotStable (diagonal value " + to_decimal(ns->witness_value) + " at d = " +
           std::to_string(ns->witness_d) + ")";
  }
  if (const auto* c = std::get_if<CertifiedUpTo>(&v)) {
    return "CertifiedUpTo(" + std::to_string(c->dmax) +
           ") (diagonal is 1 for 1 <= d <= " + std::to_string(c->dmax) +
           "; not a proof of stability)";
  }
  if (std::holds_alternative<DecidedStable>(v)) return "DecidedStable (coefficient is 1)";
  return "DecidedNotStable (coefficient is not 1)";
}

void emit_report(Session& s, const StabilityReport& r) {
  switch (s.mode) {
    case Mode::kTable:
      *s.out << "kind: " << family_name(r.kind) << '\n'
             << "triple: " << r.triple.first.to_string() << ' ' << r.triple.second.to_string() << ' '
             << r.triple.third.to_string() << '\n'
             << "base coefficient: " << to_decimal(r.g_base) << '\n'
             << "diagonal d=0.." << r.diagonal_values.size() - 1 << ": " << join(r.diagonal_values)
             << '\n'
             << "verdict: " << describe(r.verdict) << '\n';
      if (r.shifted) {
        *s.out << "shifted d=0.." << r.shifted->dmax << ": " << join(r.shifted->values) << '\n';
        if (r.stable_value) {
          *s.out << "stable value: " << to_decimal(r.stable_value->value) << " from d = "
                 << r.stable_value->onset << " (heuristic: constant tail)\n";
        } else {
          *s.out << "stable value: not observed\n";
        }
      }
      break;
    case Mode::kJson:
      print_json(s, json::report(r));
      break;
    case Mode::kCsv:
      *s.out << "field,value\n"
             << "kind," << family_name(r.kind) << '\n'
             << "first," << csv_field(r.triple.first.to_string()) << '\n'
             << "second," << csv_field(r.triple.second.to_string()) << '\n'
             << "third," << csv_field(r.triple.third.to_string()) << '\n'
             << "verdict," << verdict_name(r.verdict) << '\n'
             << "base_coefficient," << to_decimal(r.g_base) << '\n';
      for (std::size_t d = 0; d < r.diagonal_values.size(); ++d) {
        *s.out << "diagonal_" << d << ',' << to_decimal(r.diagonal_values[d]) << '\n';
      }
      if (const auto* ns = std::get_if<NotStable>(&r.verdict)) {
        *s.out << "witness_d," << ns->witness_d << '\n'
               << "witness_value," << to_decimal(ns->witness_value) << '\n';
      }
      break;
  }
}

// fit -----------------------------------------------------------------------

std::vector<BigInt> read_value_lines(std::istream& in) {
  std::vector<BigInt> values;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    try {
      values.push_back(parse_bigint(std::string_view(line).substr(first, last - first + 1)));
    } catch (const ParseError&) {
      throw ParseError("fit input line " + std::to_string(lineno) + " is not an integer: '" + line + "'");
    }
  }
  return values;
}

std::string polynomial_text(const std::vector<Rational>& coeffs) {
  if (coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    std::string term = to_string(coeffs[i]);
    if (i == 1) term += "*d";
    if (i > 1) term += "*d^" + std::to_string(i);
    if (!out.empty()) out += " + ";
    out += term;
  }
  return out;
}

void emit_fit(Session& s, const std::vector<BigInt>& values, const QuasiPolynomialFit& fit,
              long long scan_dmax) {
  const int krull = krull_estimate(fit.q);
  const auto violations = reciprocity_scan(fit.q, scan_dmax);
  switch (s.mode) {
    case Mode::kTable:
      *s.out << "values: " << join(values) << '\n'
             << "valid from d = " << fit.first_index << '\n'
             << "period: " << fit.q.period() << '\n'
             << "degree: " << fit.q.degree() << '\n';
      for (int j = 0; j < fit.q.period(); ++j) {
        *s.out << "component " << j << " (d = " << j << " mod " << fit.q.period()
               << "): " << polynomial_text(fit.q.components()[j]) << '\n';
      }
      if (!fit.fully_verified) {
        *s.out << "note: some residue classes had no spare sample; their components are "
                  "interpolated, not checked\n";
      }
      *s.out << "krull estimate: " << krull << " (estimate from finitely many values)\n";
      *s.out << "reciprocity scan d=1.." << scan_dmax << ": ";
      if (violations.empty()) {
        *s.out << "no violations\n";
      } else {
        *s.out << violations.size() << " violation(s)\n";
        for (const auto& v : violations) {
          *s.out << "  d = " << v.d << ": p(d) = " << to_string(v.at_d)
                 << " < |p(-d)| = |" << to_string(v.at_minus_d) << "|\n";
        }
      }
      break;
    case Mode::kJson: {
      json::Json vals = json::Json::array();
      for (const auto& v : values) vals.push_back(json::integer(v));
      json::Json viol = json::Json::array();
      for (const auto& v : violations) {
        viol.push_back(json::Json{
            {"d", v.d}, {"p_d", to_string(v.at_d)}, {"p_minus_d", to_string(v.at_minus_d)}});
      }
      json::Json j;
      j["values"] = std::move(vals);
      j["first_index"] = fit.first_index;
      j["quasi_polynomial"] = json::quasi_polynomial(fit.q);
      j["fully_verified"] = fit.fully_verified;
      j["krull_estimate"] = krull;
      j["reciprocity_scan"] = json::Json{{"dmax", scan_dmax}, {"violations", std::move(viol)}};
      print_json(s, j);
      break;
    }
    case Mode::kCsv:
      *s.out << "residue,coefficients\n";
      for (int j = 0; j < fit.q.period(); ++j) {
        std::string coeffs;
        for (const auto& c : fit.q.components()[j]) {
          if (!coeffs.empty()) coeffs += ' ';
          coeffs += to_string(c);
        }
        *s.out << j << ',' << (coeffs.empty() ? "0" : coeffs) << '\n';
      }
      break;
  }
}

// cache ---------------------------------------------------------------------

int cache_command(Session& s, const std::string& action) {
  const auto dir = resolve_cache_dir(s.cfg);
  if (action == "path") {
    *s.out << dir.string() << '\n';
    return kSuccess;
  }
  if (action == "clear") {
    int removed = 0;
    std::error_code ec;
    if (std::filesystem::is_directory(dir, ec)) {
      for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        const auto name = entry.path().filename().string();
        if (name.rfind("sn_chars_v1_n", 0) == 0) {
          std::filesystem::remove(entry.path());
          ++removed;
        }
      }
    }
    *s.out << "removed " << removed << " cache file(s) from " << dir.string() << '\n';
    return kSuccess;
  }
  throw ParseError("unknown cache action '" + action + "' (expected path or clear)");
}

Family parse_kind(const std::string& text) { return parse_family(text); }

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Session s;
  s.in = &in;
  s.out = &out;
  s.err = &err;

  CLI::App app{"Exact Kronecker, Littlewood-Richardson and plethysm coefficients, and stability "
               "analysis of stretched coefficient sequences."};
  app.name("kron-stab");
  app.require_subcommand(1);
  app.fallthrough();

  bool as_json = false, as_csv = false, no_cache = false;
  std::string cache_dir;
  auto* json_flag = app.add_flag("--json", as_json, "JSON output");
  app.add_flag("--csv", as_csv, "CSV output")->excludes(json_flag);
  app.add_option("--cache-dir", cache_dir, "Character cache directory");
  app.add_flag("--no-cache", no_cache, "Disable character cache reads and writes");
  app.add_option("--rank-cap", s.cfg.rank_cap, "Largest symmetric-group rank to compute")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", s.cfg.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  std::vector<std::string> positional;
  auto add_partitions = [&](CLI::App* sub, int count, const std::string& what) {
    sub->add_option("partitions", positional, what)->expected(count)->required();
  };

  auto* kron = app.add_subcommand("kron", "Kronecker coefficient g(lambda, mu, nu)");
  add_partitions(kron, 3, "lambda mu nu");
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient c^lambda_{mu,nu}");
  add_partitions(lr, 3, "lambda mu nu");
  auto* pleth = app.add_subcommand("pleth", "Plethysm coefficient: multiplicity of S_nu in S_lambda o S_mu");
  bool expand = false;
  pleth->add_option("partitions", positional, "lambda mu nu (or lambda mu with --expand)")
      ->expected(2, 3)
      ->required();
  pleth->add_flag("--expand", expand, "Print the whole Schur expansion of s_lambda[s_mu]");
  auto* chr = app.add_subcommand("char", "Character value chi_lambda(mu)");
  add_partitions(chr, 2, "lambda mu");
  auto* chartable = app.add_subcommand("chartable", "Character table of S_n");
  int table_n = 0;
  chartable->add_option("n", table_n, "rank")->required()->check(CLI::NonNegativeNumber);

  std::string kind_text = "kron";
  std::vector<std::string> base_text, shift_text;
  int dmax = -1;
  int window = 3;
  auto* seq = app.add_subcommand("seq", "Stretched coefficient sequence for d = 0..dmax");
  seq->add_option("--kind", kind_text, "kron, lr or pleth");
  seq->add_option("--base", base_text, "alpha beta gamma")->expected(3)->required();
  seq->add_option("--shift", shift_text, "lambda mu nu")->expected(3);
  seq->add_option("--dmax", dmax, "Largest d")->required()->check(CLI::NonNegativeNumber);

  auto* stable = app.add_subcommand("stable-check", "Stability verdict for a triple");
  stable->add_option("--kind", kind_text, "kron, lr or pleth");
  add_partitions(stable, 3, "alpha beta gamma");
  stable->add_option("--dmax", dmax, "Diagonal horizon (default 6)")->check(CLI::PositiveNumber);
  stable->add_option("--shift", shift_text, "Also compute a shifted sequence lambda mu nu")->expected(3);
  stable->add_option("--window", window, "Stabilization window")->check(CLI::PositiveNumber);

  auto* fit = app.add_subcommand("fit", "Fit a quasi-polynomial to values (one per line, d = 0 first)");
  int period_max = 6;
  std::string input_file;
  bool json_in = false;
  fit->add_option("--period-max", period_max, "Largest period tried")->check(CLI::PositiveNumber);
  fit->add_option("--input", input_file, "Read values from FILE instead of stdin");
  fit->add_flag("--json-in", json_in, "Input is a sequence JSON object (as printed by seq --json)");
  fit->add_option("--dmax", dmax, "Reciprocity scan range (default: last index)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify-sw", "Check dim S_lambda(C^ab) against Kronecker coefficients");
  std::string verify_lambda;
  int dim_a = 0, dim_b = 0;
  verify->add_option("lambda", verify_lambda)->required();
  verify->add_option("a", dim_a)->required();
  verify->add_option("b", dim_b)->required();

  auto* cache = app.add_subcommand("cache", "Character cache maintenance");
  std::string cache_action;
  cache->add_option("action", cache_action, "path or clear")->required();

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const auto& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    for (std::size_t i = 1; i < argv.size(); ++i) {
      const auto& a = argv[i];
      if (a == "--cache-dir" || a == "--rank-cap" || a == "--threads") {
        ++i;
        continue;
      }
      if (a.empty() || a[0] == '-') continue;
      if (app.get_subcommand_no_throw(a) == nullptr) {
        err << "usage error: unknown subcommand '" << a << "'\n";
        return kUsage;
      }
      break;
    }
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  s.mode = as_json ? Mode::kJson : (as_csv ? Mode::kCsv : Mode::kTable);
  s.cfg.use_cache = !no_cache;
  if (!cache_dir.empty()) s.cfg.cache_dir = cache_dir;
  s.cfg.warn = [&err](const std::string& msg) { err << "warning: " << msg << '\n'; };
  const auto started = std::chrono::steady_clock::now();
  auto last_report = started;
  s.cfg.progress = [&err, started, &last_report](long long done, long long total) {
    const auto now = std::chrono::steady_clock::now();
    if (now - started < std::chrono::seconds(5) || now - last_report < std::chrono::seconds(5)) return;
    last_report = now;
    err << "progress: " << done << '/' << total << " subtrees\n";
  };

  try {
    if (kron->parsed()) {
      auto p = parse_all(positional);
      emit_coefficient(s, Family::kKronecker, p, kronecker(p[0], p[1], p[2], s.cfg));
    } else if (lr->parsed()) {
      auto p = parse_all(positional);
      emit_coefficient(s, Family::kLittlewoodRichardson, p, littlewood_richardson(p[0], p[1], p[2]));
    } else if (pleth->parsed()) {
      auto p = parse_all(positional);
      if (expand) {
        if (p.size() != 2) throw ParseError("pleth --expand takes exactly two partitions");
        emit_expansion(s, p, plethysm_expansion(p[0], p[1], s.cfg));
      } else {
        if (p.size() != 3) throw ParseError("pleth takes three partitions (or two with --expand)");
        emit_coefficient(s, Family::kPlethysm, p, plethysm_coeff(p[0], p[1], p[2], s.cfg));
      }
    } else if (chr->parsed()) {
      auto p = parse_all(positional);
      if (p[0].size() > s.cfg.rank_cap) {
        throw RefusalError("rank " + std::to_string(p[0].size()) + " exceeds the rank cap " +
                           std::to_string(s.cfg.rank_cap));
      }
      const BigInt value = mn_character(p[0], p[1]);
      if (s.mode == Mode::kJson) {
        json::Json j;
        j["lambda"] = json::partition(p[0]);
        j["mu"] = json::partition(p[1]);
        j["value"] = to_decimal(value);
        print_json(s, j);
      } else if (s.mode == Mode::kCsv) {
        out << "lambda,mu,value\n"
            << csv_field(p[0].to_string()) << ',' << csv_field(p[1].to_string()) << ','
            << to_decimal(value) << '\n';
      } else {
        out << to_decimal(value) << '\n';
      }
    } else if (chartable->parsed()) {
      emit_table(s, character_table(table_n, s.cfg));
    } else if (seq->parsed()) {
      auto base = parse_all(base_text);
      PartitionTriple shift;
      if (!shift_text.empty()) {
        auto sh = parse_all(shift_text);
        shift = {sh[0], sh[1], sh[2]};
      }
      emit_sequence(s, coefficient_sequence(parse_kind(kind_text), {base[0], base[1], base[2]}, shift,
                                            dmax, s.cfg));
    } else if (stable->parsed()) {
      auto p = parse_all(positional);
      const int horizon = dmax < 0 ? 6 : dmax;
      std::optional<ShiftRequest> shift;
      if (!shift_text.empty()) {
        auto sh = parse_all(shift_text);
        shift = ShiftRequest{{sh[0], sh[1], sh[2]}, horizon, window};
      }
      StabilityReport report;
      switch (parse_kind(kind_text)) {
        case Family::kKronecker:
          report = kronecker_stability(p[0], p[1], p[2], horizon, s.cfg, shift);
          break;
        case Family::kLittlewoodRichardson:
          report = lr_stability(p[0], p[1], p[2], s.cfg, shift);
          break;
        case Family::kPlethysm:
          report = plethysm_stability(p[0], p[1], p[2], horizon, s.cfg, shift);
          break;
      }
      emit_report(s, report);
    } else if (fit->parsed()) {
      std::ifstream file;
      std::istream* source = s.in;
      if (!input_file.empty()) {
        file.open(input_file);
        if (!file) throw ParseError("cannot open input file '" + input_file + "'");
        source = &file;
      }
      std::vector<BigInt> values;
      if (json_in) {
        std::stringstream buffer;
        buffer << source->rdbuf();
        json::Json j;
        try {
          j = json::Json::parse(buffer.str());
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(std::string("fit --json-in: ") + e.what());
        }
        values = json::read_sequence(j).values;
      } else {
        values = read_value_lines(*source);
      }
      if (values.empty()) throw ParseError("fit needs at least one value");
      QuasiPolynomialFit result;
      try {
        result = fit_quasipolynomial(values, period_max, 0);
      } catch (const NoFitError&) {
        // Hilbert functions of rings with trivial positive part vanish only
        // from d = 1 on; retry without the d = 0 value.
        if (values.size() < 3) throw;
        std::vector<BigInt> tail(values.begin() + 1, values.end());
        result = fit_quasipolynomial(tail, period_max, 1);
      }
      const long long scan = dmax > 0 ? dmax : std::max<long long>(1, static_cast<long long>(values.size()) - 1);
      emit_fit(s, values, result, scan);
    } else if (verify->parsed()) {
      const auto report = verify_schur_weyl_dim(parse_partition(verify_lambda), dim_a, dim_b, s.cfg);
      if (s.mode == Mode::kJson) {
        json::Json j;
        j["lambda"] = json::partition(parse_partition(verify_lambda));
        j["a"] = dim_a;
        j["b"] = dim_b;
        j["lhs"] = to_decimal(report.lhs);
        j["rhs"] = to_decimal(report.rhs);
        j["equal"] = report.equal;
        print_json(s, j);
      } else if (s.mode == Mode::kCsv) {
        out << "lhs,rhs,equal\n"
            << to_decimal(report.lhs) << ',' << to_decimal(report.rhs) << ','
            << (report.equal ? "true" : "false") << '\n';
      } else {
        out << "lhs: " << to_decimal(report.lhs) << '\n'
            << "rhs: " << to_decimal(report.rhs) << '\n'
            << "equal: " << (report.equal ? "true" : "false") << '\n';
      }
    } else if (cache->parsed()) {
      return cache_command(s, cache_action);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const RefusalError& e) {
    err << "refused: " << e.what() << '\n';
    return kRefused;
  } catch (const NoFitError& e) {
    err << "no fit: " << e.what() << '\n';
    return kRefused;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << '\n';
    return kIntegrity;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kIntegrity;
  }
  return kSuccess;
}

}  // namespace kronstab::cli
