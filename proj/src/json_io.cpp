// Copyright 2026 The kron-stab Authors
// SPDX-License-Identifier: Apache-2.0
#include "kronstab/json_io.hpp"

#include "kronstab/errors.hpp"

namespace kronstab::json {

Json integer(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return to_decimal(v);
}

BigInt read_integer(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return BigInt(static_cast<unsigned long>(j.get<std::uint64_t>()));
    return BigInt(static_cast<long>(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_bigint(j.get<std::string>());
  throw ParseError("expected an integer, got " + j.dump());
}

Json partition(const Partition& p) { return Json(p.parts()); }

Partition read_partition(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a partition array, got " + j.dump());
  std::vector<int> parts;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError("partition entries must be integers: " + j.dump());
    parts.push_back(x.get<int>());
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json triple(const PartitionTriple& t) {
  return Json::array({partition(t.first), partition(t.second), partition(t.third)});
}

namespace {

PartitionTriple read_triple(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw ParseError("expected three partitions, got " + j.dump());
  return {read_partition(j[0]), read_partition(j[1]), read_partition(j[2])};
}

}  // namespace

Json sequence(const CoeffSequence& seq) {
  Json values = Json::array();
  for (const auto& v : seq.values) values.push_back(integer(v));
  Json out;
  out["kind"] = std::string(family_name(seq.kind));
  out["base"] = triple(seq.base);
  out["shift"] = triple(seq.shift);
  out["dmax"] = seq.dmax;
  out["values"] = std::move(values);
  return out;
}

CoeffSequence read_sequence(const Json& j) {
  try {
    CoeffSequence seq;
    seq.kind = parse_family(j.at("kind").get<std::string>());
    seq.base = read_triple(j.at("base"));
    seq.shift = read_triple(j.at("shift"));
    seq.dmax = j.at("dmax").get<int>();
    for (const auto& v : j.at("values")) seq.values.push_back(read_integer(v));
    if (static_cast<int>(seq.values.size()) != seq.dmax + 1) {
      throw ParseError("sequence has " + std::to_string(seq.values.size()) +
                       " values but dmax = " + std::to_string(seq.dmax));
    }
    return seq;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed sequence JSON: ") + e.what());
  }
}

Json quasi_polynomial(const QuasiPolynomial& q) {
  Json components = Json::array();
  for (const auto& c : q.components()) {
    Json coeffs = Json::array();
    for (const auto& x : c) coeffs.push_back(to_string(x));
    if (c.empty()) coeffs.push_back("0");
    components.push_back(std::move(coeffs));
  }
  Json out;
  out["period"] = q.period();
  out["components"] = std::move(components);
  return out;
}

QuasiPolynomial read_quasi_polynomial(const Json& j) {
  try {
    std::vector<std::vector<Rational>> components;
    for (const auto& c : j.at("components")) {
      std::vector<Rational> coeffs;
      for (const auto& x : c) coeffs.push_back(parse_rational(x.get<std::string>()));
      components.push_back(std::move(coeffs));
    }
    return QuasiPolynomial(j.at("period").get<int>(), std::move(components));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed quasi-polynomial JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json verdict(const Verdict& v) {
  Json out;
  out["type"] = std::string(verdict_name(v));
  if (const auto* ns = std::get_if<NotStable>(&v)) {
    out["reason"] = ns->reason == NotStable::Reason::kBaseVanishes ? "base_vanishes" : "diagonal_not_one";
    out["witness_d"] = ns->witness_d;
    out["witness_value"] = integer(ns->witness_value);
  } else if (const auto* cert = std::get_if<CertifiedUpTo>(&v)) {
    out["dmax"] = cert->dmax;
  }
  return out;
}

Json report(const StabilityReport& r) {
  Json diagonal = Json::array();
  for (const auto& v : r.diagonal_values) diagonal.push_back(integer(v));
  Json out;
  out["kind"] = std::string(family_name(r.kind));
  out["triple"] = triple(r.triple);
  out["verdict"] = verdict(r.verdict);
  out["g_base"] = integer(r.g_base);
  out["diagonal_values"] = std::move(diagonal);
  if (r.stable_value) {
    out["stable_value"] = Json{{"value", integer(r.stable_value->value)},
                               {"onset", r.stable_value->onset},
                               {"heuristic", true}};
  } else {
    out["stable_value"] = nullptr;
  }
  if (r.shifted) out["shifted"] = sequence(*r.shifted);
  return out;
}

Json schur_expansion(const SchurExpansion& e) {
  Json out = Json::array();
  for (auto it = e.terms.rbegin(); it != e.terms.rend(); ++it) {
    out.push_back(Json{{"partition", partition(it->first)}, {"coeff", to_decimal(it->second)}});
  }
  return out;
}

}  // namespace kronstab::json
