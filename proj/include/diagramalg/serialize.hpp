#pragma once

#include <string>

#include "json.hpp"

#include "diagramalg/exactlin/algebra.hpp"
#include "diagramalg/juyumaya.hpp"
#include "diagramalg/presented.hpp"
#include "diagramalg/smallram.hpp"

namespace diagramalg {

using nlohmann::json;

inline constexpr const char* schema_version = "diagramalg/1";

inline json document(const std::string& kind) { return json{{"schema", schema_version}, {"kind", kind}}; }

template <class F>
json element_json(const FiniteDimAlgebra<F>& a, const AlgebraElement<F>& x) {
  json out = json::object();
  for (const auto& [k, c] : x) out[a.labels().at(k)] = to_string(c);
  return out;
}

inline json to_json(const SemisimplicityCertificate& c) {
  json j = document("semisimplicity");
  j["algebra"] = c.algebra;
  j["dim"] = c.dim;
  j["gram_rank"] = c.gram_rank;
  j["radical_dim"] = c.radical_dim;
  j["method"] = to_string(c.method);
  j["semisimple"] = c.semisimple();
  if (c.method == RankMethod::modular) j["primes"] = c.primes;
  if (c.center_dim) j["center_dim"] = *c.center_dim;
  return j;
}

inline json monoid_table_json(const SmallRamifiedMonoid& m) {
  json j = document("smallram_table");
  j["n"] = m.n();
  j["dim"] = m.size();
  j["identity"] = m.identity_index();
  json elems = json::array();
  for (std::uint32_t k = 0; k < m.size(); ++k) {
    const auto e = m.element(k);
    elems.push_back({{"index", k}, {"w", e.w.to_string()}, {"b", format(e.b.quotient())}, {"diagram", m.label(k)}});
  }
  j["elements"] = std::move(elems);
  json table = json::array();
  for (std::uint32_t x = 0; x < m.size(); ++x) {
    std::vector<std::uint32_t> row(m.size());
    for (std::uint32_t y = 0; y < m.size(); ++y) row[y] = m.multiply(x, y);
    table.push_back(std::move(row));
  }
  j["table"] = std::move(table);
  return j;
}

inline json to_json(const MonoidCheckReport& r) {
  json j = document("smallram_check");
  j["n"] = r.n;
  j["exhaustive"] = r.exhaustive;
  j["pairs"] = r.pairs;
  j["closure_failures"] = r.closure_failures;
  j["removed_components"] = r.removed_components;
  j["oracle_mismatches"] = r.oracle_mismatches;
  j["triples"] = r.triples;
  j["associativity_failures"] = r.associativity_failures;
  j["passed"] = r.passed();
  return j;
}

inline json to_json(const RelationReport<Rational>& r, const FiniteDimAlgebra<Rational>& target) {
  json j = document("relation_report");
  j["n"] = r.n;
  j["target"] = r.target;
  j["u"] = to_string(r.u_value);
  j["passed"] = r.passed_count();
  j["total"] = r.checks.size();
  j["all_passed"] = r.all_passed();
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"relation", c.name}, {"indices", c.indices}, {"passed", c.passed}};
    if (!c.passed) e["residual"] = element_json(target, c.residual);
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  return j;
}

template <class F>
json to_json(const CompletedSystem<F>& c) {
  const auto& ab = c.system.alphabet();
  json j = document("completion");
  j["n"] = ab.n();
  j["degree_bound"] = c.system.degree_bound();
  j["dimension"] = c.dimension();
  json rules = json::array();
  for (const auto& r : c.system.rules()) rules.push_back({{"lead", ab.format(r.lead)}, {"rule", r.polynomial().to_string(ab)}});
  j["rules"] = std::move(rules);
  json words = json::array();
  for (const auto& w : c.normal_words) words.push_back(ab.format(w));
  j["normal_words"] = std::move(words);
  j["stats"] = {{"rounds", c.stats.rounds},
                {"overlaps_checked", c.stats.overlaps_checked},
                {"rules_added", c.stats.rules_added},
                {"max_overlap_length", c.stats.max_overlap_length}};
  return j;
}

inline json to_json(const IsoCertificate& c) {
  json j = document("isomorphism_certificate");
  j["n"] = c.n;
  j["status"] = c.passed() ? "PASS" : "FAILED";
  j["formula_dim"] = c.formula_dim;
  j["target_dim"] = c.target_dim;
  j["closure_dim"] = c.closure_dim;
  if (c.normal_words) j["normal_words"] = *c.normal_words;
  j["relations"] = {{"passed", c.relations_passed}, {"total", c.relations_checked}};
  j["products"] = {{"matched", c.product_matches}, {"total", c.product_checks}};
  json legs = json::array();
  for (const auto& l : c.legs)
    legs.push_back({{"leg", l.name}, {"ran", l.ran}, {"passed", l.passed}, {"detail", l.detail}});
  j["legs"] = std::move(legs);
  return j;
}

inline json to_json(const ScanReport& r) {
  json j = document("semisimplicity_scan");
  j["n"] = r.n;
  j["seed"] = r.seed;
  j["dim"] = r.dim;
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"u0", to_string(s.u0)}, {"semisimple", s.semisimple}, {"gram_rank", s.gram_rank},
                       {"radical_dim", s.radical_dim}});
  j["samples"] = std::move(samples);
  json redrawn = json::array();
  for (const auto& u : r.redrawn) redrawn.push_back(to_string(u));
  j["redrawn"] = std::move(redrawn);
  j["all_semisimple"] = r.all_semisimple();
  if (r.gram_determinant) {
    j["gram_determinant"] = r.gram_determinant->to_string();
    json zeros = json::array();
    for (const auto& z : r.determinant_zeros) zeros.push_back(to_string(z));
    j["determinant_zeros"] = std::move(zeros);
  }
  return j;
}

}  // namespace diagramalg
