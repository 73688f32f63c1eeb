#pragma once

// Structured output. Every document carries a "schema" tag; keys are emitted
// in a fixed order so identical inputs serialize byte-identically.

#include <string>

#include "json.hpp"

#include "ccig/audit.hpp"
#include "ccig/char_table.hpp"
#include "ccig/classify.hpp"
#include "ccig/spectra.hpp"

namespace ccig {

using Json = nlohmann::ordered_json;

inline Json to_json(const Route& r) {
  Json j;
  j["route"] = r.name;
  j["verdict"] = r.verdict ? Json(*r.verdict) : Json(nullptr);
  j["detail"] = r.detail;
  Json ev = Json::object();
  for (const auto& [k, v] : r.evidence) ev[k] = v;
  j["evidence"] = ev;
  return j;
}

inline Json to_json(const Verdict& v) {
  Json j;
  j["value"] = v.value;
  j["routes_agree"] = v.routes_agree();
  j["routes"] = Json::array();
  for (const auto& r : v.routes) j["routes"].push_back(to_json(r));
  return j;
}

inline Json to_json(const Discrepancy& d) {
  return Json{{"group", d.group}, {"property", d.property}, {"detail", d.detail}};
}

inline Json to_json(const ClassificationReport& r) {
  Json j;
  j["group"] = r.group;
  j["order"] = r.order;
  j["exponent"] = r.exponent;
  j["element_orders"] = r.element_orders;
  j["classes"] = r.class_count;
  j["real_classes"] = r.real_class_count;
  j["abelian"] = r.abelian;
  j["nilpotent"] = r.nilpotent;
  j["seed"] = r.seed;
  Json v;
  v["rational"] = to_json(r.rational);
  v["semi_rational"] = to_json(r.semi_rational);
  v["inverse_semi_rational"] = to_json(r.inverse_semi_rational);
  v["nci"] = to_json(r.nci);
  v["fcci"] = to_json(r.fcci);
  v["cci"] = to_json(r.cci);
  v["ci"] = to_json(r.ci);
  j["verdicts"] = v;
  j["semi_rational_exponents"] = r.semi_rational_exponents;
  j["gamma_chi_plus_conj"] = Json::array();
  for (const auto& g : r.gamma)
    j["gamma_chi_plus_conj"].push_back(
        Json{{"character", g.character}, {"integral", g.integral}, {"colour", g.colour}, {"note", g.note}});
  j["caps_hit"] = r.caps_hit;
  j["discrepancies"] = Json::array();
  for (const auto& d : r.discrepancies) j["discrepancies"].push_back(to_json(d));
  return j;
}

inline Json classification_document(const ClassificationReport& r) {
  Json j;
  j["schema"] = "ccig.classification/1";
  j["report"] = to_json(r);
  return j;
}

inline Json to_json(const AuditReport& a) {
  Json j;
  j["schema"] = "ccig.audit/1";
  j["suite"] = a.suite;
  j["seed"] = a.seed;
  j["groups"] = Json::array();
  for (const auto& g : a.groups) j["groups"].push_back(to_json(g));
  j["checks"] = Json::array();
  for (const auto& c : a.checks)
    j["checks"].push_back(Json{{"check", c.check}, {"group", c.group}, {"holds", c.holds}, {"detail", c.detail}});
  j["annotations"] = Json::array();
  for (const auto& an : a.annotations) {
    Json f = Json::object();
    for (const auto& [k, v] : an.fields) f[k] = v;
    j["annotations"].push_back(Json{{"topic", an.topic}, {"fields", f}});
  }
  j["discrepancies"] = Json::array();
  for (const auto& d : a.discrepancies) j["discrepancies"].push_back(to_json(d));
  j["summary"] = Json{{"groups", a.groups.size()}, {"checks", a.checks.size()}, {"discrepancies", a.discrepancies.size()}};
  return j;
}

inline Json to_json(const SpectrumReport& s) {
  Json j;
  j["charpoly"] = s.charpoly.to_string();
  j["integer_eigenvalues"] = Json::array();
  for (const auto& [v, m] : s.integer_eigenvalues)
    j["integer_eigenvalues"].push_back(Json{{"value", v.str()}, {"multiplicity", m}});
  j["residual"] = s.residual.to_string();
  j["residual_factored"] = factored_string(s.residual);
  j["is_integral"] = s.is_integral;
  return j;
}

inline Json to_json(const CharacterTable& T) {
  Json j;
  j["schema"] = "ccig.chartable/1";
  j["group"] = T.group_name;
  j["order"] = T.group_order;
  j["conductor"] = T.conductor;
  j["prime"] = T.prime;
  j["class_sizes"] = T.class_sizes;
  j["representatives"] = T.representatives;
  j["element_orders"] = T.class_element_orders;
  j["degrees"] = T.degrees;
  j["values"] = Json::array();
  for (const auto& row : T.values) {
    Json r = Json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    j["values"].push_back(r);
  }
  return j;
}

}  // namespace ccig
