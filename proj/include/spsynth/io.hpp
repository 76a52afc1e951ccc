#pragma once

#include "spsynth/biquad.hpp"
#include "spsynth/classify.hpp"
#include "spsynth/fit.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace spsynth {

using json = nlohmann::json;

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw std::invalid_argument("expected a number or numeric string, got " + j.dump());
}

inline json poly_to_json(const Poly<Rational>& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_string(c));
  return a;
}

inline Poly<Rational> poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array of coefficients");
  std::vector<Rational> c;
  for (const auto& v : j) c.push_back(rational_from_json(v));
  return Poly<Rational>(std::move(c));
}

inline json rational_fn_to_json(const RationalFn<Rational>& f) {
  return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline std::string value_string(const Rational& v) { return to_string(v); }
inline std::string value_string(const Real& v) { return to_decimal(v); }
inline std::string value_string(double v) { return to_decimal(Real(v), 17); }

template <class T>
json network_to_json(const Network<T>& n) {
  if (n.is_element()) {
    const auto& e = n.as_element();
    return {{"type", "element"}, {"kind", std::string(1, kind_char(e.kind))}, {"value", value_string(e.value)}};
  }
  const auto& c = n.as_compound();
  json kids = json::array();
  for (const auto& k : c.children) kids.push_back(network_to_json(k));
  return {{"type", c.junction == Junction::Series ? "series" : "parallel"}, {"children", kids}};
}

inline Network<Rational> network_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw std::invalid_argument("netlist node needs a \"type\"");
  const std::string type = j.at("type").get<std::string>();
  if (type == "element") {
    if (!j.contains("kind") || !j.contains("value")) throw std::invalid_argument("element needs kind and value");
    return Network<Rational>::element(parse_kind(j.at("kind").get<std::string>()), rational_from_json(j.at("value")));
  }
  if (type != "series" && type != "parallel") throw std::invalid_argument("unknown netlist node type '" + type + "'");
  if (!j.contains("children") || !j.at("children").is_array() || j.at("children").size() < 2)
    throw std::invalid_argument(type + " node needs at least two children");
  std::vector<Network<Rational>> kids;
  for (const auto& c : j.at("children")) kids.push_back(network_from_json(c));
  return Network<Rational>::compose(type == "series" ? Junction::Series : Junction::Parallel, std::move(kids));
}

// A target is {"k","z","p"}, {"A".."F"} or {"num":[...],"den":[...]}.
struct Target {
  std::optional<CanonicalBiquad<Rational>> canonical;
  std::optional<GeneralBiquad<Rational>> general;
  RationalFn<Rational> fn;
};

inline Target target_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("target must be a JSON object");
  Target t;
  if (j.contains("k") || j.contains("z") || j.contains("p")) {
    for (const char* key : {"k", "z", "p"})
      if (!j.contains(key)) throw std::invalid_argument(std::string("target is missing \"") + key + "\"");
    t.canonical.emplace(rational_from_json(j.at("k")), rational_from_json(j.at("z")), rational_from_json(j.at("p")));
    t.fn = to_rational_fn(*t.canonical);
  } else if (j.contains("A")) {
    Rational v[6];
    const char* keys[] = {"A", "B", "C", "D", "E", "F"};
    for (int i = 0; i < 6; ++i) {
      if (!j.contains(keys[i])) throw std::invalid_argument(std::string("target is missing \"") + keys[i] + "\"");
      v[i] = rational_from_json(j.at(keys[i]));
    }
    t.general.emplace(v[0], v[1], v[2], v[3], v[4], v[5]);
    t.fn = to_rational_fn(*t.general);
  } else if (j.contains("num") && j.contains("den")) {
    Poly<Rational> den = poly_from_json(j.at("den"));
    if (den.is_zero()) throw std::invalid_argument("target denominator is zero");
    t.fn = RationalFn<Rational>(poly_from_json(j.at("num")), den);
  } else {
    throw std::invalid_argument("target needs k/z/p, A..F or num/den");
  }
  return t;
}

inline json decimal_json(const Real& v) { return to_decimal(v); }

inline json report_to_json(const RealizationReport& r, unsigned precision_bits) {
  json conds = json::array();
  for (const auto& c : r.conditions) {
    json e = {{"name", c.name}, {"value", to_decimal(c.value)}, {"pass", c.pass}};
    if (c.exact) e["exact"] = *c.exact;
    conds.push_back(e);
  }
  json out = {{"input", {{"k", r.k}, {"z", r.z}, {"p", r.p}}},
              {"class", kind_name(r.kind)},
              {"config", r.config ? json(config_name(*r.config)) : json(nullptr)},
              {"transform", r.via ? json(transform_name(*r.via)) : json(nullptr)},
              {"precision_bits", precision_bits},
              {"conditions", conds},
              {"network", r.network ? network_to_json(*r.network) : json(nullptr)},
              {"residual", r.residual ? decimal_json(*r.residual) : json(nullptr)}};
  if (!r.elements.empty()) {
    json el = json::object();
    for (const auto& [n, v] : r.elements) el[n] = to_decimal(v);
    out["elements"] = el;
  }
  return out;
}

inline json fit_to_json(const FitResult& f) {
  json vals = json::object();
  for (const auto& [n, v] : f.values) vals[n] = to_decimal(Real(v), 17);
  return {{"success", f.success}, {"residual", to_decimal(Real(f.residual), 6)}, {"iterations", f.iterations}, {"values", vals}};
}

inline json falsify_to_json(const FalsifyReport& rep) {
  json a = json::array();
  for (const auto& e : rep.entries) {
    json best = e.filtered ? json(nullptr) : json(to_decimal(Real(e.fit.residual), 6));
    a.push_back({{"topology", network_to_json(e.topology)},
                 {"elements", e.elements},
                 {"filtered", e.filtered},
                 {"best_residual", best},
                 {"success", e.fit.success}});
  }
  return a;
}

}  // namespace spsynth
