#pragma once

#include "spsynth/synthesis.hpp"
#include "spsynth/verify.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spsynth {

enum class RealizationKind { NotPositiveReal, FourElement, FiveElement, SevenElementCatalog, UnknownWithinScope };

inline const char* kind_name(RealizationKind k) {
  static const char* names[] = {"NotPositiveReal", "FourElement", "FiveElement", "SevenElementCatalog",
                                "UnknownWithinScope"};
  return names[static_cast<int>(k)];
}

struct ConditionRecord {
  std::string name;
  Real value;
  std::optional<std::string> exact;
  bool pass = false;
};

struct RealizationReport {
  std::string k, z, p;  // exact input where available, decimal otherwise
  RealizationKind kind = RealizationKind::UnknownWithinScope;
  std::optional<ConfigId> config;
  std::optional<Transform> via;  // set when the hit came from transformed parameters
  std::vector<ConditionRecord> conditions;
  std::optional<Network<Real>> network;
  std::vector<std::pair<std::string, Real>> elements;
  std::optional<Real> residual;
};

struct ClassifyOptions {
  Rational tol = default_condition_tol();  // equality tolerance on irrational loci
  Real verify_tol = Real("1e-20");
  bool synthesize = true;
};

namespace detail {

template <class T>
std::string input_string(const T& v) {
  if constexpr (is_exact_v<T>) return exact_string(v);
  else return to_decimal(to_real(v));
}

template <class T>
ConditionRecord record(std::string name, const T& value, bool pass) {
  ConditionRecord r{std::move(name), to_real(value), std::nullopt, pass};
  if constexpr (is_exact_v<T>) r.exact = exact_string(value);
  return r;
}

// The three seven-element catalog tests at (z, p); returns the first hit.
template <class T>
std::optional<ConfigId> seven_element_conditions(const CanonicalBiquad<T>& b, const std::string& prefix,
                                                 const ClassifyOptions& opt, std::vector<ConditionRecord>& out) {
  const T &z = b.z, &p = b.p;
  std::optional<ConfigId> hit;
  T f1 = (p - z) * (p - T(3) * z);
  T f2 = fig3a_quartic()(z, p);
  out.push_back(record(prefix + "fig3a: (p-z)(p-3z) > 0", f1, f1 > T(0)));
  out.push_back(record(prefix + "fig3a: p^4-6zp^3+6z^2p^2-14z^3p+5z^4 < 0", f2, f2 < T(0)));
  if (f1 > T(0) && f2 < T(0)) hit = ConfigId::Fig3a;

  T bound = low_ratio_bound()(z, p);
  for (auto [q, id] : {std::pair{n4a_quartic(), ConfigId::Fig4a}, std::pair{n5a_degree10(), ConfigId::Fig5a}}) {
    T v = q.ratio_value(z, p);
    bool on_locus = abs_of(v) <= T(opt.tol);
    std::string tag = prefix + (id == ConfigId::Fig4a ? "n4a: " : "n5a: ");
    out.push_back(record(tag + "|" + q.name + "(p/z)| <= tol", v, on_locus));
    out.push_back(record(tag + "p^2+4zp-z^2 < 0", bound, bound < T(0)));
    if (!hit && on_locus && bound < T(0)) hit = id;
  }
  return hit;
}

inline std::vector<std::pair<std::string, Real>> transform_elements(const std::vector<std::pair<std::string, Real>>& v,
                                                                    Transform t) {
  std::vector<std::pair<std::string, Real>> out;
  for (const auto& [name, value] : v) {
    std::string n = name;
    Real x = value;
    char kind = n[0];
    bool reactive = kind == 'L' || kind == 'C';
    if (reactive && t != Transform::GDu) n[0] = kind == 'L' ? 'C' : 'L';
    if (t == Transform::GDu || (t == Transform::Inv && reactive) || (t == Transform::Dual && !reactive)) x = 1 / x;
    out.emplace_back(n, x);
  }
  return out;
}

}  // namespace detail

// Evaluates every condition in a fixed order (positive-realness, four-element,
// five-element, seven-element catalog, then the catalog on the Inv, Dual and
// GDu images of the parameters) and reports the first class that matches.
template <class T>
RealizationReport classify(const CanonicalBiquad<T>& b, const ClassifyOptions& opt = {}) {
  RealizationReport r;
  r.k = detail::input_string(b.k);
  r.z = detail::input_string(b.z);
  r.p = detail::input_string(b.p);
  const T &z = b.z, &p = b.p;
  auto& c = r.conditions;

  T pr = p * p - T(6) * z * p + z * z;
  c.push_back(detail::record("positive_real: p^2-6zp+z^2 <= 0", pr, pr <= T(0)));
  const bool is_pr = pr <= T(0);

  T t2a = p - T(3) * z, t2b = T(3) * p - z;
  c.push_back(detail::record("four_element: p = 3z", t2a, t2a == T(0)));
  c.push_back(detail::record("four_element: p = z/3", t2b, t2b == T(0)));
  const bool four = t2a == T(0) || t2b == T(0);

  T ratio = p / z;
  bool inside = T(3) * p > z && p < T(3) * z;
  T s1 = p * p - T(4) * z * p + T(2) * z * z, s2 = T(2) * p * p - T(4) * z * p + z * z;
  c.push_back(detail::record("five_element: 1/3 < p/z < 3", ratio, inside));
  c.push_back(detail::record("five_element: p = (2+sqrt2)z via p^2-4zp+2z^2 = 0", s1, s1 == T(0)));
  c.push_back(detail::record("five_element: p = z/(2+sqrt2) via 2p^2-4zp+z^2 = 0", s2, s2 == T(0)));
  const bool five = inside || s1 == T(0) || s2 == T(0);

  std::optional<ConfigId> seven = detail::seven_element_conditions(b, "", opt, c);
  std::optional<Transform> via;
  for (Transform t : {Transform::Inv, Transform::Dual, Transform::GDu}) {
    auto bt = transform_params(b, t);
    auto hit = detail::seven_element_conditions(bt, std::string(transform_name(t)) + "/", opt, c);
    if (!seven && hit) {
      seven = hit;
      via = t;
    }
  }

  if (!is_pr) r.kind = RealizationKind::NotPositiveReal;
  else if (four) r.kind = RealizationKind::FourElement;
  else if (five) r.kind = RealizationKind::FiveElement;
  else if (seven) r.kind = RealizationKind::SevenElementCatalog;
  else r.kind = RealizationKind::UnknownWithinScope;

  if (r.kind != RealizationKind::SevenElementCatalog) return r;
  r.config = seven;
  r.via = via;
  if (!opt.synthesize) return r;

  Synthesis syn = via ? synthesize(*seven, transform_params(b, *via), opt.tol) : synthesize(*seven, b, opt.tol);
  Network<Real> net = via ? apply_transform(syn.network, *via) : syn.network;
  r.elements = via ? detail::transform_elements(syn.elements, *via) : syn.elements;
  NumericCheck chk = verify_numeric(net, to_rational_fn(b), opt.verify_tol);
  if (!chk.ok) throw std::logic_error("internal inconsistency: synthesized network fails verification");
  r.network = std::move(net);
  r.residual = chk.residual;
  return r;
}

}  // namespace spsynth
