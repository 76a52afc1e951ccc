#pragma once

#include "spsynth/catalog.hpp"
#include "spsynth/conditions.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace spsynth {

struct Synthesis {
  ConfigId config;
  Network<Real> network;
  std::vector<std::pair<std::string, Real>> elements;  // slot order of the figure
  Real p1;
};

// Equations in p1 whose common positive root drives each seven-element
// construction. R is the coefficient ring: Real for synthesis, or a
// polynomial ring in (p, z) for the symbolic resultant checks.
template <class R>
Poly<R> fig3a_p1_equation(const R& z, const R& p) {
  return Poly<R>(std::vector<R>{p * p * (p - R(3) * z), R(-2) * p * (p - z), R(3) * z - p});
}

template <class R>
std::pair<Poly<R>, Poly<R>> n4a_p1_equations(const R& z, const R& p) {
  Poly<R> a(std::vector<R>{-(p * p * (p - R(2) * z)), z * (R(4) * p - z), R(2) * p});
  Poly<R> b(std::vector<R>{-(p * p * p * p - R(5) * z * z * p * p + R(4) * z * z * z * p - z * z * z * z),
                           R(2) * p * z * (R(2) * p - z), R(2) * p * p - z * z});
  return {a, b};
}

template <class R>
std::pair<Poly<R>, Poly<R>> n5a_p1_equations(const R& z, const R& p) {
  const R p2 = p * p, p3 = p2 * p, p4 = p3 * p, z2 = z * z;
  Poly<R> cubic(std::vector<R>{-(p3 * (p - R(2) * z)), -(p * (R(3) * p2 - R(6) * z * p + z2)),
                               -(p2 - R(4) * z * p + z2), R(2) * p});
  Poly<R> quartic(std::vector<R>{z2 * p4, -(p3 * (p + z) * (p - R(3) * z)),
                                 R(-2) * p2 * (R(2) * p2 - R(5) * z * p - z2),
                                 R(-2) * p * (R(2) * p2 - R(8) * z * p + z2), R(2) * z * (R(4) * p - z)});
  return {cubic, quartic};
}

namespace detail {

inline std::vector<Real> positive_quadratic_roots(const Poly<Real>& q) {
  if (q.degree() != 2) throw std::domain_error("expected a quadratic in p1");
  const Real &c = q.coeffs()[0], &b = q.coeffs()[1], &a = q.coeffs()[2];
  Real disc = b * b - 4 * a * c;
  if (disc < 0) return {};
  Real sq = mp::sqrt(disc);
  // numerically stable pair of roots
  Real t = b >= 0 ? Real(-(b + sq) / 2) : Real((sq - b) / 2);
  std::vector<Real> out;
  for (Real r : {Real(t / a), Real(t == 0 ? Real(0) : Real(c / t))})
    if (r > 0) out.push_back(r);
  return out;
}

inline Synthesis assemble(ConfigId id, std::vector<std::pair<std::string, Real>> values, Real p1) {
  std::map<std::string, Real> m;
  for (const auto& [n, v] : values) {
    if (!(v > 0))
      throw std::logic_error("internal inconsistency: element " + n + " of " + config_name(id) + " is not positive");
    m.emplace(n, v);
  }
  return {id, build_config(id, m), std::move(values), std::move(p1)};
}

template <class T>
void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(std::string(what) + " condition does not hold");
}

}  // namespace detail

// Fig. 3(a): Series(Fig7a, Fig9g). m is the high-frequency gain of N1,
// which is k less the R21 = alpha carried by N2.
template <class T>
Synthesis synth_fig3a(const CanonicalBiquad<T>& b) {
  detail::require<T>(check_fig3a_condition(b.z, b.p), "Fig3a");
  const Real k = to_real(b.k), z = to_real(b.z), p = to_real(b.p);
  auto roots = detail::positive_quadratic_roots(fig3a_p1_equation(z, p));
  if (roots.size() != 1) throw std::domain_error("p1 equation does not have a unique positive root");
  const Real p1 = roots.front();
  const Real alpha = k * (p - z) * (2 * p + p1) * (p * p + z * p - 2 * z * p1) / (2 * p * p * p * p);
  const Real beta = 2 * k * (p - z) * (-z * p1 * p1 + p * (p - z) * p1 + z * p * p) / (p * p * p);
  const Real gamma = k * p1 * (p - z) * (p * p + z * p - 2 * z * p1) / (2 * p * p);
  const Real m = k - alpha;
  const Real q = k * z * z * p1 / (p * p);
  return detail::assemble(ConfigId::Fig3a,
                          {{"R1", q / p1},
                           {"R2", m * q / (q - m * p1)},
                           {"C1", (q - m * p1) / (q * q)},
                           {"R21", alpha},
                           {"L21", alpha / (2 * p + p1)},
                           {"L22", alpha * beta / gamma},
                           {"C21", 1 / beta}},
                          p1);
}

namespace detail {

inline std::vector<std::pair<std::string, Real>> fig9e_values(const Real& alpha, const Real& beta, const Real& gamma,
                                                              const Real& p, const Real& p1) {
  const Real d = 2 * alpha * p + alpha * p1 - beta;
  return {{"C21", 1 / alpha},
          {"C22", d / (alpha * beta)},
          {"R21", alpha * alpha / d},
          {"L21", alpha * alpha * beta / (gamma * d)}};
}

inline Real common_positive_root(const std::pair<Poly<Real>, Poly<Real>>& eqs) {
  Real p1 = common_root(eqs.first, eqs.second);
  if (!(p1 > 0)) throw std::domain_error("common root in p1 is not positive");
  return p1;
}

}  // namespace detail

// Fig. 4(a): Series(Fig8b, Fig9e).
template <class T>
Synthesis synth_n4a(const CanonicalBiquad<T>& b, const Rational& tol = default_condition_tol()) {
  detail::require<T>(check_n4a_condition(b.z, b.p, tol), "N4a");
  const Real k = to_real(b.k), z = to_real(b.z), p = to_real(b.p);
  const Real p1 = detail::common_positive_root(n4a_p1_equations(z, p));
  const Real alpha = -k * (p - p1 - 2 * z);
  const Real beta = -k * (p1 * p - 2 * z * p1 - z * z);
  const Real gamma = -k * p1 * (p - z) * (p + z);
  const Real m = k;
  std::vector<std::pair<std::string, Real>> v{{"R1", m}, {"L1", m / (p + p1)}, {"C1", (p + p1) / (m * p * p1)}};
  for (auto& e : detail::fig9e_values(alpha, beta, gamma, p, p1)) v.push_back(std::move(e));
  return detail::assemble(ConfigId::Fig4a, std::move(v), p1);
}

// Fig. 5(a): Series(Fig8c, Fig9e).
template <class T>
Synthesis synth_n5a(const CanonicalBiquad<T>& b, const Rational& tol = default_condition_tol()) {
  detail::require<T>(check_n5a_condition(b.z, b.p, tol), "N5a");
  const Real k = to_real(b.k), z = to_real(b.z), p = to_real(b.p);
  const Real p1 = detail::common_positive_root(n5a_p1_equations(z, p));
  const Real q = p1 * p / (p1 + p);
  const Real m = k;
  const Real gamma = k * p1 * z * z;
  const Real alpha = k * p1 * z * z / (p * (p + 2 * p1));
  const Real beta = 2 * k * p1 * z * z * (p + p1) * (p + p1) / ((p + 2 * p1) * (p + 2 * p1) * p);
  std::vector<std::pair<std::string, Real>> v{{"R1", m}, {"L1", m / (p1 + p)}, {"C1", 1 / (m * q)}};
  for (auto& e : detail::fig9e_values(alpha, beta, gamma, p, p1)) v.push_back(std::move(e));
  return detail::assemble(ConfigId::Fig5a, std::move(v), p1);
}

template <class T>
Synthesis synthesize(ConfigId id, const CanonicalBiquad<T>& b, const Rational& tol = default_condition_tol()) {
  switch (id) {
    case ConfigId::Fig3a: return synth_fig3a(b);
    case ConfigId::Fig4a: return synth_n4a(b, tol);
    case ConfigId::Fig5a: return synth_n5a(b, tol);
    default: throw std::invalid_argument(std::string("no closed-form synthesis for ") + config_name(id));
  }
}

}  // namespace spsynth
