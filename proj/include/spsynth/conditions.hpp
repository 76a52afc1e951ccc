#pragma once

#include "spsynth/biquad.hpp"
#include "spsynth/sturm.hpp"

#include <string>
#include <vector>

namespace spsynth {

struct LemmaResult {
  bool holds = false;
  int condition = 0;  // index of the first satisfied condition, 0 when none
};

// Three-element realizability of (alpha s^2 + beta s + gamma)/(s+p)^2.
// Condition 1 is read as alpha = gamma = 0.
template <class T>
LemmaResult lemma_three_element(const PoleSquaredForm<T>& f) {
  const T &a = f.alpha, &b = f.beta, &g = f.gamma, &p = f.p;
  const T zero(0);
  if (a == zero && g == zero) return {true, 1};
  if (b == zero && a * p * p - g == zero) return {true, 2};
  if (g == zero && a * p - T(2) * b == zero) return {true, 3};
  if (a == zero && T(2) * b * p - g == zero) return {true, 4};
  if (a * p * p - b * p + g == zero) return {true, 5};
  return {};
}

template <class T>
LemmaResult lemma_four_element(const PoleSquaredForm<T>& f) {
  if (lemma_three_element(f).holds)
    throw std::domain_error("four-element lemma applies only when the three-element lemma fails");
  const T &a = f.alpha, &b = f.beta, &g = f.gamma, &p = f.p;
  const T zero(0);
  const bool all_pos = a > zero && b > zero && g > zero;
  if (a == zero && g < T(2) * b * p) return {true, 1};
  if (g == zero && a * p < T(2) * b) return {true, 2};
  if (all_pos && a * p * p - g == zero) return {true, 3};
  if (all_pos && a * p * p < g &&
      (T(3) * a * p * p + g - T(2) * b * p == zero || b * b * p * p + g * g - a * g * p * p - T(2) * b * g * p == zero))
    return {true, 4};
  if (all_pos && a * p * p > g &&
      (a * p * p + T(3) * g - T(2) * b * p == zero || a * a * p * p + b * b - T(2) * a * b * p - a * g == zero))
    return {true, 5};
  if (all_pos &&
      a * a * p * p * p * p - T(2) * a * b * p * p * p + T(6) * a * g * p * p - T(2) * b * g * p + g * g == zero)
    return {true, 6};
  return {};
}

// The four strict-inequality conditions of the two-reactive five-element
// lemma, without the lemma's preconditions.
template <class T>
LemmaResult five_element_conditions(const PoleSquaredForm<T>& f) {
  const T &a = f.alpha, &b = f.beta, &g = f.gamma, &p = f.p;
  const T zero(0);
  const T ap2 = a * p * p;
  if (ap2 > g && ap2 + T(3) * g - T(2) * b * p < zero) return {true, 1};
  if (ap2 > g && a * a * p * p + b * b - T(2) * a * b * p - a * g < zero) return {true, 2};
  if (ap2 < g && T(3) * ap2 + g - T(2) * b * p < zero) return {true, 3};
  if (ap2 < g && b * b * p * p + g * g - a * g * p * p - T(2) * b * g * p < zero) return {true, 4};
  return {};
}

template <class T>
LemmaResult lemma_five_element_two_reactive(const PoleSquaredForm<T>& f) {
  const T zero(0);
  if (!(f.alpha > zero && f.beta > zero && f.gamma > zero))
    throw std::domain_error("five-element lemma needs alpha, beta, gamma > 0");
  if (lemma_three_element(f).holds || lemma_four_element(f).holds)
    throw std::domain_error("five-element lemma applies only when the three- and four-element lemmas fail");
  return five_element_conditions(f);
}

// Condition polynomial h(p, z) of degree d, stored as q(eta) = h(eta, 1).
struct HomogeneousPoly {
  std::string name;
  Poly<Rational> eta;
  int degree;

  // h(p, z) = z^d q(p/z).
  template <class T>
  T operator()(const T& z, const T& p) const {
    T acc{};
    T zpow(1);
    std::vector<T> zp(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i <= degree; ++i, zpow = zpow * z) zp[static_cast<std::size_t>(i)] = zpow;
    T ppow(1);
    for (int i = 0; i <= degree; ++i, ppow = ppow * p)
      acc = acc + T(eta.coeff(static_cast<std::size_t>(i))) * ppow * zp[static_cast<std::size_t>(degree - i)];
    return acc;
  }
  // q(p/z), the dimensionless value compared against tolerances.
  template <class T>
  T ratio_value(const T& z, const T& p) const {
    return eta(p / z);
  }
};

inline Poly<Rational> eta_poly(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.emplace_back(v);
  return Poly<Rational>(std::move(c));
}

// p^4 - 6zp^3 + 6z^2p^2 - 14z^3p + 5z^4
inline HomogeneousPoly fig3a_quartic() { return {"fig3a_quartic", eta_poly({5, -14, 6, -6, 1}), 4}; }

// 16p^4 - 40zp^3 + 31z^2p^2 - 10z^3p + z^4
inline HomogeneousPoly n4a_quartic() { return {"n4a_quartic", eta_poly({1, -10, 31, -40, 16}), 4}; }

// p^10 - 16zp^9 + ... + 2z^10
inline HomogeneousPoly n5a_degree10() {
  return {"n5a_degree10", eta_poly({2, -28, 161, -524, 1064, -1372, 1066, -476, 118, -16, 1}), 10};
}

// p^2 + 4zp - z^2 < 0 is p < z/(2 + sqrt 5).
inline HomogeneousPoly low_ratio_bound() { return {"p_below_z_over_2_plus_sqrt5", eta_poly({-1, 4, 1}), 2}; }

template <class T>
bool check_fig3a_condition(const T& z, const T& p) {
  if (!is_positive(z) || !is_positive(p) || z == p) throw std::invalid_argument("need z, p > 0 and p != z");
  return (p - z) * (p - T(3) * z) > T(0) && fig3a_quartic()(z, p) < T(0);
}

inline const Rational& default_condition_tol() {
  static const Rational tol = parse_rational("1e-20");
  return tol;
}

// Root test on an irrational locus: |q(p/z)| <= tol, together with p < z/(2+sqrt 5).
template <class T>
bool check_locus_condition(const HomogeneousPoly& q, const T& z, const T& p, const Rational& tol) {
  if (!is_positive(z) || !is_positive(p)) throw std::invalid_argument("need z, p > 0");
  return abs_of(q.ratio_value(z, p)) <= T(tol) && low_ratio_bound()(z, p) < T(0);
}

template <class T>
bool check_n4a_condition(const T& z, const T& p, const Rational& tol = default_condition_tol()) {
  return check_locus_condition(n4a_quartic(), z, p, tol);
}

template <class T>
bool check_n5a_condition(const T& z, const T& p, const Rational& tol = default_condition_tol()) {
  return check_locus_condition(n5a_degree10(), z, p, tol);
}

// Rational enclosure of 1/(2 + sqrt 5) = sqrt 5 - 2, the positive root of x^2 + 4x - 1.
inline Interval low_ratio_limit(const Rational& width = Rational(1, 1000000000)) {
  return isolate_root(low_ratio_bound().eta, Rational(0), Rational(1), width);
}

// Distinct roots of q in (0, 1/(2 + sqrt 5)), exact: the count is taken at
// both ends of a shrinking rational enclosure of the irrational bound until
// the two agree.
inline int count_roots_below_low_ratio(const Poly<Rational>& q) {
  Rational width(1, 1000);
  for (int i = 0; i < 64; ++i, width /= 1024) {
    Interval lim = low_ratio_limit(width);
    int a = sturm_count(q, Rational(0), lim.lo), b = sturm_count(q, Rational(0), lim.hi);
    if (a == b && q(lim.hi) != 0) return a;
  }
  throw std::domain_error("root count did not stabilise");
}

// Isolating interval for the unique root of q below 1/(2 + sqrt 5).
inline Interval isolate_locus_root(const HomogeneousPoly& q, const Rational& width) {
  Interval lim = low_ratio_limit(Rational(1, 1000000000));
  return isolate_root(q.eta, Rational(0), lim.lo, width);
}

// A polynomial identity quoted alongside a non-realizability argument; the
// outer variable is p1 (degree 0 for identities in eta alone), coefficients
// are polynomials in eta = p/z.
struct AuxiliaryPoly {
  std::string name;
  Poly<Poly<Rational>> poly;

  const Poly<Rational>& eta_poly() const {
    if (poly.degree() > 0) throw std::logic_error(name + " depends on p1");
    static const Poly<Rational> zero;
    return poly.is_zero() ? zero : poly.coeffs().front();
  }
};

inline std::vector<AuxiliaryPoly> auxiliary_condition_polynomials() {
  using PP = Poly<Poly<Rational>>;
  Poly<Rational> eta = Poly<Rational>::x();
  PP p1 = PP::x();
  return {
      {"nof_resultant_degree8", PP(eta_poly({-1, 16, -102, 336, -617, 624, -312, 48, 8}))},
      {"no3_noa_sextic", PP(eta_poly({2, -12, 21, -28, 20, -8, 1}))},
      {"no3_nof_quartic", PP(eta_poly({1, -8, 18, -12, 2}))},
      // (5z - 3p) p1^2 + (p - 3z) p^2 with z = 1
      {"p1_relation", PP(Poly<Rational>{5, -3}) * p1 * p1 + PP((eta - Poly<Rational>(3)) * eta * eta)},
  };
}

}  // namespace spsynth
