#pragma once

#include "spsynth/network.hpp"
#include "spsynth/rational_fn.hpp"

#include <stdexcept>

namespace spsynth {

// Z(s) = k (s+z)^2 / (s+p)^2 with k, z, p > 0 and p != z.
template <class T>
struct CanonicalBiquad {
  T k, z, p;

  CanonicalBiquad(T k_, T z_, T p_) : k(std::move(k_)), z(std::move(z_)), p(std::move(p_)) {
    if (!is_positive(k) || !is_positive(z) || !is_positive(p))
      throw std::invalid_argument("k, z and p must be positive");
    if (z == p) throw std::invalid_argument("p must differ from z");
  }
};

// Z(s) = (A s^2 + B s + C)/(D s^2 + E s + F), all coefficients nonnegative.
template <class T>
struct GeneralBiquad {
  T A, B, C, D, E, F;

  GeneralBiquad(T a, T b, T c, T d, T e, T f)
      : A(std::move(a)), B(std::move(b)), C(std::move(c)), D(std::move(d)), E(std::move(e)), F(std::move(f)) {
    for (const T* v : {&A, &B, &C, &D, &E, &F})
      if (*v < T(0)) throw std::invalid_argument("biquad coefficients must be nonnegative");
    if (A == T(0) && B == T(0) && C == T(0)) throw std::invalid_argument("numerator is identically zero");
    if (D == T(0) && E == T(0) && F == T(0)) throw std::invalid_argument("denominator is identically zero");
  }
};

// F(s) = (alpha s^2 + beta s + gamma)/(s+p)^2.
template <class T>
struct PoleSquaredForm {
  T alpha, beta, gamma, p;

  PoleSquaredForm(T a, T b, T g, T p_) : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)), p(std::move(p_)) {
    if (!is_positive(p)) throw std::invalid_argument("p must be positive");
    if (alpha < T(0) || beta < T(0) || gamma < T(0)) throw std::invalid_argument("alpha, beta, gamma must be nonnegative");
    if (alpha == T(0) && beta == T(0) && gamma == T(0)) throw std::invalid_argument("alpha, beta, gamma all zero");
  }
};

template <class T>
GeneralBiquad<T> canonical_to_general(const CanonicalBiquad<T>& b, const T& x) {
  if (!is_positive(x)) throw std::invalid_argument("scale x must be positive");
  return GeneralBiquad<T>(b.k * x, T(2) * b.k * b.z * x, b.k * b.z * b.z * x, x, T(2) * b.p * x, b.p * b.p * x);
}

// (sqrt(AF) - sqrt(CD))^2 <= BE, decided without square roots:
// AF + CD - BE <= 2 sqrt(AF CD), squared only when the left side is positive.
template <class T>
bool is_positive_real(const GeneralBiquad<T>& g) {
  T lhs = g.A * g.F + g.C * g.D - g.B * g.E;
  if (!(lhs > T(0))) return true;
  return lhs * lhs <= T(4) * g.A * g.F * g.C * g.D;
}

// p^2 - 6zp + z^2 <= 0, i.e. p/z in [3 - 2 sqrt 2, 3 + 2 sqrt 2].
template <class T>
bool canonical_positive_real(const CanonicalBiquad<T>& b) {
  return b.p * b.p - T(6) * b.z * b.p + b.z * b.z <= T(0);
}

template <class T>
CanonicalBiquad<T> transform_params(const CanonicalBiquad<T>& b, Transform t) {
  switch (t) {
    case Transform::Dual: return CanonicalBiquad<T>(T(1) / b.k, b.p, b.z);
    case Transform::Inv: return CanonicalBiquad<T>(b.k * b.z * b.z / (b.p * b.p), T(1) / b.z, T(1) / b.p);
    case Transform::GDu: return CanonicalBiquad<T>(b.p * b.p / (b.k * b.z * b.z), T(1) / b.p, T(1) / b.z);
  }
  throw std::invalid_argument("unknown transform");
}

template <class T>
RationalFn<T> to_rational_fn(const CanonicalBiquad<T>& b) {
  return RationalFn<T>(Poly<T>{b.k * b.z * b.z, T(2) * b.k * b.z, b.k}, Poly<T>{b.p * b.p, T(2) * b.p, T(1)});
}

template <class T>
RationalFn<T> to_rational_fn(const GeneralBiquad<T>& g) {
  return RationalFn<T>(Poly<T>{g.C, g.B, g.A}, Poly<T>{g.F, g.E, g.D});
}

template <class T>
RationalFn<T> to_rational_fn(const PoleSquaredForm<T>& f) {
  return RationalFn<T>(Poly<T>{f.gamma, f.beta, f.alpha}, Poly<T>{f.p * f.p, T(2) * f.p, T(1)});
}

}  // namespace spsynth
