#pragma once

#include "spsynth/network.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace spsynth {

inline bool verify_exact(const Network<Rational>& n, const RationalFn<Rational>& target) {
  return impedance(n) == target;
}

struct NumericCheck {
  bool ok = false;
  Real residual;        // max relative coefficient error, plus off-sample mismatch
  bool exact = false;   // computed in exact arithmetic with residual exactly zero
};

namespace detail {

// Gaussian elimination with partial pivoting; W is Rational or Real.
template <class W>
std::vector<W> solve_linear(std::vector<std::vector<W>> a, std::vector<W> rhs) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (abs_of(a[r][col]) > abs_of(a[piv][col])) piv = r;
    if (a[piv][col] == W(0)) throw std::domain_error("singular sampling system");
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      W f = a[r][col] / a[col][col];
      if (f == W(0)) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::vector<W> x(n);
  for (std::size_t i = n; i-- > 0;) {
    W acc = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

template <class W, class V>
W to_work(const V& v) {
  if constexpr (std::is_same_v<W, V>) return v;
  else return W(to_real(v));
}

template <class W, class TT>
W eval_as(const Poly<TT>& p, const W& s) {
  W acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * s + to_work<W>(*it);
  return acc;
}

// Power of two near the geometric mean of the target's finite nonzero
// poles and zeros, so samples sit where the function actually varies.
template <class TT>
Rational sample_scale(const RationalFn<TT>& t) {
  double logsum = 0;
  int terms = 0;
  for (const Poly<TT>* p : {&t.num(), &t.den()}) {
    int d = p->degree();
    if (d < 1) continue;
    std::size_t low = 0;
    while (p->coeffs()[low] == TT(0)) ++low;
    if (static_cast<int>(low) == d) continue;
    double ratio = std::fabs(static_cast<double>(to_real(TT(p->coeffs()[low] / p->leading()))));
    logsum += std::log2(ratio) ;
    terms += d - static_cast<int>(low);
  }
  if (terms == 0) return Rational(1);
  long e = std::lround(logsum / terms);
  e = std::clamp(e, -200L, 200L);
  Rational s(1);
  for (long i = 0; i < std::labs(e); ++i) s = e > 0 ? Rational(s * 2) : Rational(s / 2);
  return s;
}

}  // namespace detail

// Recovers the network's impedance coefficients at the target's reduced
// degrees (a, b) from a + b + 1 positive sample points, compares them with
// the monic-denominator target, and confirms the recovered function at
// enough further points that a mismatch in degree cannot hide. With T =
// Rational (network and target) every step is exact.
template <class T, class TT>
NumericCheck verify_numeric(const Network<T>& n, const RationalFn<TT>& target, const Real& tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  using W = std::conditional_t<std::is_same_v<T, Rational> && std::is_same_v<TT, Rational>, Rational, Real>;
  const int a = target.num().degree() < 0 ? 0 : target.num().degree();
  const int b = target.den().degree();
  const std::size_t unknowns = static_cast<std::size_t>(a + b + 1);
  const std::size_t extra = static_cast<std::size_t>(reactive_count(n) + a + b + 1);

  const Rational scale = detail::sample_scale(target);
  std::vector<W> points;
  for (std::size_t i = 0; i < unknowns + extra; ++i) {
    // s_i = scale * (5/4)^(i - half), interleaved around the scale
    long e = static_cast<long>(i % 2 == 0 ? i / 2 : -(static_cast<long>(i + 1) / 2));
    Rational s = scale;
    for (long j = 0; j < std::labs(e); ++j) s = e > 0 ? Rational(s * Rational(5, 4)) : Rational(s * Rational(4, 5));
    points.push_back(detail::to_work<W>(s));
  }
  auto z_at = [&](const W& s) { return impedance_at<W>(n, s, [](const T& v) { return detail::to_work<W>(v); }); };

  std::vector<std::vector<W>> m(unknowns, std::vector<W>(unknowns, W(0)));
  std::vector<W> rhs(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) {
    const W& s = points[i];
    W zs = z_at(s);
    W pw(1);
    for (int j = 0; j <= a; ++j, pw *= s) m[i][static_cast<std::size_t>(j)] = pw;
    pw = W(1);
    for (int j = 0; j < b; ++j, pw *= s) m[i][static_cast<std::size_t>(a + 1 + j)] = -zs * pw;
    rhs[i] = zs * pw;
  }
  const W floor = detail::to_work<W>(parse_rational("1e-30"));
  std::vector<W> x;
  try {
    x = detail::solve_linear(std::move(m), std::move(rhs));
  } catch (const std::domain_error&) {
    // The network cannot carry the target's degrees; report the pointwise mismatch.
    W worst(0);
    for (const W& s : points) {
      W zt = detail::eval_as<W>(target.num(), s) / detail::eval_as<W>(target.den(), s), zs = z_at(s);
      W denom = abs_of(zt) > floor ? abs_of(zt) : floor;
      worst = std::max(worst, W(abs_of(zs - zt) / denom));
    }
    return NumericCheck{false, to_real(worst), false};
  }

  W residual(0);
  auto rel = [&](const W& got, const TT& want) {
    W w = detail::to_work<W>(want);
    W denom = abs_of(w) > floor ? abs_of(w) : floor;
    return abs_of(got - w) / denom;
  };
  for (int j = 0; j <= a; ++j) residual = std::max(residual, rel(x[static_cast<std::size_t>(j)], target.num().coeff(static_cast<std::size_t>(j))));
  for (int j = 0; j < b; ++j) residual = std::max(residual, rel(x[static_cast<std::size_t>(a + 1 + j)], target.den().coeff(static_cast<std::size_t>(j))));

  Poly<W> num(std::vector<W>(x.begin(), x.begin() + a + 1));
  std::vector<W> dc(x.begin() + a + 1, x.end());
  dc.push_back(W(1));
  Poly<W> den(std::move(dc));
  for (std::size_t i = unknowns; i < points.size(); ++i) {
    const W& s = points[i];
    W zs = z_at(s), fit = num(s) / den(s);
    W denom = abs_of(zs) > floor ? abs_of(zs) : floor;
    residual = std::max(residual, W(abs_of(zs - fit) / denom));
  }

  NumericCheck out;
  out.residual = to_real(residual);
  out.exact = std::is_same_v<W, Rational> && residual == W(0);
  out.ok = out.residual <= tol;
  return out;
}

}  // namespace spsynth
