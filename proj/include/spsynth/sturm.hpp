#pragma once

#include "spsynth/poly.hpp"

#include <vector>

namespace spsynth {

struct Interval {
  Rational lo;
  Rational hi;
  Rational midpoint() const { return (lo + hi) / 2; }
  Rational width() const { return hi - lo; }
};

// Sturm sequence of the square-free part of a.
inline std::vector<Poly<Rational>> sturm_sequence(const Poly<Rational>& a) {
  if (a.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  std::vector<Poly<Rational>> seq{square_free_part(a)};
  if (seq[0].degree() < 1) return seq;
  seq.push_back(derivative(seq[0]));
  while (true) {
    Poly<Rational> r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(std::move(r));
  }
  return seq;
}

inline int sign_variations(const std::vector<Poly<Rational>>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& p : seq) {
    Rational v = p(x);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Number of distinct real roots of a in (lo, hi].
inline int sturm_count(const Poly<Rational>& a, const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_count needs lo < hi");
  auto seq = sturm_sequence(a);
  return sign_variations(seq, lo) - sign_variations(seq, hi);
}

namespace detail {

inline void bisect_roots(const std::vector<Poly<Rational>>& seq, Rational lo, Rational hi, int vlo, int vhi,
                         const Rational& width, std::vector<Interval>& out) {
  const int count = vlo - vhi;
  if (count == 0) return;
  if (count == 1 && hi - lo <= width) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  int vmid = sign_variations(seq, mid);
  bisect_roots(seq, lo, mid, vlo, vmid, width, out);
  bisect_roots(seq, mid, hi, vmid, vhi, width, out);
}

}  // namespace detail

// Disjoint intervals (lo_i, hi_i], each of width <= width and holding exactly one root.
inline std::vector<Interval> isolate_roots(const Poly<Rational>& a, const Rational& lo, const Rational& hi,
                                           const Rational& width) {
  if (!(lo < hi)) throw std::invalid_argument("isolate_roots needs lo < hi");
  if (!(width > 0)) throw std::invalid_argument("isolation width must be positive");
  auto seq = sturm_sequence(a);
  std::vector<Interval> out;
  detail::bisect_roots(seq, lo, hi, sign_variations(seq, lo), sign_variations(seq, hi), width, out);
  return out;
}

inline Interval isolate_root(const Poly<Rational>& a, const Rational& lo, const Rational& hi,
                             const Rational& width) {
  int n = sturm_count(a, lo, hi);
  if (n != 1) throw std::domain_error("isolate_root needs exactly one root, found " + std::to_string(n));
  return isolate_roots(a, lo, hi, width).front();
}

}  // namespace spsynth
