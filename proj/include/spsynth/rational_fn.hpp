#pragma once

#include "spsynth/poly.hpp"

#include <algorithm>

namespace spsynth {

// Reduced rational function num/den over a field T: gcd(num, den) = 1 and den
// is monic. The zero function is 0/1.
template <class T>
class RationalFn {
 public:
  RationalFn() : den_(T(1)) {}
  RationalFn(const T& c) : num_(c), den_(T(1)) {}
  RationalFn(Poly<T> num) : num_(std::move(num)), den_(T(1)) {}
  RationalFn(Poly<T> num, Poly<T> den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const Poly<T>& num() const { return num_; }
  const Poly<T>& den() const { return den_; }

  template <class U>
  U operator()(const U& at) const { return num_(at) / den_(at); }

  RationalFn reciprocal() const {
    if (num_.is_zero()) throw std::domain_error("reciprocal of the zero rational function");
    return RationalFn(den_, num_);
  }

  // f(1/s) with the powers of s cleared.
  RationalFn substitute_reciprocal() const {
    const int d = std::max(num_.degree(), den_.degree());
    return RationalFn(reverse_padded(num_, d), reverse_padded(den_, d));
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) { return a * b.reciprocal(); }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  static Poly<T> reverse_padded(const Poly<T>& a, int d) {
    if (a.is_zero()) return a;
    std::vector<T> r(static_cast<std::size_t>(d + 1), T{});
    for (int i = 0; i <= a.degree(); ++i) r[static_cast<std::size_t>(d - i)] = a.coeffs()[static_cast<std::size_t>(i)];
    return Poly<T>(std::move(r));
  }

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly<T>(T(1));
      return;
    }
    Poly<T> g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    T lead = den_.leading();
    if (!(lead == T(1))) {
      num_ = scale(num_, T(1) / lead);
      den_ = scale(den_, T(1) / lead);
    }
  }

  Poly<T> num_;
  Poly<T> den_;
};

}  // namespace spsynth
