#pragma once

#include "spsynth/scalar.hpp"

#include <string>

namespace spsynth {

// Exact numbers a + b*sqrt(D) in Q(sqrt D) for a fixed non-square D > 0.
// Ordered field, so the condition evaluators can be run on irrational
// loci such as p/z = 2 + sqrt(2) without rounding.
template <long D>
class Surd {
  static_assert(D > 1, "radicand must exceed 1");

 public:
  Surd() = default;
  Surd(const Rational& a) : a_(a) {}
  Surd(long a) : a_(a) {}
  Surd(const Rational& a, const Rational& b) : a_(a), b_(b) {}

  static Surd root() { return Surd(Rational(0), Rational(1)); }

  const Rational& rational_part() const { return a_; }
  const Rational& surd_part() const { return b_; }

  int sign() const {
    int sa = a_ > 0 ? 1 : (a_ < 0 ? -1 : 0);
    int sb = b_ > 0 ? 1 : (b_ < 0 ? -1 : 0);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with D b^2
    Rational lhs = a_ * a_, rhs = Rational(D) * b_ * b_;
    return lhs > rhs ? sa : sb;
  }

  Surd operator-() const { return Surd(-a_, -b_); }
  friend Surd operator+(const Surd& x, const Surd& y) { return Surd(x.a_ + y.a_, x.b_ + y.b_); }
  friend Surd operator-(const Surd& x, const Surd& y) { return Surd(x.a_ - y.a_, x.b_ - y.b_); }
  friend Surd operator*(const Surd& x, const Surd& y) {
    return Surd(x.a_ * y.a_ + Rational(D) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
  }
  friend Surd operator/(const Surd& x, const Surd& y) {
    Rational norm = y.a_ * y.a_ - Rational(D) * y.b_ * y.b_;
    if (norm == 0) throw std::domain_error("division by zero surd");
    return x * Surd(y.a_ / norm, -y.b_ / norm);
  }
  Surd& operator+=(const Surd& y) { return *this = *this + y; }
  Surd& operator-=(const Surd& y) { return *this = *this - y; }
  Surd& operator*=(const Surd& y) { return *this = *this * y; }
  Surd& operator/=(const Surd& y) { return *this = *this / y; }

  friend bool operator==(const Surd& x, const Surd& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
  friend bool operator<(const Surd& x, const Surd& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Surd& x, const Surd& y) { return y < x; }
  friend bool operator<=(const Surd& x, const Surd& y) { return !(y < x); }
  friend bool operator>=(const Surd& x, const Surd& y) { return !(x < y); }

 private:
  Rational a_{0};
  Rational b_{0};
};

template <long D>
Real to_real(const Surd<D>& x) {
  return Real(x.rational_part()) + Real(x.surd_part()) * mp::sqrt(Real(D));
}
template <long D>
bool is_positive(const Surd<D>& x) { return x.sign() > 0; }
template <long D>
Surd<D> abs_of(const Surd<D>& x) { return x.sign() < 0 ? -x : x; }
template <long D>
Surd<D> reciprocal(const Surd<D>& x) { return Surd<D>(1) / x; }
template <long D>
std::string exact_string(const Surd<D>& x) {
  return to_string(x.rational_part()) + "+" + to_string(x.surd_part()) + "*sqrt(" + std::to_string(D) + ")";
}
template <long D>
std::string key_string(const Surd<D>& x) { return exact_string(x); }

template <long D>
inline constexpr bool is_exact_v<Surd<D>> = true;

}  // namespace spsynth
