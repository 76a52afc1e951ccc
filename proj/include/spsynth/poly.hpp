#pragma once

#include "spsynth/scalar.hpp"

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spsynth {

// Univariate polynomial over a coefficient ring T, ascending coefficients.
// The zero polynomial is the empty coefficient list, so a nonzero
// polynomial always has a nonzero leading coefficient. T may itself be a
// Poly, which is how the bivariate eliminations are expressed.
template <class T>
class Poly {
 public:
  using value_type = T;

  Poly() = default;
  Poly(const T& c) {
    if (!(c == T{})) c_.push_back(c);
  }
  template <class S>
    requires std::is_arithmetic_v<S>
  Poly(S c) : Poly(T(c)) {}
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Poly x() { return Poly(std::vector<T>{T{}, T(1)}); }
  static Poly monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T{});
    v[degree] = c;
    return Poly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T{}; }
  const T& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  // Horner evaluation; U may differ from T as long as U(T) and U*U exist.
  template <class U>
  U operator()(const U& at) const {
    U acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + U(*it);
    return acc;
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  Poly& operator+=(const Poly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), T{});
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = c_[i] + b.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& b) {
    if (b.c_.size() > c_.size()) c_.resize(b.c_.size(), T{});
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] = c_[i] - b.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T{});
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == T{}) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T{}) c_.pop_back();
  }

  std::vector<T> c_;
};

template <class T>
Poly<T> derivative(const Poly<T>& a) {
  if (a.degree() < 1) return Poly<T>();
  std::vector<T> r(a.coeffs().size() - 1);
  for (std::size_t i = 1; i < a.coeffs().size(); ++i) r[i - 1] = T(static_cast<long>(i)) * a.coeffs()[i];
  return Poly<T>(std::move(r));
}

template <class T>
Poly<T> pow(const Poly<T>& a, unsigned n) {
  Poly<T> r(T(1)), b = a;
  while (n) {
    if (n & 1u) r = r * b;
    b = b * b;
    n >>= 1u;
  }
  return r;
}

// Scales each coefficient; useful where T has no implicit Poly conversion.
template <class T>
Poly<T> scale(const Poly<T>& a, const T& c) {
  std::vector<T> r = a.coeffs();
  for (auto& v : r) v = v * c;
  return Poly<T>(std::move(r));
}

// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<T> rem = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Poly<T>(), a};
  std::vector<T> q(static_cast<std::size_t>(a.degree() - db + 1), T{});
  const T lead = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    T f = rem[static_cast<std::size_t>(i)] / lead;
    q[static_cast<std::size_t>(i - db)] = f;
    if (f == T{}) continue;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    rem[static_cast<std::size_t>(i)] = T{};
  }
  return {Poly<T>(std::move(q)), Poly<T>(std::move(rem))};
}

template <class T>
Poly<T> operator/(const Poly<T>& a, const Poly<T>& b) { return divmod(a, b).first; }
template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) { return divmod(a, b).second; }

// Division that must leave no remainder.
template <class T>
Poly<T> exact_divide(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
  return q;
}

template <class T>
Poly<T> monic(const Poly<T>& a) {
  if (a.is_zero()) return a;
  return scale(a, T(1) / a.leading());
}

// Monic gcd over a field.
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd of two zero polynomials");
  while (!b.is_zero()) {
    Poly<T> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

template <class T>
Poly<T> square_free_part(const Poly<T>& a) {
  if (a.degree() < 1) return a;
  return exact_divide(a, gcd(a, derivative(a)));
}

// Determinant by Laplace expansion along rows, memoised on the set of used
// columns. Division free, so it works over any commutative ring; cost is
// O(2^n n) ring operations, fine for the Sylvester sizes used here.
template <class T>
T determinant(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n > 24) throw std::invalid_argument("determinant too large for expansion");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::size_t row, std::uint32_t used) -> T {
    if (row == n) return T(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T acc{};
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (used & (1u << c)) continue;
      if (!(m[row][c] == T{})) {
        T term = m[row][c] * self(self, row + 1, used | (1u << c));
        acc = (position % 2 == 0) ? acc + term : acc - term;
      }
      ++position;
    }
    memo.emplace(used, acc);
    return acc;
  };
  return rec(rec, 0, 0);
}

// Sylvester matrix with the rows of a on top, columns by descending degree.
template <class T>
std::vector<std::vector<T>> sylvester_matrix(const Poly<T>& a, const Poly<T>& b) {
  if (a.degree() < 1 || b.degree() < 1)
    throw std::invalid_argument("resultant needs positive degree in the elimination variable");
  const int m = a.degree(), n = b.degree(), size = m + n;
  std::vector<std::vector<T>> s(static_cast<std::size_t>(size), std::vector<T>(static_cast<std::size_t>(size), T{}));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + m - i] = a.coeffs()[i];
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s[n + r][r + n - i] = b.coeffs()[i];
  return s;
}

// Resultant with respect to the outermost variable of Poly<T>.
template <class T>
T resultant(const Poly<T>& a, const Poly<T>& b) {
  return determinant(sylvester_matrix(a, b));
}

// First subresultant S1 (degree <= 1). When a and b share exactly one root,
// that root is -S1[0]/S1[1].
template <class T>
Poly<T> first_subresultant(const Poly<T>& a, const Poly<T>& b) {
  const int m = a.degree(), n = b.degree();
  if (m < 2 || n < 2) throw std::invalid_argument("first subresultant needs degrees >= 2");
  const int rows = m + n - 2, cols = m + n - 1;
  std::vector<std::vector<T>> s(static_cast<std::size_t>(rows), std::vector<T>(static_cast<std::size_t>(cols), T{}));
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= m; ++i) s[r][r + m - i] = a.coeffs()[i];
  for (int r = 0; r < m - 1; ++r)
    for (int i = 0; i <= n; ++i) s[n - 1 + r][r + n - i] = b.coeffs()[i];
  // column c holds the coefficient of x^(cols-1-c)
  auto minor_with = [&](int power) {
    std::vector<std::vector<T>> sq(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r) {
      sq[r].assign(s[r].begin(), s[r].begin() + (rows - 1));
      sq[r].push_back(s[r][cols - 1 - power]);
    }
    return determinant(sq);
  };
  return Poly<T>(std::vector<T>{minor_with(0), minor_with(1)});
}

// Common real root of two polynomials with real coefficients, located by the
// first subresultant and polished by Newton steps on a.
inline Real common_root(const Poly<Real>& a, const Poly<Real>& b) {
  Poly<Real> s1 = first_subresultant(a, b);
  if (s1.degree() != 1) throw std::domain_error("polynomials do not share a unique root");
  Real x = -s1.coeff(0) / s1.coeff(1);
  Poly<Real> da = derivative(a);
  const Real eps = mp::ldexp(Real(1), -static_cast<int>(Real::default_precision() * 3.32));
  for (int it = 0; it < 200; ++it) {
    Real d = da(x);
    if (d == 0) break;
    Real step = a(x) / d;
    x -= step;
    if (mp::abs(step) <= eps * (1 + mp::abs(x))) break;
  }
  return x;
}

}  // namespace spsynth
