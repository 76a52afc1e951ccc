#pragma once

#include "spsynth/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace spsynth {

// Sparse multivariate polynomial with rational coefficients. Used to carry
// symbolic element values (one indeterminate per slot) through impedance
// computations for the catalog cross-checks.
class MPoly {
 public:
  using Monomial = std::vector<unsigned>;

  MPoly() = default;
  MPoly(const Rational& c) { add_term({}, c); }
  MPoly(long c) : MPoly(Rational(c)) {}

  static MPoly variable(std::size_t index) {
    Monomial m(index + 1, 0);
    m[index] = 1;
    MPoly r;
    r.add_term(std::move(m), Rational(1));
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) {
    for (const auto& [m, c] : b.terms_) a.add_term(m, c);
    return a;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(std::max(ma.size(), mb.size()), 0);
        for (std::size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
        for (std::size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
        r.add_term(std::move(m), ca * cb);
      }
    return r;
  }
  MPoly& operator+=(const MPoly& b) { return *this = *this + b; }
  MPoly& operator-=(const MPoly& b) { return *this = *this - b; }
  MPoly& operator*=(const MPoly& b) { return *this = *this * b; }
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

  // Text form with x0, x1, ... or caller-supplied names.
  std::string str(const std::vector<std::string>& names = {}) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      if (!out.empty()) out += " + ";
      out += "(" + to_string(c) + ")";
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        out += "*" + (i < names.size() ? names[i] : "x" + std::to_string(i));
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
      }
    }
    return out;
  }

 private:
  void add_term(Monomial m, const Rational& c) {
    while (!m.empty() && m.back() == 0) m.pop_back();
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  std::map<Monomial, Rational> terms_;
};

// Symbolic slot values count as positive; their canonical key is their text.
inline bool is_positive(const MPoly&) { return true; }
inline std::string key_string(const MPoly& m) { return m.str(); }

}  // namespace spsynth
