#pragma once

#include "spsynth/spsynth.hpp"

#include <random>
#include <vector>

namespace spsynth::testing {

using Q = Rational;
using PQ = Poly<Rational>;
using NQ = Network<Rational>;

// Polynomials in two variables: the inner ring is Q[z], the outer variable is p.
using PZ = Poly<PQ>;

inline PZ var_z() { return PZ(PQ::x()); }
inline PZ var_p() { return PZ::x(); }

// Rebuilds a bivariate polynomial from a homogeneous form q(eta) of degree d
// as z^d q(p/z).
inline PZ homogenize(const PQ& eta, int degree) {
  PZ out;
  for (int i = 0; i <= degree; ++i)
    out += PZ::monomial(PQ::monomial(eta.coeff(static_cast<std::size_t>(i)), static_cast<std::size_t>(degree - i)),
                        static_cast<std::size_t>(i));
  return out;
}

inline Q power(Q base, std::size_t n) {
  Q r(1);
  for (std::size_t i = 0; i < n; ++i) r *= base;
  return r;
}

inline PQ from_roots(const std::vector<Q>& roots, const Q& lead = Q(1)) {
  PQ p(lead);
  for (const auto& r : roots) p = p * PQ{-r, Q(1)};
  return p;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g_); }
  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g_); }
  Q rational(long num_lo, long num_hi, long den_max) { return Q(integer(num_lo, num_hi), integer(1, den_max)); }
  Q positive(long num_max, long den_max) { return Q(integer(1, num_max), integer(1, den_max)); }

  PQ poly(int degree, long bound) {
    std::vector<Q> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(integer(-bound, bound));
    if (c.back() == 0) c.back() = 1;
    return PQ(std::move(c));
  }

  // Random series-parallel network with exactly n leaves and random kinds.
  NQ network(int n) {
    if (n == 1) {
      auto kind = static_cast<ElementKind>(integer(0, 2));
      return NQ::element(kind, positive(9, 4));
    }
    int left = static_cast<int>(integer(1, n - 1));
    Junction j = integer(0, 1) ? Junction::Series : Junction::Parallel;
    return NQ::compose(j, {network(left), network(n - left)});
  }

  std::mt19937_64& engine() { return g_; }

 private:
  std::mt19937_64 g_;
};

}  // namespace spsynth::testing
