#pragma once

#include "spsynth/topology.hpp"
#include "spsynth/verify.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <vector>

namespace spsynth {

struct FitOptions {
  int budget = 200;        // Levenberg-Marquardt iterations per start
  int multistarts = 32;
  std::uint64_t seed = 1;
  double tol = 1e-8;       // success threshold on the verified residual
  unsigned verify_bits = 128;
};

struct FitResult {
  bool success = false;
  std::vector<std::pair<std::string, double>> values;  // R1, L1, ... in depth-first order
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  Network<Real> instantiate(const Network<Rational>& shape) const;
};

// Slot names for the leaves of a template: R1, R2, L1, ... numbered per
// kind in depth-first order.
template <class T>
std::vector<std::string> leaf_names(const Network<T>& n) {
  int counters[3] = {0, 0, 0};
  std::vector<std::string> out;
  n.for_each_leaf([&](const auto& e) {
    out.push_back(std::string(1, kind_char(e.kind)) + std::to_string(++counters[static_cast<int>(e.kind)]));
  });
  return out;
}

// Same tree with the depth-first leaf values replaced.
template <class U, class T>
Network<U> with_values(const Network<T>& n, const std::vector<U>& values) {
  std::size_t next = 0;
  auto f = [&](const auto& e) { return Network<U>::element(e.kind, values.at(next++)); };
  return rebuild<U>(n, f);
}

inline Network<Real> FitResult::instantiate(const Network<Rational>& shape) const {
  std::vector<Real> v;
  for (const auto& [name, x] : values) v.emplace_back(x);
  return with_values(shape, v);
}

namespace detail {

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

struct Tangent {
  double z;
  std::vector<double> dz;  // d z / d log(value_j)
};

// Impedance at s and its gradient with respect to the log element values.
template <class T>
Tangent tangent_at(const Network<T>& n, double s, const std::vector<double>& vals, std::size_t& next) {
  const std::size_t dim = vals.size();
  if (n.is_element()) {
    std::size_t j = next++;
    Tangent t{0, std::vector<double>(dim, 0.0)};
    switch (n.as_element().kind) {
      case ElementKind::R: t.z = vals[j]; t.dz[j] = t.z; break;
      case ElementKind::L: t.z = vals[j] * s; t.dz[j] = t.z; break;
      case ElementKind::C: t.z = 1.0 / (vals[j] * s); t.dz[j] = -t.z; break;
    }
    return t;
  }
  const auto& c = n.as_compound();
  Tangent acc{0, std::vector<double>(dim, 0.0)};
  for (const auto& k : c.children) {
    Tangent t = tangent_at(k, s, vals, next);
    if (c.junction == Junction::Series) {
      acc.z += t.z;
      for (std::size_t i = 0; i < dim; ++i) acc.dz[i] += t.dz[i];
    } else {
      acc.z += 1.0 / t.z;
      for (std::size_t i = 0; i < dim; ++i) acc.dz[i] -= t.dz[i] / (t.z * t.z);
    }
  }
  if (c.junction == Junction::Parallel) {
    double y = acc.z;
    acc.z = 1.0 / y;
    for (std::size_t i = 0; i < dim; ++i) acc.dz[i] = -acc.dz[i] / (y * y);
  }
  return acc;
}

inline bool solve_small(std::vector<std::vector<double>> a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
    if (a[piv][col] == 0.0 || !std::isfinite(a[piv][col])) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t c = i + 1; c < n; ++c) b[i] -= a[i][c] * b[c];
    b[i] /= a[i][i];
  }
  return true;
}

}  // namespace detail

// Damped least squares on log element values against log |Z| at positive
// real frequencies, from seeded random starts. Success is decided by
// verify_numeric on the instantiated network, never by the optimiser's cost.
template <class T>
FitResult fit_topology(const Network<T>& shape, const RationalFn<Rational>& target, const FitOptions& opt = {}) {
  const std::size_t dim = shape.size();
  const auto names = leaf_names(shape);
  std::vector<ElementKind> kinds;
  shape.for_each_leaf([&](const auto& e) { kinds.push_back(e.kind); });

  const double w0 = static_cast<double>(detail::sample_scale(target));
  const int a = std::max(0, target.num().degree()), b = target.den().degree();
  const int samples = 2 * (static_cast<int>(dim) + a + b) + 8;
  std::vector<double> s(static_cast<std::size_t>(samples)), logzt(s.size());
  for (int i = 0; i < samples; ++i) {
    s[static_cast<std::size_t>(i)] = w0 * std::pow(10.0, -2.0 + 4.0 * i / (samples - 1));
    double zt = static_cast<double>(target(Rational(s[static_cast<std::size_t>(i)])));
    if (!(zt > 0)) throw std::invalid_argument("target must be positive on the positive real axis");
    logzt[static_cast<std::size_t>(i)] = std::log(zt);
  }
  // typical magnitudes: R ~ |Z(w0)|, L ~ |Z|/w0, C ~ 1/(|Z| w0)
  const double zmag = std::exp(logzt[s.size() / 2]);

  auto evaluate = [&](const std::vector<double>& theta, std::vector<double>& r, std::vector<std::vector<double>>* jac) {
    std::vector<double> vals(dim);
    for (std::size_t j = 0; j < dim; ++j) vals[j] = std::exp(theta[j]);
    double cost = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      std::size_t next = 0;
      detail::Tangent t = detail::tangent_at(shape, s[i], vals, next);
      r[i] = std::log(t.z) - logzt[i];
      cost += r[i] * r[i];
      if (jac)
        for (std::size_t j = 0; j < dim; ++j) (*jac)[i][j] = t.dz[j] / t.z;
    }
    return std::isfinite(cost) ? cost : std::numeric_limits<double>::infinity();
  };

  FitResult best;
  std::mt19937_64 rng(opt.seed ^ detail::fnv1a(shape.key()));
  std::uniform_real_distribution<double> jitter(-3.0, 3.0);
  PrecisionScope scope(opt.verify_bits);
  const Real vtol(opt.tol);

  for (int start = 0; start < opt.multistarts; ++start) {
    std::vector<double> theta(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      double base = kinds[j] == ElementKind::R ? zmag : (kinds[j] == ElementKind::L ? zmag / w0 : 1.0 / (zmag * w0));
      theta[j] = std::log(base) + jitter(rng);
    }
    std::vector<double> r(s.size()), rn(s.size());
    std::vector<std::vector<double>> jac(s.size(), std::vector<double>(dim));
    double cost = evaluate(theta, r, &jac), lambda = 1e-3;
    int it = 0;
    for (; it < opt.budget && cost > 1e-30 && lambda < 1e16; ++it) {
      std::vector<std::vector<double>> A(dim, std::vector<double>(dim, 0.0));
      std::vector<double> g(dim, 0.0);
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          g[j] -= jac[i][j] * r[i];
          for (std::size_t k = 0; k < dim; ++k) A[j][k] += jac[i][j] * jac[i][k];
        }
      bool improved = false;
      while (lambda < 1e16) {
        auto M = A;
        for (std::size_t j = 0; j < dim; ++j) M[j][j] += lambda * (A[j][j] + 1e-12);
        std::vector<double> step = g;
        if (detail::solve_small(M, step)) {
          std::vector<double> trial = theta;
          for (std::size_t j = 0; j < dim; ++j) trial[j] = std::clamp(trial[j] + step[j], -300.0, 300.0);
          double c2 = evaluate(trial, rn, nullptr);
          if (c2 < cost) {
            theta = std::move(trial);
            cost = evaluate(theta, r, &jac);
            lambda = std::max(lambda / 3, 1e-15);
            improved = true;
            break;
          }
        }
        lambda *= 4;
      }
      if (!improved) break;
    }
    best.iterations += it;

    std::vector<Real> vals;
    for (double t : theta) vals.emplace_back(std::exp(t));
    double residual = std::numeric_limits<double>::infinity();
    try {
      NumericCheck chk = verify_numeric(with_values(shape, vals), target, vtol);
      residual = static_cast<double>(chk.residual);
    } catch (const std::domain_error&) {
    }
    if (residual < best.residual || best.values.empty()) {
      best.residual = residual;
      best.values.clear();
      for (std::size_t j = 0; j < dim; ++j) best.values.emplace_back(names[j], std::exp(theta[j]));
    }
    if (best.residual <= opt.tol) break;
  }
  best.success = best.residual <= opt.tol;
  return best;
}

struct FalsifyEntry {
  Network<Rational> topology;
  int elements = 0;
  bool filtered = false;  // violates the cut-set rule, not fitted
  FitResult fit;
};

struct FalsifyReport {
  std::vector<FalsifyEntry> entries;

  // Smallest residual among fitted topologies with exactly n elements.
  double best_residual(int n) const {
    double r = std::numeric_limits<double>::infinity();
    for (const auto& e : entries)
      if (e.elements == n && !e.filtered) r = std::min(r, e.fit.residual);
    return r;
  }
  bool any_success(int n) const {
    for (const auto& e : entries)
      if (e.elements == n && e.fit.success) return true;
    return false;
  }
};

// Multistart fits of every irreducible labeled network with up to n_max
// elements. Networks violating the cut-set rule are listed as filtered.
inline FalsifyReport falsify_small(const RationalFn<Rational>& target, int n_max, const FitOptions& opt = {}) {
  if (n_max < 1 || n_max > 5) throw std::invalid_argument("falsify_small supports 1 <= n_max <= 5");
  FalsifyReport rep;
  LabelFilters f;
  f.irreducible = true;
  for (int n = 1; n <= n_max; ++n)
    for (auto& net : enumerate_labeled(n, f)) {
      FalsifyEntry e{net, n, violates_cutset_rule(net), {}};
      if (!e.filtered) e.fit = fit_topology(net, target, opt);
      rep.entries.push_back(std::move(e));
    }
  return rep;
}

}  // namespace spsynth
