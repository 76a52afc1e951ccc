// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracles.hpp"
#include "support.hpp"

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace spsynth;
using namespace spsynth::testing;

namespace {

using S2 = Surd<2>;
using CB = CanonicalBiquad<Q>;

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail << "first failure: " << what << "; ";
    ok = ok && cond;
  }
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail << "exception: " << e.what() << "; ";
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.ok = false;
    o.detail << "over the " << limit_s << " s limit; ";
  }
  if (!o.ok) ++failures;
  std::printf("%s criterion %d: %s (%s%.2f s)\n", o.ok ? "PASS" : "FAIL", id, title, o.detail.str().c_str(), secs);
  std::fflush(stdout);
}

RealizationKind kind_of(const CB& b) { return classify(b).kind; }

// Minimum of Re Z(jw) over a logarithmic grid, in double precision, straight
// from complex arithmetic.
double min_real_part(double k, double z, double p, int samples) {
  double lo = std::log(1e-3 * std::min(z, p)), hi = std::log(1e3 * std::max(z, p));
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < samples; ++i) {
    double w = std::exp(lo + (hi - lo) * i / (samples - 1));
    std::complex<double> s(0, w), r = k * (s + z) * (s + z) / ((s + p) * (s + p));
    best = std::min(best, r.real());
  }
  return best;
}

}  // namespace

int main() {
  PrecisionScope precision(256);

  run(1, "four-element boundary at p/z = 1/3 and 3", 1.0, [](Outcome& o) {
    const Q eps(1, 1000000);
    for (Q z : {Q(1), Q(7, 3), Q(12)}) {
      for (Q r : {Q(1, 3), Q(3)}) {
        o.require(kind_of(CB(1, z, z * r)) == RealizationKind::FourElement, "on the boundary");
        o.require(kind_of(CB(1, z, z * (r + eps))) != RealizationKind::FourElement, "above the boundary");
        o.require(kind_of(CB(1, z, z * (r - eps))) != RealizationKind::FourElement, "below the boundary");
      }
    }
  });

  run(2, "five-element set (1/3, 3) plus p/z = 2+sqrt2 and 1/(2+sqrt2)", 0, [](Outcome& o) {
    for (Q z : {Q(1), Q(5, 2)}) {
      for (Q r : {Q(1, 2), Q(9, 10), Q(2), Q(29, 10)})
        o.require(kind_of(CB(1, z, z * r)) == RealizationKind::FiveElement, "inside (1/3, 3)");
      for (Q r : {Q(16, 5), Q(4)}) o.require(kind_of(CB(1, z, z * r)) != RealizationKind::FiveElement, "3.2 and 4");
    }
    // Rational witness for the surrogate p^2 - 4zp + 2z^2 = 0 at z = 1: a
    // Sturm-certified enclosure of width 1e-30 holds exactly one root, and
    // the rational endpoints on either side are outside the set.
    PQ surrogate{2, -4, 1};
    Interval iv = isolate_root(surrogate, Q(3), Q(4), parse_rational("1e-30"));
    o.require(sturm_count(surrogate, iv.lo, iv.hi) == 1, "one surrogate root in the enclosure");
    o.require(surrogate(iv.lo) * surrogate(iv.hi) <= 0, "surrogate changes sign");
    o.require(kind_of(CB(1, 1, iv.lo)) != RealizationKind::FiveElement, "rational point below 2+sqrt2");
    o.require(kind_of(CB(1, 1, iv.hi)) != RealizationKind::FiveElement, "rational point above 2+sqrt2");
    // The exact algebraic inputs satisfy the branch.
    ClassifyOptions opt;
    opt.synthesize = false;
    S2 r2 = S2::root();
    for (S2 z : {S2(1), S2(Q(3, 7))}) {
      auto a = classify(CanonicalBiquad<S2>(S2(1), z, z * (S2(2) + r2)), opt);
      o.require(a.kind == RealizationKind::FiveElement, "p = (2+sqrt2) z");
      o.require(a.conditions.size() > 4 && a.conditions[4].pass, "algebraic branch recorded as passing");
      auto b = classify(CanonicalBiquad<S2>(S2(1), z, z / (S2(2) + r2)), opt);
      o.require(b.kind == RealizationKind::FiveElement, "p = z/(2+sqrt2)");
    }
  });

  run(3, "Fig3a synthesis on 200 random admissible points", 30.0, [](Outcome& o) {
    Rng rng(3);
    int done = 0, low = 0;
    Real worst = 0;
    while (done < 200) {
      Q z = rng.positive(40, 7);
      // alternate between the p > 3z branch and the p < z branch
      Q ratio = done % 2 ? Q(rng.integer(3001, 5828), 1000) : Q(rng.integer(172, 999), 1000);
      Q p = z * ratio;
      if (!check_fig3a_condition(z, p) || !canonical_positive_real(CB(1, z, p))) continue;
      CB b(rng.positive(40, 7), z, p);
      Synthesis syn = synth_fig3a(b);
      o.require(syn.network.size() == 7, "seven elements");
      for (const auto& [name, v] : syn.elements) o.require(v > 0, "positive " + name);
      NumericCheck chk = verify_numeric(syn.network, to_rational_fn(b), Real("1e-20"));
      o.require(chk.ok, "residual <= 1e-20");
      worst = std::max(worst, chk.residual);
      low += ratio < 1;
      ++done;
    }
    o.require(low > 0, "p < z branch sampled");
    o.detail << "worst residual " << to_decimal(worst, 3) << ", " << low << " with p<z; ";
  });

  run(4, "one root of each locus polynomial below 1/(2+sqrt5)", 1.0, [](Outcome& o) {
    for (const auto& q : {n4a_quartic(), n5a_degree10()}) {
      o.require(count_roots_below_low_ratio(q.eta) == 1, q.name);
      Interval lim = low_ratio_limit(parse_rational("1e-20"));
      o.require(sturm_count(q.eta, Q(0), lim.lo) == 1 && sturm_count(q.eta, Q(0), lim.hi) == 1, q.name + " enclosure");
    }
  });

  run(5, "N4a resultant identity", 5.0, [](Outcome& o) {
    PZ z = var_z(), p = var_p();
    auto [a, b] = n4a_p1_equations<PZ>(z, p);
    PZ claim = z * z * (p + z) * pow(p - z, 3) * homogenize(n4a_quartic().eta, 4);
    PZ r = resultant(a, b);
    o.require(r == claim || r == -claim, "resultant equals z^2 (p+z)(p-z)^3 quartic");
  });

  run(6, "N4a and N5a synthesis at the isolated root", 0, [](Outcome& o) {
    const Q width = parse_rational("1e-30");
    for (auto [q, id] : {std::pair{n4a_quartic(), ConfigId::Fig4a}, std::pair{n5a_degree10(), ConfigId::Fig5a}}) {
      Interval iv = isolate_locus_root(q, width);
      o.require(iv.width() <= width, "root width");
      CB b(1, 1, iv.midpoint());
      Synthesis syn = synthesize(id, b);
      for (const auto& [name, v] : syn.elements) o.require(v > 0, "positive " + name);
      NumericCheck chk = verify_numeric(syn.network, to_rational_fn(b), Real("1e-20"));
      o.require(chk.ok, std::string(config_name(id)) + " residual");
      o.detail << config_name(id) << " residual " << to_decimal(chk.residual, 3) << "; ";
    }
  });

  run(7, "transform identities on 1000 random networks", 20.0, [](Outcome& o) {
    Rng rng(7);
    const RationalFn<Q> one(Q(1));
    for (int i = 0; i < 1000; ++i) {
      NQ n = rng.network(static_cast<int>(rng.integer(1, 7)));
      RationalFn<Q> z = impedance(n);
      NQ inv = apply_transform(n, Transform::Inv), dual = apply_transform(n, Transform::Dual),
         gdu = apply_transform(n, Transform::GDu);
      o.require(impedance(dual) * z == one, "Z(Dual n) Z(n) = 1");
      o.require(impedance(inv) == z.substitute_reciprocal(), "Z(Inv n)(s) = Z(n)(1/s)");
      o.require(impedance(gdu) * z.substitute_reciprocal() == one, "Z(GDu n)(s) Z(n)(1/s) = 1");
      o.require(apply_transform(inv, Transform::GDu) == dual, "Dual = GDu o Inv");
      for (Transform t : {Transform::Inv, Transform::Dual, Transform::GDu})
        o.require(apply_transform(apply_transform(n, t), t) == n, "involution");
    }
  });

  run(8, "topology counts 1, 2, 4, 10, 24 against brute force", 5.0, [](Outcome& o) {
    const std::size_t expected[] = {1, 2, 4, 10, 24};
    for (int n = 1; n <= 5; ++n) {
      auto shapes = enumerate_topologies(n);
      std::set<std::string> lib;
      for (auto& s : shapes) lib.insert(s.key);
      o.require(shapes.size() == expected[n - 1], "count for n = " + std::to_string(n));
      o.require(lib.size() == shapes.size(), "no duplicates");
      o.require(lib == brute_force_shapes(n), "same shapes as the binary-tree oracle");
    }
  });

  run(9, "positive-realness against a 1e5-sample frequency oracle", 0, [](Outcome& o) {
    Rng rng(9);
    const double upper = 3 + 2 * std::sqrt(2.0), lower = 3 - 2 * std::sqrt(2.0);
    int agree = 0, pr = 0;
    for (int i = 0; i < 500; ++i) {
      Q z = rng.positive(30, 6), ratio;
      if (i % 5 == 0 || i % 5 == 1) {
        // within 1e-3 of a boundary, on either side
        double base = i % 5 == 0 ? upper : lower;
        long off = rng.integer(-1000, 1000);
        if (off == 0) off = 1;
        ratio = Q(static_cast<long>(std::llround(base * 1e9)), 1000000000) + Q(off, 1000000);
      } else {
        ratio = Q(rng.integer(50, 8000), 1000);
      }
      if (ratio == 1) continue;
      CB b(rng.positive(9, 3), z, z * ratio);
      bool exact = canonical_positive_real(b);
      bool numeric = min_real_part(b.k.convert_to<double>(), b.z.convert_to<double>(), b.p.convert_to<double>(),
                                   100000) >= -1e-12;
      o.require(exact == numeric, "agreement at p/z = " + to_string(ratio));
      agree += exact == numeric;
      pr += exact;
    }
    o.detail << agree << " agreements, " << pr << " positive-real; ";
  });

  run(10, "catalog impedances equal the quoted formulas", 5.0, [](Outcome& o) {
    auto results = catalog_fidelity();
    std::set<ConfigId> seen;
    for (const auto& [id, ok] : results) {
      o.require(ok, config_name(id));
      seen.insert(id);
    }
    o.require(seen.size() == kAllConfigs.size(), "every configuration covered");
  });

  run(11, "falsification floors for (s+1)^2/(s+2)^2 and (s+1)^2/(s+3)^2", 300.0, [](Outcome& o) {
    PQ s = PQ::x();
    auto a = falsify_small(RationalFn<Q>((s + 1) * (s + 1), (s + 2) * (s + 2)), 5);
    for (int n = 1; n <= 3; ++n) o.require(a.best_residual(n) > 1e-6, "no fit with " + std::to_string(n) + " elements");
    o.require(a.any_success(5), "a five-element fit");
    o.require(a.best_residual(5) <= 1e-8, "five-element residual");
    auto b = falsify_small(RationalFn<Q>((s + 1) * (s + 1), (s + 3) * (s + 3)), 4);
    o.require(b.any_success(4), "a four-element fit");
    o.require(b.best_residual(4) <= 1e-8, "four-element residual");
    o.detail << "best n<=3 " << std::min({a.best_residual(1), a.best_residual(2), a.best_residual(3)}) << ", n=5 "
             << a.best_residual(5) << ", n=4 " << b.best_residual(4) << "; ";
  });

  std::printf("%d of 11 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
