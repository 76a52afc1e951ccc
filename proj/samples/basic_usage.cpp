// Classifies a few canonical biquads, synthesizes the seven-element network
// for one of them and prints it as a SPICE netlist.

#include "spsynth/spsynth.hpp"

#include <iostream>

using namespace spsynth;

int main() {
  PrecisionScope precision(kDefaultPrecisionBits);

  for (auto [z, p] : {std::pair{1, 3}, {1, 2}, {1, 5}, {5, 1}, {1, 6}}) {
    CanonicalBiquad<Rational> b(Rational(1), Rational(z), Rational(p));
    RealizationReport r = classify(b);
    std::cout << "z=" << z << " p=" << p << ": " << kind_name(r.kind);
    if (r.config) std::cout << " via " << config_name(*r.config);
    if (r.via) std::cout << " (" << transform_name(*r.via) << ")";
    std::cout << "\n";
  }

  CanonicalBiquad<Rational> b(Rational(1), Rational(1), Rational(5));
  Synthesis syn = synth_fig3a(b);
  NumericCheck check = verify_numeric(syn.network, to_rational_fn(b), Real("1e-20"));
  std::cout << "\n" << to_spice(syn.network, 20);
  std::cout << "residual " << to_decimal(check.residual, 6) << "\n";
  return check.ok ? 0 : 1;
}
