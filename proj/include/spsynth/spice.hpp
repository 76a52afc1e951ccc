#pragma once

#include "spsynth/topology.hpp"

#include <sstream>
#include <string>

namespace spsynth {

inline std::string spice_value(const Rational& v, unsigned digits) {
  if (mp::denominator(v) == 1) return mp::numerator(v).str();
  return to_decimal(v, digits);
}
inline std::string spice_value(const Real& v, unsigned digits) { return to_decimal(v, digits); }
inline std::string spice_value(double v, unsigned digits) { return to_decimal(Real(v), std::min(digits, 17u)); }

// One line per leaf, "R1 n1 n2 value"; terminals are nodes 1 and 0 and
// internal nodes are numbered depth first.
template <class T>
std::string to_spice(const Network<T>& n, unsigned digits = 30) {
  TerminalGraph g = terminal_graph(n);
  std::vector<T> values;
  n.for_each_leaf([&](const auto& e) { values.push_back(e.value); });
  int counters[3] = {0, 0, 0};
  std::ostringstream out;
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const auto& e = g.edges[i];
    out << kind_char(e.kind) << ++counters[static_cast<int>(e.kind)] << ' ' << e.a << ' ' << e.b << ' '
        << spice_value(values[i], digits) << '\n';
  }
  return out.str();
}

}  // namespace spsynth
