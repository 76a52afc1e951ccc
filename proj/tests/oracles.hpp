#pragma once

// Independent oracles shared by the unit tests and the acceptance binary.

#include "support.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace spsynth::testing {

// Canonical key of a binary S/P tree after flattening, built independently
// of the library's canonical form.
struct Tree {
  char op;  // 'e', 'S' or 'P'
  std::shared_ptr<Tree> l, r;
};

inline void collect(const Tree& t, char op, std::vector<std::string>& out, const std::function<std::string(const Tree&)>& key) {
  if (t.op == op) {
    collect(*t.l, op, out, key);
    collect(*t.r, op, out, key);
  } else {
    out.push_back(key(t));
  }
}

inline std::string tree_key(const Tree& t) {
  if (t.op == 'e') return "e";
  std::vector<std::string> parts;
  collect(t, t.op, parts, tree_key);
  std::sort(parts.begin(), parts.end());
  std::string k(1, t.op);
  k += "(";
  for (std::size_t i = 0; i < parts.size(); ++i) k += (i ? "," : "") + parts[i];
  return k + ")";
}

inline std::vector<std::shared_ptr<Tree>> all_trees(int n) {
  std::vector<std::shared_ptr<Tree>> out;
  if (n == 1) {
    out.push_back(std::make_shared<Tree>(Tree{'e', nullptr, nullptr}));
    return out;
  }
  for (int k = 1; k < n; ++k)
    for (auto& l : all_trees(k))
      for (auto& r : all_trees(n - k))
        for (char op : {'S', 'P'}) out.push_back(std::make_shared<Tree>(Tree{op, l, r}));
  return out;
}

// Flattened shape keys of every binary S/P tree with n leaves.
inline std::set<std::string> brute_force_shapes(int n) {
  std::set<std::string> keys;
  for (auto& t : all_trees(n)) keys.insert(tree_key(*t));
  return keys;
}

using SPoly = Poly<MPoly>;

// One indeterminate per slot name, shared by every configuration so a
// seven-element network and its parts use the same symbols.
inline MPoly slot_var(const std::string& name) {
  static std::map<std::string, std::size_t> index;
  auto it = index.try_emplace(name, index.size()).first;
  return MPoly::variable(it->second);
}

struct Symbolic {
  std::map<std::string, MPoly> var;
  Fraction<SPoly> z;
};

inline Symbolic symbolic_impedance(ConfigId id) {
  Symbolic out;
  for (const auto& n : slot_names(id)) out.var[n] = slot_var(n);
  Network<MPoly> net = build_config<MPoly>(id, out.var);
  out.z = impedance_fraction<SPoly>(net, [](const Network<MPoly>::Element& e) {
    SPoly v(e.value), one(MPoly(1)), s = SPoly::x();
    if (e.kind == ElementKind::R) return Fraction<SPoly>{v, one};
    if (e.kind == ElementKind::L) return Fraction<SPoly>{v * s, one};
    return Fraction<SPoly>{one, v * s};
  });
  return out;
}

inline bool same_function(const Fraction<SPoly>& a, const SPoly& num, const SPoly& den) {
  return a.num * den == num * a.den;
}

inline SPoly sp(std::initializer_list<MPoly> ascending) { return SPoly(std::vector<MPoly>(ascending)); }

// Symbolic impedance of every configuration compared with its quoted formula
// by cross-multiplication.
inline std::vector<std::pair<ConfigId, bool>> catalog_fidelity() {
  std::vector<std::pair<ConfigId, bool>> out;
  auto put = [&](ConfigId id, bool ok) { out.emplace_back(id, ok); };

  {
    auto z7a = symbolic_impedance(ConfigId::Fig7a);
    {
      auto &R1 = z7a.var["R1"], &R2 = z7a.var["R2"], &C1 = z7a.var["C1"];
      // R1 || (R2 + 1/(C1 s)) = R1 (R2 C1 s + 1) / ((R1 + R2) C1 s + 1)
      put(ConfigId::Fig7a, same_function(z7a.z, sp({R1, R1 * R2 * C1}), sp({MPoly(1), (R1 + R2) * C1})));
    }
    auto z7b = symbolic_impedance(ConfigId::Fig7b);
    {
      auto &R1 = z7b.var["R1"], &R2 = z7b.var["R2"], &L1 = z7b.var["L1"];
      put(ConfigId::Fig7b, same_function(z7b.z, sp({R1 * R2, R1 * L1}), sp({R1 + R2, L1})));
    }
    auto z8a = symbolic_impedance(ConfigId::Fig8a);
    {
      auto &R1 = z8a.var["R1"], &L1 = z8a.var["L1"], &C1 = z8a.var["C1"];
      put(ConfigId::Fig8a, same_function(z8a.z, sp({MPoly(0), R1 * L1}), sp({R1, L1, R1 * L1 * C1})));
    }
    auto z8b = symbolic_impedance(ConfigId::Fig8b);
    {
      auto &R1 = z8b.var["R1"], &L1 = z8b.var["L1"], &C1 = z8b.var["C1"];
      put(ConfigId::Fig8b, same_function(z8b.z, sp({R1, MPoly(0), R1 * L1 * C1}), sp({MPoly(1), R1 * C1, L1 * C1})));
    }
    auto z8c = symbolic_impedance(ConfigId::Fig8c);
    {
      auto &R1 = z8c.var["R1"], &L1 = z8c.var["L1"], &C1 = z8c.var["C1"];
      put(ConfigId::Fig8c, same_function(z8c.z, sp({MPoly(0), L1, R1 * L1 * C1}), sp({MPoly(1), R1 * C1, L1 * C1})));
    }
    auto z8d = symbolic_impedance(ConfigId::Fig8d);
    {
      auto &R1 = z8d.var["R1"], &L1 = z8d.var["L1"], &C1 = z8d.var["C1"];
      // (1/(C1 s)) || (R1 + L1 s)
      put(ConfigId::Fig8d, same_function(z8d.z, sp({R1, L1}), sp({MPoly(1), R1 * C1, L1 * C1})));
    }
  }

  {
    auto z = symbolic_impedance(ConfigId::Fig9a);
    {
      auto &R = z.var["R21"], &L = z.var["L21"], &C1 = z.var["C21"], &C2 = z.var["C22"];
      put(ConfigId::Fig9a, same_function(z.z, sp({R, MPoly(0), R * L * C2}), sp({MPoly(1), R * (C1 + C2), L * C2, R * L * C1 * C2})));
    }
    z = symbolic_impedance(ConfigId::Fig9b);
    {
      auto &R = z.var["R21"], &L1 = z.var["L21"], &L2 = z.var["L22"], &C = z.var["C21"];
      put(ConfigId::Fig9b, same_function(z.z, sp({MPoly(0), R * L1, MPoly(0), R * L1 * L2 * C}),
                          sp({R, L1, R * C * (L1 + L2), L1 * L2 * C})));
    }
    z = symbolic_impedance(ConfigId::Fig9c);
    {
      auto &R = z.var["R21"], &L = z.var["L21"], &C1 = z.var["C21"], &C2 = z.var["C22"];
      put(ConfigId::Fig9c, same_function(z.z, sp({MPoly(0), L, R * L * C2}), sp({MPoly(1), R * C2, L * (C1 + C2), R * L * C1 * C2})));
    }
    z = symbolic_impedance(ConfigId::Fig9d);
    {
      auto &R = z.var["R21"], &L1 = z.var["L21"], &L2 = z.var["L22"], &C = z.var["C21"];
      put(ConfigId::Fig9d, same_function(z.z, sp({MPoly(0), R * L1, L1 * L2}), sp({R, L1 + L2, R * L1 * C, L1 * L2 * C})));
    }
    z = symbolic_impedance(ConfigId::Fig9e);
    {
      auto &R = z.var["R21"], &L = z.var["L21"], &C1 = z.var["C21"], &C2 = z.var["C22"];
      put(ConfigId::Fig9e, same_function(z.z, sp({R, L, R * L * C2}), sp({MPoly(1), R * C1, L * (C1 + C2), R * L * C1 * C2})));
    }
    z = symbolic_impedance(ConfigId::Fig9f);
    {
      auto &R = z.var["R21"], &L = z.var["L21"], &C1 = z.var["C21"], &C2 = z.var["C22"];
      put(ConfigId::Fig9f, same_function(z.z, sp({R, L, R * L * C2}), sp({MPoly(1), R * (C1 + C2), L * C1, R * L * C1 * C2})));
    }
    z = symbolic_impedance(ConfigId::Fig9g);
    {
      auto &R = z.var["R21"], &L1 = z.var["L21"], &L2 = z.var["L22"], &C = z.var["C21"];
      // (L1 s) || (R + (L2 s || 1/(C s)))
      put(ConfigId::Fig9g, same_function(z.z, sp({MPoly(0), R * L1, L1 * L2, R * L1 * L2 * C}),
                          sp({R, L1 + L2, R * L2 * C, L1 * L2 * C})));
    }
    z = symbolic_impedance(ConfigId::Fig9h);
    {
      auto &R = z.var["R21"], &L1 = z.var["L21"], &L2 = z.var["L22"], &C = z.var["C21"];
      put(ConfigId::Fig9h, same_function(z.z, sp({MPoly(0), R * L1, L1 * L2, R * L1 * L2 * C}),
                          sp({R, L2, R * C * (L1 + L2), L1 * L2 * C})));
    }
  }

  {
    auto sum = [](ConfigId whole, ConfigId a, ConfigId b) {
      auto w = symbolic_impedance(whole), x = symbolic_impedance(a), y = symbolic_impedance(b);
      return same_function(w.z, x.z.num * y.z.den + y.z.num * x.z.den, x.z.den * y.z.den);
    };
    put(ConfigId::Fig3a, sum(ConfigId::Fig3a, ConfigId::Fig7a, ConfigId::Fig9g));
    put(ConfigId::Fig4a, sum(ConfigId::Fig4a, ConfigId::Fig8b, ConfigId::Fig9e));
    put(ConfigId::Fig5a, sum(ConfigId::Fig5a, ConfigId::Fig8c, ConfigId::Fig9e));
  }
  return out;
}

}  // namespace spsynth::testing
