#pragma once

#include "spsynth/network.hpp"

#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace spsynth {

// Unlabeled series-parallel shape. Canonical the same way Network is.
struct Shape {
  enum class Type { Edge, Series, Parallel };
  Type type = Type::Edge;
  std::vector<Shape> children;
  int edges = 1;
  std::string key = "e";
};

namespace detail {

inline Shape make_compound(Shape::Type t, std::vector<Shape> kids) {
  Shape s;
  s.type = t;
  std::sort(kids.begin(), kids.end(), [](const Shape& a, const Shape& b) { return a.key < b.key; });
  s.edges = 0;
  s.key = t == Shape::Type::Series ? "S(" : "P(";
  for (std::size_t i = 0; i < kids.size(); ++i) {
    s.edges += kids[i].edges;
    if (i) s.key += ",";
    s.key += kids[i].key;
  }
  s.key += ")";
  s.children = std::move(kids);
  return s;
}

class ShapeTable {
 public:
  // Shapes with n edges whose root is not of type `excluded`.
  const std::vector<Shape>& rooted_not(int n, Shape::Type excluded) {
    auto& cache = excluded == Shape::Type::Series ? not_series_ : not_parallel_;
    if (cache.size() <= static_cast<std::size_t>(n)) cache.resize(static_cast<std::size_t>(n) + 1);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
      std::vector<Shape> out;
      if (n == 1) out.push_back(Shape{});
      else {
        Shape::Type root = excluded == Shape::Type::Series ? Shape::Type::Parallel : Shape::Type::Series;
        out = compounds(n, root);
      }
      slot = std::move(out);
    }
    return *slot;
  }

  // Compound shapes of n edges with the given root junction: multisets of at
  // least two children, none of which shares the root's junction.
  std::vector<Shape> compounds(int n, Shape::Type root) {
    std::vector<const Shape*> pool;
    for (int k = 1; k < n; ++k)
      for (const auto& s : rooted_not(k, root)) pool.push_back(&s);
    std::vector<Shape> out;
    std::vector<const Shape*> chosen;
    std::function<void(std::size_t, int)> pick = [&](std::size_t from, int remaining) {
      if (remaining == 0) {
        if (chosen.size() >= 2) {
          std::vector<Shape> kids;
          for (auto* c : chosen) kids.push_back(*c);
          out.push_back(make_compound(root, std::move(kids)));
        }
        return;
      }
      for (std::size_t i = from; i < pool.size(); ++i) {
        if (pool[i]->edges > remaining) continue;
        chosen.push_back(pool[i]);
        pick(i, remaining - pool[i]->edges);
        chosen.pop_back();
      }
    };
    pick(0, n);
    return out;
  }

 private:
  std::vector<std::optional<std::vector<Shape>>> not_series_, not_parallel_;
};

}  // namespace detail

// All canonical series-parallel two-terminal shapes with n edges, sorted by key.
inline std::vector<Shape> enumerate_topologies(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_topologies supports 1 <= n <= 8");
  detail::ShapeTable table;
  std::vector<Shape> out;
  if (n == 1) out.push_back(Shape{});
  else {
    out = table.compounds(n, Shape::Type::Series);
    auto par = table.compounds(n, Shape::Type::Parallel);
    out.insert(out.end(), par.begin(), par.end());
  }
  std::sort(out.begin(), out.end(), [](const Shape& a, const Shape& b) { return a.key < b.key; });
  return out;
}

// Edge list of the network graph. Terminals are nodes 1 and 0; internal
// nodes are numbered from 2 as a depth-first walk first needs them. Edge i
// is the i-th leaf in depth-first order.
struct TerminalGraph {
  int nodes = 2;
  struct Edge {
    int a, b;
    ElementKind kind;
  };
  std::vector<Edge> edges;
};

template <class T>
TerminalGraph terminal_graph(const Network<T>& n) {
  TerminalGraph g;
  auto place = [&](auto&& self, const Network<T>& net, int a, int b) -> void {
    if (net.is_element()) {
      g.edges.push_back({a, b, net.as_element().kind});
      return;
    }
    const auto& c = net.as_compound();
    if (c.junction == Junction::Parallel) {
      for (const auto& k : c.children) self(self, k, a, b);
      return;
    }
    int from = a;
    for (std::size_t i = 0; i < c.children.size(); ++i) {
      int to = i + 1 == c.children.size() ? b : g.nodes++;
      self(self, c.children[i], from, to);
      from = to;
    }
  };
  place(place, n, 1, 0);
  return g;
}

namespace detail {

inline bool terminals_connected(const TerminalGraph& g, std::uint32_t removed) {
  std::vector<int> parent(static_cast<std::size_t>(g.nodes));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    if (removed & (1u << i)) continue;
    parent[find(g.edges[i].a)] = find(g.edges[i].b);
  }
  return find(0) == find(1);
}

}  // namespace detail

inline constexpr std::size_t kCutsetBudget = 12;

// Minimal terminal-separating edge cuts, as bitmasks over depth-first leaves.
template <class T>
std::vector<std::uint32_t> minimal_cuts(const Network<T>& n) {
  if (n.size() > kCutsetBudget) throw std::length_error("cut-set enumeration budget is 12 elements");
  TerminalGraph g = terminal_graph(n);
  const std::uint32_t total = 1u << g.edges.size();
  std::vector<char> cuts(total);
  for (std::uint32_t m = 0; m < total; ++m) cuts[m] = !detail::terminals_connected(g, m);
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 1; m < total; ++m) {
    if (!cuts[m]) continue;
    bool minimal = true;
    for (std::size_t i = 0; i < g.edges.size() && minimal; ++i)
      if ((m & (1u << i)) && cuts[m & ~(1u << i)]) minimal = false;
    if (minimal) out.push_back(m);
  }
  return out;
}

// True if some minimal cut consists only of inductors or only of capacitors.
template <class T>
bool violates_cutset_rule(const Network<T>& n) {
  TerminalGraph g = terminal_graph(n);
  for (std::uint32_t m : minimal_cuts(n)) {
    bool all_l = true, all_c = true;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      if (!(m & (1u << i))) continue;
      all_l = all_l && g.edges[i].kind == ElementKind::L;
      all_c = all_c && g.edges[i].kind == ElementKind::C;
    }
    if (all_l || all_c) return true;
  }
  return false;
}

template <class T>
bool has_pure_reactive_series_arm(const Network<T>& n) {
  if (n.is_element() || n.as_compound().junction != Junction::Series) return false;
  for (const auto& arm : n.as_compound().children)
    if (count_kind(arm, ElementKind::R) == 0) return true;
  return false;
}

// True if two leaves of the same kind hang directly off one node; such a
// network always reduces to one with fewer elements.
template <class T>
bool has_reducible_siblings(const Network<T>& n) {
  if (n.is_element()) return false;
  int seen[3] = {0, 0, 0};
  for (const auto& c : n.as_compound().children) {
    if (c.is_element()) {
      if (++seen[static_cast<int>(c.as_element().kind)] > 1) return true;
    } else if (has_reducible_siblings(c)) {
      return true;
    }
  }
  return false;
}

struct LabelFilters {
  bool cutset_rule = false;
  bool no_pure_reactive_series_arm = false;
  bool irreducible = false;
  std::optional<int> min_resistors;
  std::optional<int> reactive_count;
};

template <class T>
bool passes(const Network<T>& n, const LabelFilters& f) {
  if (f.min_resistors && static_cast<int>(count_kind(n, ElementKind::R)) < *f.min_resistors) return false;
  if (f.reactive_count && static_cast<int>(reactive_count(n)) != *f.reactive_count) return false;
  if (f.irreducible && has_reducible_siblings(n)) return false;
  if (f.no_pure_reactive_series_arm && has_pure_reactive_series_arm(n)) return false;
  if (f.cutset_rule && violates_cutset_rule(n)) return false;
  return true;
}

// Network of the given shape with kinds taken in depth-first edge order and unit values.
inline Network<Rational> label_shape(const Shape& s, const std::vector<ElementKind>& kinds, std::size_t& next) {
  if (s.type == Shape::Type::Edge) return Network<Rational>::element(kinds.at(next++), Rational(1));
  std::vector<Network<Rational>> kids;
  for (const auto& c : s.children) kids.push_back(label_shape(c, kinds, next));
  return Network<Rational>::compose(s.type == Shape::Type::Series ? Junction::Series : Junction::Parallel,
                                    std::move(kids));
}

// Every R/L/C labeling of every n-edge shape that passes the filters,
// deduplicated and sorted by canonical key. Values are 1; the result doubles
// as a set of fitting templates.
inline std::vector<Network<Rational>> enumerate_labeled(int n, const LabelFilters& filters = {}) {
  std::vector<Network<Rational>> out;
  std::set<std::string> seen;
  for (const auto& shape : enumerate_topologies(n)) {
    std::vector<ElementKind> kinds(static_cast<std::size_t>(n), ElementKind::R);
    std::size_t combos = 1;
    for (int i = 0; i < n; ++i) combos *= 3;
    for (std::size_t code = 0; code < combos; ++code) {
      std::size_t c = code;
      for (int i = 0; i < n; ++i, c /= 3) kinds[static_cast<std::size_t>(i)] = static_cast<ElementKind>(c % 3);
      std::size_t next = 0;
      Network<Rational> net = label_shape(shape, kinds, next);
      if (!seen.insert(net.key()).second) continue;
      if (passes(net, filters)) out.push_back(std::move(net));
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key() < b.key(); });
  return out;
}

}  // namespace spsynth
