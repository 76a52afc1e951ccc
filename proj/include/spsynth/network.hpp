#pragma once

#include "spsynth/rational_fn.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

namespace spsynth {

enum class ElementKind { R, L, C };
enum class Junction { Series, Parallel };
enum class Transform { Inv, Dual, GDu };

inline char kind_char(ElementKind k) { return k == ElementKind::R ? 'R' : (k == ElementKind::L ? 'L' : 'C'); }

inline ElementKind parse_kind(std::string_view s) {
  if (s == "R") return ElementKind::R;
  if (s == "L") return ElementKind::L;
  if (s == "C") return ElementKind::C;
  throw std::invalid_argument("unknown element kind '" + std::string(s) + "'");
}

inline const char* transform_name(Transform t) {
  return t == Transform::Inv ? "inv" : (t == Transform::Dual ? "dual" : "gdu");
}

inline Transform parse_transform(std::string_view s) {
  if (s == "inv" || s == "Inv") return Transform::Inv;
  if (s == "dual" || s == "Dual") return Transform::Dual;
  if (s == "gdu" || s == "GDu") return Transform::GDu;
  throw std::invalid_argument("unknown transform '" + std::string(s) + "'");
}

// Series-parallel two-terminal network. Always held in canonical form:
// same-junction children are flattened into their parent and siblings are
// sorted by (leaf before compound, leaf kind, serialized subtree), so two
// networks are structurally equal exactly when their keys are equal.
template <class T>
class Network {
 public:
  struct Element {
    ElementKind kind;
    T value;
  };
  struct Compound {
    Junction junction;
    std::vector<Network> children;
  };

  static Network element(ElementKind kind, T value) {
    if (!is_positive(value)) throw std::invalid_argument("element values must be positive");
    Network n;
    n.key_ = std::string(1, kind_char(kind)) + ":" + key_string(value);
    n.node_ = Element{kind, std::move(value)};
    n.leaves_ = 1;
    return n;
  }
  static Network resistor(T v) { return element(ElementKind::R, std::move(v)); }
  static Network inductor(T v) { return element(ElementKind::L, std::move(v)); }
  static Network capacitor(T v) { return element(ElementKind::C, std::move(v)); }

  static Network compose(Junction j, std::vector<Network> parts) {
    std::vector<Network> flat;
    for (auto& c : parts) {
      if (!c.is_element() && c.as_compound().junction == j)
        for (const auto& g : c.as_compound().children) flat.push_back(g);
      else
        flat.push_back(std::move(c));
    }
    if (flat.empty()) throw std::invalid_argument("series/parallel node needs children");
    if (flat.size() == 1) return std::move(flat.front());
    std::sort(flat.begin(), flat.end(), [](const Network& a, const Network& b) { return a.order_tuple() < b.order_tuple(); });
    Network n;
    n.key_ = j == Junction::Series ? "S(" : "P(";
    n.leaves_ = 0;
    for (std::size_t i = 0; i < flat.size(); ++i) {
      if (i) n.key_ += ",";
      n.key_ += flat[i].key_;
      n.leaves_ += flat[i].leaves_;
    }
    n.key_ += ")";
    n.node_ = Compound{j, std::move(flat)};
    return n;
  }
  static Network series(std::vector<Network> parts) { return compose(Junction::Series, std::move(parts)); }
  static Network parallel(std::vector<Network> parts) { return compose(Junction::Parallel, std::move(parts)); }

  bool is_element() const { return std::holds_alternative<Element>(node_); }
  const Element& as_element() const { return std::get<Element>(node_); }
  const Compound& as_compound() const { return std::get<Compound>(node_); }
  const std::string& key() const { return key_; }
  std::size_t size() const { return leaves_; }

  // Leaves in depth-first order of the canonical tree.
  template <class F>
  void for_each_leaf(F&& f) const {
    if (is_element()) {
      f(as_element());
      return;
    }
    for (const auto& c : as_compound().children) c.for_each_leaf(f);
  }

  friend bool operator==(const Network& a, const Network& b) { return a.key_ == b.key_; }

 private:
  Network() = default;

  std::tuple<int, int, const std::string&> order_tuple() const {
    if (is_element()) return {0, static_cast<int>(as_element().kind), key_};
    return {1, -1, key_};
  }

  std::variant<Element, Compound> node_;
  std::string key_;
  std::size_t leaves_ = 0;
};

template <class T>
std::size_t count_kind(const Network<T>& n, ElementKind kind) {
  std::size_t c = 0;
  n.for_each_leaf([&](const auto& e) { c += e.kind == kind; });
  return c;
}

template <class T>
std::size_t reactive_count(const Network<T>& n) {
  return count_kind(n, ElementKind::L) + count_kind(n, ElementKind::C);
}

template <class T>
std::vector<typename Network<T>::Element> leaves(const Network<T>& n) {
  std::vector<typename Network<T>::Element> out;
  n.for_each_leaf([&](const auto& e) { out.push_back(e); });
  return out;
}

// Rebuilds the tree with leaf (kind, value) mapped through f; f returns a Network<U>.
template <class U, class T, class F>
Network<U> rebuild(const Network<T>& n, F&& f) {
  if (n.is_element()) return f(n.as_element());
  std::vector<Network<U>> kids;
  for (const auto& c : n.as_compound().children) kids.push_back(rebuild<U>(c, f));
  return Network<U>::compose(n.as_compound().junction, std::move(kids));
}

template <class U, class T, class F>
Network<U> map_values(const Network<T>& n, F&& f) {
  return rebuild<U>(n, [&](const auto& e) { return Network<U>::element(e.kind, f(e.value)); });
}

namespace detail {

template <class T>
Network<T> swap_junctions(const Network<T>& n, bool swap, auto&& leaf) {
  if (n.is_element()) return leaf(n.as_element());
  std::vector<Network<T>> kids;
  for (const auto& c : n.as_compound().children) kids.push_back(swap_junctions(c, swap, leaf));
  Junction j = n.as_compound().junction;
  if (swap) j = j == Junction::Series ? Junction::Parallel : Junction::Series;
  return Network<T>::compose(j, std::move(kids));
}

}  // namespace detail

template <class T>
Network<T> apply_transform(const Network<T>& n, Transform t) {
  using E = typename Network<T>::Element;
  switch (t) {
    case Transform::Inv:
      return detail::swap_junctions(n, false, [](const E& e) {
        if (e.kind == ElementKind::R) return Network<T>::resistor(e.value);
        ElementKind k = e.kind == ElementKind::L ? ElementKind::C : ElementKind::L;
        return Network<T>::element(k, reciprocal(e.value));
      });
    case Transform::Dual:
      return detail::swap_junctions(n, true, [](const E& e) {
        if (e.kind == ElementKind::R) return Network<T>::resistor(reciprocal(e.value));
        ElementKind k = e.kind == ElementKind::L ? ElementKind::C : ElementKind::L;
        return Network<T>::element(k, e.value);
      });
    case Transform::GDu:
      return detail::swap_junctions(n, true, [](const E& e) { return Network<T>::element(e.kind, reciprocal(e.value)); });
  }
  throw std::invalid_argument("unknown transform");
}

// Impedance at a point s (U may be Real, Rational, std::complex<double>, ...).
template <class U, class T, class Conv>
U impedance_at(const Network<T>& n, const U& s, Conv&& conv) {
  if (n.is_element()) {
    const auto& e = n.as_element();
    U v = conv(e.value);
    switch (e.kind) {
      case ElementKind::R: return v;
      case ElementKind::L: return v * s;
      case ElementKind::C: return U(1) / (v * s);
    }
  }
  const auto& c = n.as_compound();
  U acc{};
  for (const auto& k : c.children) {
    U z = impedance_at(k, s, conv);
    acc = c.junction == Junction::Series ? acc + z : acc + U(1) / z;
  }
  return c.junction == Junction::Series ? acc : U(1) / acc;
}

template <class U, class T>
U impedance_at(const Network<T>& n, const U& s) {
  return impedance_at(n, s, [](const T& v) { return U(v); });
}

// Impedance as a reduced rational function in s (T must be a field).
template <class T>
RationalFn<T> impedance(const Network<T>& n) {
  if (n.is_element()) {
    const auto& e = n.as_element();
    switch (e.kind) {
      case ElementKind::R: return RationalFn<T>(e.value);
      case ElementKind::L: return RationalFn<T>(Poly<T>{T{}, e.value});
      case ElementKind::C: return RationalFn<T>(Poly<T>(T(1)), Poly<T>{T{}, e.value});
    }
  }
  const auto& c = n.as_compound();
  RationalFn<T> acc;
  for (const auto& k : c.children) {
    RationalFn<T> z = impedance(k);
    acc = c.junction == Junction::Series ? acc + z : acc + z.reciprocal();
  }
  return c.junction == Junction::Series ? acc : acc.reciprocal();
}

template <class P>
struct Fraction {
  P num;
  P den;
};

// Unreduced impedance over a ring P. leaf maps an element to its Fraction.
// Series: (N1 D2 + N2 D1)/(D1 D2); parallel: N1 N2/(N1 D2 + N2 D1).
template <class P, class T, class Leaf>
Fraction<P> impedance_fraction(const Network<T>& n, Leaf&& leaf) {
  if (n.is_element()) return leaf(n.as_element());
  const auto& c = n.as_compound();
  Fraction<P> acc = impedance_fraction<P>(c.children.front(), leaf);
  for (std::size_t i = 1; i < c.children.size(); ++i) {
    Fraction<P> z = impedance_fraction<P>(c.children[i], leaf);
    P cross = acc.num * z.den + z.num * acc.den;
    if (c.junction == Junction::Series)
      acc = {cross, acc.den * z.den};
    else
      acc = {acc.num * z.num, cross};
  }
  return acc;
}

}  // namespace spsynth
