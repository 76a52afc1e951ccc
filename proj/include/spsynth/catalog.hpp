#pragma once

#include "spsynth/network.hpp"

#include <array>
#include <memory>
#include <variant>
#include <map>
#include <string>
#include <vector>

namespace spsynth {

enum class ConfigId {
  Fig7a, Fig7b,
  Fig8a, Fig8b, Fig8c, Fig8d,
  Fig9a, Fig9b, Fig9c, Fig9d, Fig9e, Fig9f, Fig9g, Fig9h,
  Fig3a, Fig4a, Fig5a,
};

inline constexpr std::array<ConfigId, 17> kAllConfigs = {
    ConfigId::Fig7a, ConfigId::Fig7b, ConfigId::Fig8a, ConfigId::Fig8b, ConfigId::Fig8c, ConfigId::Fig8d,
    ConfigId::Fig9a, ConfigId::Fig9b, ConfigId::Fig9c, ConfigId::Fig9d, ConfigId::Fig9e, ConfigId::Fig9f,
    ConfigId::Fig9g, ConfigId::Fig9h, ConfigId::Fig3a, ConfigId::Fig4a, ConfigId::Fig5a};

inline const char* config_name(ConfigId id) {
  static const char* names[] = {"Fig7a", "Fig7b", "Fig8a", "Fig8b", "Fig8c", "Fig8d", "Fig9a", "Fig9b", "Fig9c",
                                "Fig9d", "Fig9e", "Fig9f", "Fig9g", "Fig9h", "Fig3a", "Fig4a", "Fig5a"};
  return names[static_cast<int>(id)];
}

inline ConfigId parse_config(std::string_view s) {
  for (ConfigId id : kAllConfigs) {
    std::string n = config_name(id);
    std::string lower = n;
    lower[0] = 'f';
    if (s == n || s == lower) return id;
  }
  if (s == "n4a" || s == "N4a") return ConfigId::Fig4a;
  if (s == "n5a" || s == "N5a") return ConfigId::Fig5a;
  throw std::invalid_argument("unknown configuration '" + std::string(s) + "'");
}

namespace detail {

// Shape description: 'S'/'P' nodes over named slots; the slot's first
// letter is its element kind.
struct Slot {
  std::string name;
};
struct Node;
using Part = std::variant<Slot, std::shared_ptr<Node>>;
struct Node {
  Junction junction;
  std::vector<Part> parts;
};

inline Part slot(std::string n) { return Slot{std::move(n)}; }
inline Part S(std::vector<Part> p) { return std::make_shared<Node>(Node{Junction::Series, std::move(p)}); }
inline Part P(std::vector<Part> p) { return std::make_shared<Node>(Node{Junction::Parallel, std::move(p)}); }

inline Part n1_part(ConfigId id) {
  switch (id) {
    case ConfigId::Fig7a: return P({slot("R1"), S({slot("R2"), slot("C1")})});
    case ConfigId::Fig7b: return P({slot("R1"), S({slot("R2"), slot("L1")})});
    case ConfigId::Fig8a: return P({slot("R1"), slot("L1"), slot("C1")});
    case ConfigId::Fig8b: return P({slot("R1"), S({slot("L1"), slot("C1")})});
    case ConfigId::Fig8c: return P({slot("L1"), S({slot("R1"), slot("C1")})});
    case ConfigId::Fig8d: return P({slot("C1"), S({slot("R1"), slot("L1")})});
    case ConfigId::Fig9a: return P({slot("C21"), slot("R21"), S({slot("L21"), slot("C22")})});
    case ConfigId::Fig9b: return P({slot("L21"), slot("R21"), S({slot("L22"), slot("C21")})});
    case ConfigId::Fig9c: return P({slot("C21"), slot("L21"), S({slot("R21"), slot("C22")})});
    case ConfigId::Fig9d: return P({slot("C21"), slot("L21"), S({slot("R21"), slot("L22")})});
    case ConfigId::Fig9e: return P({slot("C21"), S({slot("R21"), P({slot("L21"), slot("C22")})})});
    case ConfigId::Fig9f: return P({slot("C21"), S({slot("L21"), P({slot("R21"), slot("C22")})})});
    case ConfigId::Fig9g: return P({slot("L21"), S({slot("R21"), P({slot("L22"), slot("C21")})})});
    case ConfigId::Fig9h: return P({slot("L21"), S({slot("C21"), P({slot("R21"), slot("L22")})})});
    case ConfigId::Fig3a: return S({n1_part(ConfigId::Fig7a), n1_part(ConfigId::Fig9g)});
    case ConfigId::Fig4a: return S({n1_part(ConfigId::Fig8b), n1_part(ConfigId::Fig9e)});
    case ConfigId::Fig5a: return S({n1_part(ConfigId::Fig8c), n1_part(ConfigId::Fig9e)});
  }
  throw std::invalid_argument("unknown configuration");
}

inline void collect_slots(const Part& p, std::vector<std::string>& out) {
  if (auto* s = std::get_if<Slot>(&p)) {
    out.push_back(s->name);
    return;
  }
  for (const auto& c : std::get<std::shared_ptr<Node>>(p)->parts) collect_slots(c, out);
}

template <class T>
Network<T> instantiate(const Part& p, const std::map<std::string, T>& values) {
  if (auto* s = std::get_if<Slot>(&p)) {
    auto it = values.find(s->name);
    if (it == values.end()) throw std::invalid_argument("missing slot " + s->name);
    if (!is_positive(it->second)) throw std::invalid_argument("slot " + s->name + " must be positive");
    return Network<T>::element(parse_kind(s->name.substr(0, 1)), it->second);
  }
  const auto& node = *std::get<std::shared_ptr<Node>>(p);
  std::vector<Network<T>> kids;
  for (const auto& c : node.parts) kids.push_back(instantiate(c, values));
  return Network<T>::compose(node.junction, std::move(kids));
}

}  // namespace detail

// Slot names of a configuration in figure order.
inline std::vector<std::string> slot_names(ConfigId id) {
  std::vector<std::string> out;
  detail::collect_slots(detail::n1_part(id), out);
  return out;
}

template <class T>
Network<T> build_config(ConfigId id, const std::map<std::string, T>& values) {
  return detail::instantiate(detail::n1_part(id), values);
}

}  // namespace spsynth
