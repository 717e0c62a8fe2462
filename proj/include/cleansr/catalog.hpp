#pragma once

// The thirteen local rings of order at most 8, addressable as "local8/<NAME>",
// plus the default battery of finite products used by the verifier.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cleansr/ring_spec.hpp"

namespace cleansr {

struct CatalogEntry {
  std::string name;        // catalog name without the "local8/" prefix
  std::string definition;  // ring-spec text the name expands to
  std::uint32_t order = 0;
};

inline const std::vector<CatalogEntry>& local_ring_table() {
  static const std::vector<CatalogEntry> table = {
      {"Z2", "Z2", 2},
      {"Z3", "Z3", 3},
      {"F4", "GF(4)", 4},
      {"Z4", "Z4", 4},
      {"Z2x2", "Z2[x]/(x^2)", 4},
      {"Z5", "Z5", 5},
      {"Z7", "Z7", 7},
      {"F8", "GF(8)", 8},
      {"Z8", "Z8", 8},
      {"Z2x3", "Z2[x]/(x^3)", 8},
      {"Z2xy_x2_xy_y2", "Z2[x,y]/(x^2, xy, y^2)", 8},
      {"Z4x_2x_x2", "Z4[x]/(2x, x^2)", 8},
      {"Z4x_2x_x2m2", "Z4[x]/(2x, x^2-2)", 8},
  };
  return table;
}

inline std::optional<RingSpec> resolve_catalog_name(std::string_view name) {
  for (const auto& e : local_ring_table())
    if (e.name == name) return parse_ring_spec(e.definition);
  return std::nullopt;
}

/// Default battery of products of local rings. Covers every case split of the
/// independence-number and strong-dimension theorems while keeping
/// |V(Cl(R))| <= 64.
inline const std::vector<std::string>& default_product_battery() {
  static const std::vector<std::string> battery = {
      "Z2 x Z2",
      "Z2 x Z2 x Z2",
      "Z2 x Z2 x Z2 x Z2",
      "Z6",
      "Z2 x Z3",
      "Z3 x Z3",
      "Z2 x Z4",
      "Z2 x Z8",
      "Z3 x Z4",
      "Z2 x Z2 x Z3",
      "Z3 x Z3 x Z3",
      "Z2 x GF(4)",
      "Z2 x Z5",
      "Z2 x local8/Z2x3",
      "Z2 x local8/Z4x_2x_x2m2",
      "Z2 x Z2 x GF(4)",
      "Z2 x Z2 x Z2 x GF(4)",
      "Z2 x Z2 x Z5",
      "Z2 x Z7",
      "Z3 x GF(4)",
      "Z2 x GF(8)",
      "Z2 x Z2 x Z7",
  };
  return battery;
}

struct NamedSpec {
  std::string name;
  RingSpec spec;
};

/// The local rings (as catalog references) followed by the product battery.
inline std::vector<NamedSpec> catalog() {
  std::vector<NamedSpec> out;
  for (const auto& e : local_ring_table())
    out.push_back({"local8/" + e.name, RingSpec::catalog_ref(e.name)});
  for (const auto& text : default_product_battery()) {
    auto s = parse_ring_spec(text);
    out.push_back({to_string(s), s});
  }
  return out;
}

inline std::vector<NamedSpec> catalog_locals() {
  auto all = catalog();
  all.resize(local_ring_table().size());
  return all;
}

inline std::vector<NamedSpec> catalog_products() {
  auto all = catalog();
  all.erase(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(local_ring_table().size()));
  return all;
}

}  // namespace cleansr
