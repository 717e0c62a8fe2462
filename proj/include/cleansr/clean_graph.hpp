#pragma once

// Clean graph Cl(R) on pairs (e, u), e idempotent and u a unit, with
// (e,u) ~ (f,v) iff ef = 0 or uv = 1; and its induced subgraphs
// Cl1(R) (e = 0) and Cl2(R) (e != 0).

#include <compare>
#include <string>
#include <vector>

#include "cleansr/graph.hpp"
#include "cleansr/ring.hpp"

namespace cleansr {

struct CleanVertex {
  RingElement idempotent;
  RingElement unit;
  friend auto operator<=>(const CleanVertex&, const CleanVertex&) = default;
};

using CleanGraph = Graph<CleanVertex>;

inline std::string vertex_name(const FiniteRing& r, const CleanVertex& v) {
  return "(" + r.name(v.idempotent) + "," + r.name(v.unit) + ")";
}

inline bool clean_adjacent(const FiniteRing& r, const CleanVertex& a, const CleanVertex& b) {
  return r.mul(a.idempotent, b.idempotent) == r.zero() || r.mul(a.unit, b.unit) == r.one();
}

/// All pairs (e, u), ordered by (idempotent index, unit index).
inline std::vector<CleanVertex> clean_vertices(const FiniteRing& r) {
  std::vector<CleanVertex> out;
  for (auto e : r.idempotents())
    for (auto u : r.units()) out.push_back({e, u});
  return out;
}

inline CleanGraph build_cl(const FiniteRing& r) {
  CleanGraph g(clean_vertices(r));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (clean_adjacent(r, g.label(i), g.label(j))) g.add_edge(i, j);
  return g;
}

inline CleanGraph build_cl1(const FiniteRing& r) {
  return induced_subgraph(build_cl(r), [&](const CleanVertex& v) { return v.idempotent == r.zero(); });
}

inline CleanGraph build_cl2(const FiniteRing& r) {
  return induced_subgraph(build_cl(r), [&](const CleanVertex& v) { return v.idempotent != r.zero(); });
}

enum class CleanVariant { Cl, Cl1, Cl2 };

inline CleanGraph build_clean_graph(const FiniteRing& r, CleanVariant which) {
  switch (which) {
    case CleanVariant::Cl1: return build_cl1(r);
    case CleanVariant::Cl2: return build_cl2(r);
    default: return build_cl(r);
  }
}

}  // namespace cleansr
