#pragma once

// Independent oracles and seeded generators shared by the unit tests. Nothing
// here reuses the solver code it is meant to check.

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cleansr/graph.hpp"
#include "cleansr/ring.hpp"

namespace cleansr::testing {

/// Erdos-Renyi graph G(n, p) from a fixed seed.
inline PlainGraph random_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::bernoulli_distribution coin(p);
  auto g = make_plain_graph(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random connected graph: a random spanning tree plus G(n, p) edges.
inline PlainGraph random_connected_graph(std::size_t n, double p, std::uint32_t seed) {
  std::mt19937 rng(seed);
  auto g = random_graph(n, p, seed * 7919u + 1u);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    auto u = pick(rng);
    if (!g.adjacent(u, v)) g.add_edge(u, v);
  }
  return g;
}

/// Floyd-Warshall distances; -1 marks unreachable.
template <class Label>
std::vector<std::vector<int>> floyd_warshall(const Graph<Label>& g) {
  const auto n = g.size();
  const int inf = 1 << 20;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (std::size_t u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (std::size_t v = 0; v < n; ++v)
      if (g.adjacent(u, v)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  for (auto& row : d)
    for (auto& x : row)
      if (x >= inf) x = -1;
  return d;
}

/// Independence number by enumerating every vertex subset.
template <class Label>
std::size_t brute_force_independence(const Graph<Label>& g) {
  const auto n = g.size();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t u = 0; u < n && ok; ++u)
      if (mask >> u & 1u)
        for (std::size_t v = u + 1; v < n; ++v)
          if ((mask >> v & 1u) && g.adjacent(u, v)) {
            ok = false;
            break;
          }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Vertex cover number by enumerating every vertex subset.
template <class Label>
std::size_t brute_force_vertex_cover(const Graph<Label>& g) {
  const auto n = g.size();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!(mask >> u & 1u) && !(mask >> v & 1u)) {
        ok = false;
        break;
      }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(mask)));
  }
  return best;
}

/// Strong metric dimension by enumerating subsets in increasing size,
/// using shortest-path membership straight from Floyd-Warshall distances.
template <class Label>
std::size_t brute_force_sdim(const Graph<Label>& g) {
  const auto n = g.size();
  auto d = floyd_warshall(g);
  auto resolved = [&](std::uint32_t mask, std::size_t u, std::size_t v) {
    for (std::size_t w = 0; w < n; ++w) {
      if (!(mask >> w & 1u)) continue;
      if (d[u][w] == d[u][v] + d[v][w] || d[v][w] == d[v][u] + d[u][w]) return true;
    }
    return false;
  };
  for (std::size_t k = 0; k <= n; ++k)
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      bool ok = true;
      for (std::size_t u = 0; u < n && ok; ++u)
        for (std::size_t v = u + 1; v < n && ok; ++v) ok = resolved(mask, u, v);
      if (ok) return k;
    }
  return n;
}

/// Element with the given display name; throws when absent.
inline RingElement element(const FiniteRing& r, const std::string& name) {
  for (std::uint32_t a = 0; a < r.order(); ++a)
    if (r.names()[a] == name) return {a};
  throw std::out_of_range("no element named " + name);
}

inline std::vector<std::string> names_of(const FiniteRing& r, const std::vector<RingElement>& xs) {
  std::vector<std::string> out;
  for (auto x : xs) out.push_back(r.name(x));
  return out;
}

/// Idempotents and units read straight from the multiplication table.
inline std::vector<std::uint32_t> naive_idempotents(const FiniteRing& r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < r.order(); ++a)
    if (r.mul_table()[a * r.order() + a] == a) out.push_back(a);
  return out;
}

inline std::vector<std::uint32_t> naive_units(const FiniteRing& r) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 0; a < r.order(); ++a)
    for (std::uint32_t b = 0; b < r.order(); ++b)
      if (r.mul_table()[a * r.order() + b] == 1) {
        out.push_back(a);
        break;
      }
  return out;
}

}  // namespace cleansr::testing
