#pragma once

// Exact maximum independent set / minimum vertex cover by branch and bound,
// the strong metric dimension through the strong resolving graph, and a
// definitional brute-force sdim oracle (exact minimum set cover).

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cleansr/bitset.hpp"
#include "cleansr/error.hpp"
#include "cleansr/graph.hpp"
#include "cleansr/srg.hpp"

namespace cleansr {

struct VertexSet {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // sorted vertex indices
};

namespace detail {

template <class Label>
class MisSolver {
 public:
  explicit MisSolver(const Graph<Label>& g) : g_(g), best_(g.size()) {}

  VertexSet solve() {
    Bitset all(g_.size());
    all.set_all();
    Bitset chosen(g_.size());
    search(std::move(all), chosen, 0);
    return {best_size_, best_.to_vector()};
  }

 private:
  std::size_t degree_in(std::size_t v, const Bitset& p) const {
    return g_.neighbors(v).intersection_count(p);
  }

  /// Greedy clique cover of p; its size bounds the independence number of g[p].
  std::size_t clique_cover_bound(const Bitset& p) const {
    std::vector<Bitset> commons;
    p.for_each([&](std::size_t v) {
      for (auto& c : commons)
        if (c.test(v)) {
          c &= g_.neighbors(v);
          return;
        }
      Bitset c = g_.neighbors(v);
      c &= p;
      commons.push_back(std::move(c));
    });
    return commons.size();
  }

  void search(Bitset p, Bitset chosen, std::size_t size) {
    // Degree-0 and degree-1 vertices are always in some maximum independent set.
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t v = p.first(); v != Bitset::npos; v = p.next(v + 1)) {
        const auto deg = degree_in(v, p);
        if (deg > 1) continue;
        chosen.set(v);
        ++size;
        p.reset(v);
        if (deg == 1) {
          Bitset nb = g_.neighbors(v);
          nb &= p;
          p.subtract(nb);
        }
        changed = true;
      }
    }
    if (p.none()) {
      if (size > best_size_ || best_size_ == 0) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + clique_cover_bound(p) <= best_size_) return;

    std::size_t pick = Bitset::npos, pick_deg = 0;
    p.for_each([&](std::size_t v) {
      auto d = degree_in(v, p);
      if (pick == Bitset::npos || d > pick_deg) {
        pick = v;
        pick_deg = d;
      }
    });

    Bitset with = p;
    with.reset(pick);
    with.subtract(g_.neighbors(pick));
    Bitset chosen_with = chosen;
    chosen_with.set(pick);
    search(std::move(with), std::move(chosen_with), size + 1);

    p.reset(pick);
    search(std::move(p), std::move(chosen), size);
  }

  const Graph<Label>& g_;
  Bitset best_;
  std::size_t best_size_ = 0;
};

}  // namespace detail

/// Exact independence number with a deterministic witness.
template <class Label>
VertexSet max_independent_set(const Graph<Label>& g) {
  if (g.size() == 0) return {};
  return detail::MisSolver<Label>(g).solve();
}

/// Complement of the maximum independent set witness (Gallai).
template <class Label>
VertexSet min_vertex_cover(const Graph<Label>& g) {
  auto mis = max_independent_set(g);
  VertexSet out;
  std::size_t k = 0;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (k < mis.witness.size() && mis.witness[k] == v) {
      ++k;
      continue;
    }
    out.witness.push_back(v);
  }
  out.size = out.witness.size();
  return out;
}

template <class Label>
bool is_independent_set(const Graph<Label>& g, const std::vector<std::size_t>& s) {
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

template <class Label>
bool is_vertex_cover(const Graph<Label>& g, const std::vector<std::size_t>& s) {
  Bitset in(g.size());
  for (auto v : s) in.set(v);
  for (auto [u, v] : g.edges())
    if (!in.test(u) && !in.test(v)) return false;
  return true;
}

/// w strongly resolves {u, v}: u lies on a shortest v-w path or v on a shortest u-w path.
inline bool strongly_resolves(std::size_t w, std::size_t u, std::size_t v, const DistanceMatrix& d) {
  return d(u, w) == d(u, v) + d(v, w) || d(v, w) == d(v, u) + d(u, w);
}

inline bool is_strong_resolving_set(const DistanceMatrix& d, const std::vector<std::size_t>& s) {
  const auto n = d.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (std::none_of(s.begin(), s.end(), [&](std::size_t w) { return strongly_resolves(w, u, v, d); }))
        return false;
  return true;
}

struct DimensionReport {
  std::size_t srg_vertices = 0;
  std::size_t alpha_srg = 0;
  std::size_t beta_srg = 0;
  std::size_t sdim = 0;
  // All witnesses are vertex indices of the source graph.
  std::vector<std::size_t> independent_set;
  std::vector<std::size_t> vertex_cover;
  std::vector<std::size_t> resolving_set;
  bool oracle_ran = false;
  std::size_t oracle_sdim = 0;
};

/// sdim(g) = alpha(g_SR). Throws Disconnected.
template <class Label>
DimensionReport sdim_via_srg(const Graph<Label>& g) {
  auto srg = strong_resolving_graph(g);
  auto mis = max_independent_set(srg.srg);
  auto cover = min_vertex_cover(srg.srg);
  DimensionReport rep;
  rep.srg_vertices = srg.srg.size();
  rep.beta_srg = mis.size;
  rep.alpha_srg = cover.size;
  rep.sdim = cover.size;
  for (auto v : mis.witness) rep.independent_set.push_back(srg.boundary[v]);
  for (auto v : cover.witness) rep.vertex_cover.push_back(srg.boundary[v]);
  return rep;
}

namespace detail {

class StrongSetCover {
 public:
  StrongSetCover(std::size_t n, std::vector<Bitset> candidates)
      : n_(n), cand_(std::move(candidates)) {}

  VertexSet solve() {
    // Any n - 1 vertices form a strong resolving set of a connected graph.
    best_.clear();
    for (std::size_t v = 0; v + 1 < n_; ++v) best_.push_back(v);
    std::vector<std::size_t> open(cand_.size());
    for (std::size_t i = 0; i < open.size(); ++i) open[i] = i;
    std::vector<std::size_t> chosen;
    Bitset forbidden(n_);
    search(open, chosen, forbidden);
    std::sort(best_.begin(), best_.end());
    return {best_.size(), best_};
  }

 private:
  /// Greedy packing of uncovered pairs with pairwise disjoint candidate sets.
  std::size_t disjoint_lower_bound(const std::vector<std::size_t>& open, const Bitset& forbidden) const {
    Bitset used(n_);
    std::size_t count = 0;
    for (auto i : open) {
      Bitset c = cand_[i];
      c.subtract(forbidden);
      if (!c.intersects(used)) {
        used |= c;
        ++count;
      }
    }
    return count;
  }

  void search(const std::vector<std::size_t>& open, std::vector<std::size_t>& chosen, Bitset forbidden) {
    if (open.empty()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + disjoint_lower_bound(open, forbidden) >= best_.size()) return;

    std::size_t pick = open.front(), fewest = Bitset::npos;
    for (auto i : open) {
      Bitset c = cand_[i];
      c.subtract(forbidden);
      auto k = c.count();
      if (k == 0) return;
      if (k < fewest) {
        fewest = k;
        pick = i;
      }
    }
    Bitset options = cand_[pick];
    options.subtract(forbidden);
    for (auto w : options.to_vector()) {
      std::vector<std::size_t> rest;
      for (auto i : open)
        if (!cand_[i].test(w)) rest.push_back(i);
      chosen.push_back(w);
      search(rest, chosen, forbidden);
      chosen.pop_back();
      forbidden.set(w);
    }
  }

  std::size_t n_;
  std::vector<Bitset> cand_;
  std::vector<std::size_t> best_;
};

}  // namespace detail

/// Exact minimum strong resolving set straight from the definition.
/// Throws TooLarge above `max_vertices` and Disconnected for disconnected graphs.
template <class Label>
VertexSet sdim_bruteforce(const Graph<Label>& g, std::size_t max_vertices = 18) {
  const auto n = g.size();
  if (n > max_vertices)
    throw TooLarge("graph has " + std::to_string(n) + " vertices, oracle bound is " +
                   std::to_string(max_vertices));
  if (!is_connected(g)) throw Disconnected("strong metric dimension needs a connected graph");
  if (n <= 1) return {};
  const auto d = all_pairs_distances(g);
  std::vector<Bitset> cand;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      Bitset c(n);
      c.set(u);
      c.set(v);
      for (std::size_t w = 0; w < n; ++w)
        if (w != u && w != v && strongly_resolves(w, u, v, d)) c.set(w);
      cand.push_back(std::move(c));
    }
  return detail::StrongSetCover(n, std::move(cand)).solve();
}

/// SRG-based dimension, cross-checked by the oracle when g is within `oracle_bound`.
template <class Label>
DimensionReport sdim_report(const Graph<Label>& g, std::size_t oracle_bound) {
  auto rep = sdim_via_srg(g);
  if (g.size() <= oracle_bound) {
    auto oracle = sdim_bruteforce(g, oracle_bound);
    rep.oracle_ran = true;
    rep.oracle_sdim = oracle.size;
    rep.resolving_set = std::move(oracle.witness);
  }
  return rep;
}

}  // namespace cleansr
