#pragma once

// Mutually maximally distant (MMD) pairs, boundary and strong resolving graph
// of a connected graph, and the closed-form structures predicted for the SR
// graphs of Cl(R) and Cl2(R).

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "cleansr/claim.hpp"
#include "cleansr/clean_graph.hpp"
#include "cleansr/error.hpp"
#include "cleansr/graph.hpp"
#include "cleansr/ring.hpp"

namespace cleansr {

/// u is maximally distant from v when no neighbour of u is farther from v.
template <class Label>
bool maximally_distant(const Graph<Label>& g, const DistanceMatrix& d, std::size_t u,
                       std::size_t v) {
  const auto duv = d(u, v);
  bool ok = true;
  g.neighbors(u).for_each([&](std::size_t w) {
    if (d(v, w) > duv) ok = false;
  });
  return ok;
}

/// All unordered MMD pairs (u < v). Throws Disconnected.
template <class Label>
std::vector<Edge> mmd_pairs(const Graph<Label>& g, const DistanceMatrix& d) {
  if (!d.all_reachable()) throw Disconnected("MMD pairs need a connected graph");
  std::vector<Edge> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (maximally_distant(g, d, u, v) && maximally_distant(g, d, v, u)) out.emplace_back(u, v);
  return out;
}

template <class Label>
struct SrgResult {
  std::vector<Edge> mmd_pairs;      // indices into the source graph
  std::vector<std::size_t> boundary;  // sorted source indices; srg vertex i is boundary[i]
  Graph<Label> srg;
};

template <class Label>
SrgResult<Label> strong_resolving_graph(const Graph<Label>& g, const DistanceMatrix& d) {
  SrgResult<Label> res;
  res.mmd_pairs = mmd_pairs(g, d);
  std::vector<bool> in(g.size(), false);
  for (auto [u, v] : res.mmd_pairs) in[u] = in[v] = true;
  std::vector<std::size_t> pos(g.size(), 0);
  for (std::size_t v = 0; v < g.size(); ++v)
    if (in[v]) {
      pos[v] = res.boundary.size();
      res.boundary.push_back(v);
    }
  std::vector<Label> labels;
  for (auto v : res.boundary) labels.push_back(g.label(v));
  res.srg = Graph<Label>(std::move(labels));
  for (auto [u, v] : res.mmd_pairs) res.srg.add_edge(pos[u], pos[v]);
  return res;
}

template <class Label>
SrgResult<Label> strong_resolving_graph(const Graph<Label>& g) {
  if (!is_connected(g)) throw Disconnected("strong resolving graph needs a connected graph");
  return strong_resolving_graph(g, all_pairs_distances(g));
}

// ---------------------------------------------------------------------------
// Closed-form MMD predicates. They look only at the algebra of the pair.

namespace detail {

inline void require_units(const FiniteRing& r) {
  if (r.units().size() < 2) throw HypothesisViolated("theorem requires |U(R)| >= 2");
}
inline void require_nontrivial_idempotents(const FiniteRing& r, bool wanted) {
  bool has = r.idempotents().size() > 2;
  if (has != wanted)
    throw HypothesisViolated(wanted ? "theorem requires a nontrivial idempotent"
                                    : "theorem requires no nontrivial idempotent");
}
inline bool noninvolutory(const FiniteRing& r, RingElement u) { return r.mul(u, u) != r.one(); }

}  // namespace detail

/// Cl(R), R without nontrivial idempotents, |U| >= 2: MMD iff e = f = 0 or e = f = 1.
inline bool predicted_mmd_cl_no_idempotents(const FiniteRing& r, const CleanVertex& a,
                                            const CleanVertex& b) {
  detail::require_nontrivial_idempotents(r, false);
  detail::require_units(r);
  return a.idempotent == b.idempotent;
}

/// Cl2(R), R with nontrivial idempotents, |U| >= 2: MMD iff
///  (a) e = f = 1 and uv != 1, or
///  (b) e, f != 1, ef != 0 and uv != 1, or
///  (c) exactly one of e, f is 1 and u = v lies in U''(R).
inline bool predicted_mmd_cl2(const FiniteRing& r, const CleanVertex& a, const CleanVertex& b) {
  detail::require_nontrivial_idempotents(r, true);
  detail::require_units(r);
  if (a.idempotent == r.zero() || b.idempotent == r.zero())
    throw HypothesisViolated("Cl2(R) vertices have nonzero idempotent");
  const auto one = r.one();
  const bool a1 = a.idempotent == one, b1 = b.idempotent == one;
  const bool uv_not_one = r.mul(a.unit, b.unit) != one;
  if (a1 && b1) return uv_not_one;
  if (!a1 && !b1) return r.mul(a.idempotent, b.idempotent) != r.zero() && uv_not_one;
  return a.unit == b.unit && detail::noninvolutory(r, a.unit);
}

/// Cl(R), R with nontrivial idempotents, |U| >= 2: MMD iff e = f = 0, or
/// e, f != 0 with ef != 0 and uv != 1.
inline bool predicted_mmd_cl_with_idempotents(const FiniteRing& r, const CleanVertex& a,
                                              const CleanVertex& b) {
  detail::require_nontrivial_idempotents(r, true);
  detail::require_units(r);
  const auto zero = r.zero();
  if (a.idempotent == zero && b.idempotent == zero) return true;
  if (a.idempotent == zero || b.idempotent == zero) return false;
  return r.mul(a.idempotent, b.idempotent) != zero && r.mul(a.unit, b.unit) != r.one();
}

using MmdPredicate = std::function<bool(const FiniteRing&, const CleanVertex&, const CleanVertex&)>;

/// Pairs (u < v) of `g` accepted by a closed-form predicate.
inline std::vector<Edge> predicted_mmd_pairs(const FiniteRing& r, const CleanGraph& g,
                                             const MmdPredicate& pred) {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (pred(r, g.label(u), g.label(v))) out.emplace_back(u, v);
  return out;
}

// ---------------------------------------------------------------------------
// Predicted SR-graph building blocks, labelled by CleanVertex.

namespace detail {

template <class Keep, class Adj>
CleanGraph clean_graph_from(const FiniteRing& r, Keep keep, Adj adj) {
  std::vector<CleanVertex> vs;
  for (const auto& v : clean_vertices(r))
    if (keep(v)) vs.push_back(v);
  CleanGraph g(std::move(vs));
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (adj(g.label(i), g.label(j))) g.add_edge(i, j);
  return g;
}

inline bool orthogonal_free_and_not_inverse(const FiniteRing& r, const CleanVertex& a,
                                            const CleanVertex& b) {
  return r.mul(a.idempotent, b.idempotent) != r.zero() && r.mul(a.unit, b.unit) != r.one();
}

}  // namespace detail

/// K: vertices (e, u) with e in Id(R)*, adjacent iff ef != 0 and uv != 1.
inline CleanGraph build_graph_K(const FiniteRing& r) {
  detail::require_nontrivial_idempotents(r, true);
  return detail::clean_graph_from(
      r,
      [&](const CleanVertex& v) { return v.idempotent != r.zero() && v.idempotent != r.one(); },
      [&](const CleanVertex& a, const CleanVertex& b) {
        return detail::orthogonal_free_and_not_inverse(r, a, b);
      });
}

/// H': on V(Cl2(R)) with the three-case MMD adjacency of Cl2(R).
inline CleanGraph build_graph_Hprime(const FiniteRing& r) {
  detail::require_nontrivial_idempotents(r, true);
  return detail::clean_graph_from(
      r, [&](const CleanVertex& v) { return v.idempotent != r.zero(); },
      [&](const CleanVertex& a, const CleanVertex& b) {
        const auto one = r.one();
        const bool a1 = a.idempotent == one, b1 = b.idempotent == one;
        const bool uv_not_one = r.mul(a.unit, b.unit) != one;
        if (a1 && b1) return uv_not_one;
        if (!a1 && !b1) return r.mul(a.idempotent, b.idempotent) != r.zero() && uv_not_one;
        return a.unit == b.unit && detail::noninvolutory(r, a.unit);
      });
}

/// G: vertices (e, u) with e != 0, adjacent iff ef != 0 and uv != 1.
inline CleanGraph build_graph_G(const FiniteRing& r) {
  detail::require_nontrivial_idempotents(r, true);
  return detail::clean_graph_from(
      r, [&](const CleanVertex& v) { return v.idempotent != r.zero(); },
      [&](const CleanVertex& a, const CleanVertex& b) {
        return detail::orthogonal_free_and_not_inverse(r, a, b);
      });
}

/// Complete graph on {(e, u) : u in U(R)} for one fixed idempotent e.
inline CleanGraph unit_clique(const FiniteRing& r, RingElement e) {
  std::vector<CleanVertex> vs;
  for (auto u : r.units()) vs.push_back({e, u});
  return complete_graph(std::move(vs));
}

// ---------------------------------------------------------------------------
// Structure comparison.

inline std::string edge_witness(const FiniteRing& r, const CleanGraph& computed,
                                const CleanGraph& predicted) {
  try {
    auto diff = first_edge_difference(computed, predicted);
    if (!diff) return {};
    std::size_t iu = 0, iv = 0;
    for (std::size_t i = 0; i < computed.size(); ++i) {
      if (computed.label(i) == diff->first) iu = i;
      if (computed.label(i) == diff->second) iv = i;
    }
    return "pair " + vertex_name(r, diff->first) + "-" + vertex_name(r, diff->second) +
           (computed.adjacent(iu, iv) ? ": MMD in computation, not predicted"
                                      : ": predicted MMD, not in computation");
  } catch (const LabelMismatch& e) {
    return std::string("vertex sets differ (") + e.what() + "); computed |V| = " +
           std::to_string(computed.size()) + ", predicted |V| = " + std::to_string(predicted.size());
  }
}

inline Claim compare_structure(const FiniteRing& r, std::string id, std::string predicted_desc,
                               const CleanGraph& computed, const CleanGraph& predicted) {
  Claim c;
  c.id = std::move(id);
  c.predicted = std::move(predicted_desc);
  c.witness = edge_witness(r, computed, predicted);
  c.status = c.witness.empty() ? ClaimStatus::Match : ClaimStatus::Mismatch;
  c.computed = c.status == ClaimStatus::Match ? "label-identical"
                                              : "differs (" + std::to_string(computed.size()) +
                                                    " vertices, " +
                                                    std::to_string(computed.edge_count()) + " edges)";
  return c;
}

inline Claim compare_vertex_set(const FiniteRing& r, std::string id, const CleanGraph& srg,
                                const CleanGraph& source) {
  Claim c;
  c.id = std::move(id);
  c.predicted = "V(SR) = V(graph), " + std::to_string(source.size()) + " vertices";
  c.computed = std::to_string(srg.size()) + " boundary vertices";
  bool same = srg.labels() == source.labels();
  c.status = same ? ClaimStatus::Match : ClaimStatus::Mismatch;
  if (!same) {
    for (const auto& v : source.labels())
      if (std::find(srg.labels().begin(), srg.labels().end(), v) == srg.labels().end()) {
        c.witness = "vertex " + vertex_name(r, v) + " is not in the boundary";
        break;
      }
    if (c.witness.empty()) c.witness = "boundary order differs";
  }
  return c;
}

/// Computes the SR graphs of Cl(R) and Cl2(R) from distances and compares
/// them, label for label, to the structure the theorems predict for this ring.
inline std::vector<Claim> verify_srg_structure(const FiniteRing& r) {
  std::vector<Claim> out;
  const auto cl = build_cl(r);
  const auto cl2 = build_cl2(r);
  const bool idem = r.idempotents().size() > 2;
  const auto nu = r.units().size();

  const auto cl_srg = strong_resolving_graph(cl).srg;
  if (is_complete(cl)) {
    out.push_back(compare_structure(r, "srg.cl.complete", "Cl(R)_SR = Cl(R) (complete)", cl_srg, cl));
  } else if (!idem) {
    auto predicted = disjoint_union(unit_clique(r, r.zero()), unit_clique(r, r.one()));
    auto c = compare_structure(r, "srg.cl.two_cliques",
                               "2K_" + std::to_string(nu) + " on {(0,u)} and {(1,u)}", cl_srg, predicted);
    if (c.status == ClaimStatus::Match && !is_disjoint_union_of_cliques(cl_srg, {nu, nu})) {
      c.status = ClaimStatus::Mismatch;
      c.witness = "component sizes differ from {|U|, |U|}";
    }
    out.push_back(std::move(c));
  } else {
    auto G = build_graph_G(r);
    out.push_back(compare_structure(r, "srg.cl.g_plus_clique", "G + K_" + std::to_string(nu),
                                    cl_srg, disjoint_union(G, unit_clique(r, r.zero()))));
    Claim gc;
    gc.id = "srg.cl.g_connected";
    gc.predicted = "connected";
    gc.computed = is_connected(G) ? "connected" : "disconnected";
    gc.status = gc.computed == gc.predicted ? ClaimStatus::Match : ClaimStatus::Mismatch;
    if (gc.status == ClaimStatus::Mismatch)
      gc.witness = std::to_string(connected_components(G).size()) + " components";
    out.push_back(std::move(gc));
  }
  if (!is_complete(cl)) out.push_back(compare_vertex_set(r, "srg.cl.vertex_set", cl_srg, cl));

  if (!idem) {
    out.push_back(skipped_claim("srg.cl2", "no nontrivial idempotents"));
    return out;
  }
  if (!is_connected(cl2)) {
    out.push_back(skipped_claim("srg.cl2", "Cl2(R) is disconnected"));
    return out;
  }
  const auto cl2_srg = strong_resolving_graph(cl2).srg;
  if (is_complete(cl2)) {
    out.push_back(
        compare_structure(r, "srg.cl2.complete", "Cl2(R)_SR = Cl2(R) (complete)", cl2_srg, cl2));
  } else if (classify_units(r).noninvolutory.empty()) {
    out.push_back(compare_structure(r, "srg.cl2.k_plus_clique", "K_" + std::to_string(nu) + " + K",
                                    cl2_srg, disjoint_union(unit_clique(r, r.one()), build_graph_K(r))));
  } else {
    out.push_back(compare_structure(r, "srg.cl2.hprime", "H'", cl2_srg, build_graph_Hprime(r)));
  }
  out.push_back(compare_vertex_set(r, "srg.cl2.vertex_set", cl2_srg, cl2));
  return out;
}

}  // namespace cleansr
