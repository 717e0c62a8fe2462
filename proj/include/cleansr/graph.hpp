#pragma once

// Finite simple undirected graphs with labelled vertices and bitset
// adjacency, plus the distance and shape queries the verifier relies on.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cleansr/bitset.hpp"
#include "cleansr/error.hpp"

namespace cleansr {

using Edge = std::pair<std::size_t, std::size_t>;

template <class Label>
class Graph {
 public:
  using label_type = Label;

  Graph() = default;
  explicit Graph(std::vector<Label> labels) : labels_(std::move(labels)) {
    adj_.assign(labels_.size(), Bitset(labels_.size()));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  const Label& label(std::size_t v) const { return labels_[v]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[u].set(v);
    adj_[v].set(u);
  }
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const Bitset& neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < size(); ++u)
      adj_[u].for_each([&](std::size_t v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

 private:
  std::vector<Label> labels_;
  std::vector<Bitset> adj_;
};

/// Graph whose labels are just 0..n-1.
using PlainGraph = Graph<std::size_t>;

inline PlainGraph make_plain_graph(std::size_t n, const std::vector<Edge>& edges = {}) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  PlainGraph g(std::move(labels));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

template <class Label>
Graph<Label> complete_graph(std::vector<Label> labels) {
  Graph<Label> g(std::move(labels));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) g.add_edge(u, v);
  return g;
}

/// Hop distances between all vertex pairs; unreachable pairs hold no value.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n) {}

  std::size_t size() const noexcept { return n_; }
  std::optional<std::uint32_t> at(std::size_t u, std::size_t v) const { return dist_[u * n_ + v]; }
  bool reachable(std::size_t u, std::size_t v) const { return dist_[u * n_ + v].has_value(); }
  /// Distance of a pair known to be connected.
  std::uint32_t operator()(std::size_t u, std::size_t v) const { return dist_[u * n_ + v].value(); }
  void set(std::size_t u, std::size_t v, std::uint32_t d) { dist_[u * n_ + v] = d; }

  bool all_reachable() const {
    return std::all_of(dist_.begin(), dist_.end(), [](const auto& d) { return d.has_value(); });
  }

 private:
  std::size_t n_;
  std::vector<std::optional<std::uint32_t>> dist_;
};

/// Breadth-first search from every vertex, frontier kept as a bitset.
template <class Label>
DistanceMatrix all_pairs_distances(const Graph<Label>& g) {
  const std::size_t n = g.size();
  DistanceMatrix d(n);
  for (std::size_t s = 0; s < n; ++s) {
    Bitset seen(n), frontier(n);
    seen.set(s);
    frontier.set(s);
    d.set(s, s, 0);
    for (std::uint32_t level = 1; frontier.any(); ++level) {
      Bitset next(n);
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      next.subtract(seen);
      next.for_each([&](std::size_t v) { d.set(s, v, level); });
      seen |= next;
      frontier = std::move(next);
    }
  }
  return d;
}

template <class Label>
bool is_connected(const Graph<Label>& g) {
  if (g.size() == 0) return true;
  Bitset seen(g.size()), frontier(g.size());
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    Bitset next(g.size());
    frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
    next.subtract(seen);
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == g.size();
}

/// Largest finite distance, or nullopt when the graph is disconnected.
template <class Label>
std::optional<std::uint32_t> diameter(const Graph<Label>& g) {
  if (!is_connected(g)) return std::nullopt;
  auto d = all_pairs_distances(g);
  std::uint32_t best = 0;
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v) best = std::max(best, d(u, v));
  return best;
}

template <class Label>
std::vector<std::vector<std::size_t>> connected_components(const Graph<Label>& g) {
  std::vector<std::vector<std::size_t>> out;
  Bitset seen(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen.test(s)) continue;
    Bitset comp(g.size()), frontier(g.size());
    comp.set(s);
    frontier.set(s);
    while (frontier.any()) {
      Bitset next(g.size());
      frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
      next.subtract(comp);
      comp |= next;
      frontier = std::move(next);
    }
    seen |= comp;
    out.push_back(comp.to_vector());
  }
  return out;
}

template <class Label>
bool is_complete(const Graph<Label>& g) {
  const auto n = g.size();
  return g.edge_count() == n * (n == 0 ? 0 : n - 1) / 2;
}

/// Induced subgraph on the listed vertices, in the order given.
template <class Label>
Graph<Label> induced_subgraph(const Graph<Label>& g, const std::vector<std::size_t>& keep) {
  std::vector<Label> labels;
  for (auto v : keep) labels.push_back(g.label(v));
  Graph<Label> h(std::move(labels));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
  return h;
}

/// Induced subgraph on the vertices whose label satisfies `keep`.
template <class Label, class Pred>
  requires std::predicate<Pred, const Label&>
Graph<Label> induced_subgraph(const Graph<Label>& g, Pred keep) {
  std::vector<std::size_t> vs;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (keep(g.label(v))) vs.push_back(v);
  return induced_subgraph(g, vs);
}

/// g1 + g2: vertices of g2 are appended after those of g1, no cross edges.
template <class Label>
Graph<Label> disjoint_union(const Graph<Label>& g1, const Graph<Label>& g2) {
  std::vector<Label> labels = g1.labels();
  labels.insert(labels.end(), g2.labels().begin(), g2.labels().end());
  Graph<Label> h(std::move(labels));
  for (auto [u, v] : g1.edges()) h.add_edge(u, v);
  for (auto [u, v] : g2.edges()) h.add_edge(u + g1.size(), v + g1.size());
  return h;
}

/// True iff every connected component is a clique and the multiset of
/// component sizes equals `sizes`.
template <class Label>
bool is_disjoint_union_of_cliques(const Graph<Label>& g, std::vector<std::size_t> sizes) {
  std::vector<std::size_t> found;
  for (const auto& comp : connected_components(g)) {
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = i + 1; j < comp.size(); ++j)
        if (!g.adjacent(comp[i], comp[j])) return false;
    found.push_back(comp.size());
  }
  std::sort(found.begin(), found.end());
  std::sort(sizes.begin(), sizes.end());
  return found == sizes;
}

namespace detail {

template <class Label>
std::map<Label, std::size_t> label_index(const Graph<Label>& g) {
  std::map<Label, std::size_t> idx;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!idx.emplace(g.label(v), v).second) throw LabelMismatch("duplicate vertex label");
  return idx;
}

template <class Label>
std::map<Label, std::size_t> matched_labels(const Graph<Label>& g1, const Graph<Label>& g2) {
  auto i1 = label_index(g1);
  auto i2 = label_index(g2);
  if (i1.size() != i2.size()) throw LabelMismatch("vertex label sets differ in size");
  for (const auto& [label, _] : i1)
    if (!i2.contains(label)) throw LabelMismatch("vertex label sets differ");
  return i2;
}

}  // namespace detail

/// First pair of labels (in g1 vertex order) whose adjacency differs between the
/// two graphs, or nullopt when the edge sets agree. Throws LabelMismatch when
/// the vertex label sets differ.
template <class Label>
std::optional<std::pair<Label, Label>> first_edge_difference(const Graph<Label>& g1,
                                                             const Graph<Label>& g2) {
  auto to2 = detail::matched_labels(g1, g2);
  for (std::size_t u = 0; u < g1.size(); ++u)
    for (std::size_t v = u + 1; v < g1.size(); ++v)
      if (g1.adjacent(u, v) != g2.adjacent(to2.at(g1.label(u)), to2.at(g1.label(v))))
        return std::make_pair(g1.label(u), g1.label(v));
  return std::nullopt;
}

/// Identical vertex-label sets and identical edge sets under label matching.
template <class Label>
bool same_labeled_graph(const Graph<Label>& g1, const Graph<Label>& g2) {
  return !first_edge_difference(g1, g2).has_value();
}

}  // namespace cleansr
