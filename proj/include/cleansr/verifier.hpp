#pragma once

// Theory verifier: evaluates every closed-form prediction about Cl(R) and
// Cl2(R) for one ring, compares each against computation, and records a
// MATCH / MISMATCH / SKIPPED claim.
//
// Ground truth for sdim is the brute-force oracle when the graph is within
// the oracle bound, otherwise alpha of the strong resolving graph.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "cleansr/catalog.hpp"
#include "cleansr/claim.hpp"
#include "cleansr/clean_graph.hpp"
#include "cleansr/error.hpp"
#include "cleansr/ring.hpp"
#include "cleansr/ring_build.hpp"
#include "cleansr/ring_spec.hpp"
#include "cleansr/solvers.hpp"
#include "cleansr/srg.hpp"

namespace cleansr {

/// One local factor eR of R, e a primitive idempotent.
struct LocalFactor {
  std::size_t order = 0;
  std::size_t units = 0;
};

/// The counts every case split depends on.
struct Inventory {
  std::size_t order = 0;
  std::size_t id = 0;            // |Id(R)|
  std::size_t id_star = 0;       // |Id(R)*|
  std::size_t id_perp_star = 0;  // |Id_perp(R)*|
  std::size_t units = 0;         // |U(R)|
  std::size_t involutory = 0;    // |U'(R)|
  std::size_t noninvolutory = 0; // |U''(R)|
  std::size_t n = 0;             // local factor count
  bool local = false;
  bool field = false;
  bool reduced = false;
  std::vector<LocalFactor> factors;
};

inline bool is_reduced(const FiniteRing& r) {
  for (auto a : r.elements()) {
    if (a == r.zero()) continue;
    RingElement p = a;
    for (std::size_t k = 0; k < r.order(); ++k) {
      p = r.mul(p, a);
      if (p == r.zero()) return false;
    }
  }
  return true;
}

/// Decomposes R = e1 R x ... x en R over a maximum orthogonal family of
/// nonzero idempotents and measures each factor from the tables.
inline std::vector<LocalFactor> local_factors(const FiniteRing& r) {
  std::vector<LocalFactor> out;
  for (auto e : max_orthogonal_idempotents(r)) {
    std::set<RingElement> ideal;
    for (auto x : r.elements()) ideal.insert(r.mul(e, x));
    LocalFactor f;
    f.order = ideal.size();
    for (auto x : ideal)
      if (std::any_of(ideal.begin(), ideal.end(), [&](RingElement y) { return r.mul(x, y) == e; }))
        ++f.units;
    out.push_back(f);
  }
  return out;
}

inline Inventory take_inventory(const FiniteRing& r) {
  Inventory inv;
  inv.order = r.order();
  inv.id = r.idempotents().size();
  inv.id_star = nontrivial_idempotents(r).size();
  inv.id_perp_star = max_orthogonal_idempotents(r).size();
  inv.units = r.units().size();
  auto cls = classify_units(r);
  inv.involutory = cls.involutory.size();
  inv.noninvolutory = cls.noninvolutory.size();
  inv.n = local_factor_count(r);
  inv.local = is_local(r);
  inv.field = is_field(r);
  inv.reduced = is_reduced(r);
  inv.factors = local_factors(r);
  return inv;
}

// ---------------------------------------------------------------------------
// Closed forms.

namespace detail {

inline void require(bool cond, const char* what) {
  if (!cond) throw HypothesisViolated(what);
}
inline std::int64_t pow2(std::size_t n) { return std::int64_t{1} << n; }
inline std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

inline bool id_star_dominates(const Inventory& inv) {
  // Ties 2|Id_perp*| = |Id*| go to the |Id*| branch.
  return inv.id_star >= 2 * inv.id_perp_star;
}

inline std::int64_t unit_product(const Inventory& inv) {
  std::int64_t p = 1;
  for (const auto& f : inv.factors) p *= as_int(f.order) - 1;
  return p;
}

}  // namespace detail

/// beta(Cl2(R)_SR) for rings with nontrivial idempotents and |U| >= 2.
inline std::int64_t predict_beta_cl2_srg(const Inventory& inv) {
  detail::require(inv.id_star > 0, "needs nontrivial idempotents");
  detail::require(inv.units >= 2, "needs |U(R)| >= 2");
  const auto ids = detail::as_int(inv.id_star);
  const auto perp2 = 2 * detail::as_int(inv.id_perp_star);
  if (inv.noninvolutory == 0) return ids + 1;
  if (inv.noninvolutory == 2) return detail::id_star_dominates(inv) ? ids + 2 : perp2 + 1;
  return std::max(ids, perp2) + 2;
}

/// beta(Cl(R)_SR) from beta(Cl2(R)_SR).
inline std::int64_t predict_beta_relation(const Inventory& inv, std::int64_t beta_cl2) {
  detail::require(inv.id_star > 0, "needs nontrivial idempotents");
  if (inv.units == 1) return 1;
  if (inv.noninvolutory == 0) return beta_cl2 + 1;
  if (inv.noninvolutory == 2) return beta_cl2;
  return detail::id_star_dominates(inv) ? beta_cl2 : beta_cl2 - 1;
}

/// sdim(Cl(R)) from sdim(Cl2(R)).
inline std::int64_t predict_sdim_relation(const Inventory& inv, std::int64_t sdim_cl2) {
  detail::require(inv.id_star > 0, "needs nontrivial idempotents");
  const auto u = detail::as_int(inv.units);
  if (inv.units == 1) return sdim_cl2 + 1;
  if (inv.noninvolutory == 0) return sdim_cl2 + u - 1;
  if (inv.noninvolutory == 2) return sdim_cl2 + u;
  return detail::id_star_dominates(inv) ? sdim_cl2 + u : sdim_cl2 + u + 1;
}

inline std::int64_t predict_beta_cl_no_nontrivial_idempotents(const Inventory& inv) {
  detail::require(inv.id_star == 0, "needs Id(R) = {0, 1}");
  return inv.units == 1 ? 1 : 2;
}

inline std::int64_t predict_sdim_no_nontrivial_idempotents(const Inventory& inv) {
  detail::require(inv.id_star == 0, "needs Id(R) = {0, 1}");
  if (inv.units == 1) return 1;
  return 2 * detail::as_int(inv.units) - 2;
}

inline std::int64_t predict_sdim_field(const Inventory& inv) {
  detail::require(inv.field, "needs a field");
  const auto q = detail::as_int(inv.order);
  return q == 2 ? 1 : 2 * q - 4;
}

/// sdim(Cl2(R)) for R a product of n >= 2 local rings.
inline std::int64_t predict_sdim_cl2_product(const Inventory& inv) {
  detail::require(inv.n >= 2, "needs n >= 2 local factors");
  const auto u = detail::as_int(inv.units);
  const auto p = detail::pow2(inv.n);
  if (inv.noninvolutory == 0) return inv.units == 1 ? p - 2 : (p - 1) * u - p + 1;
  if (inv.n >= 3) return (p - 1) * u - p;
  return inv.noninvolutory == 2 ? 3 * u - 5 : 3 * u - 6;
}

/// sdim(Cl(R)) for R a product of n >= 2 local rings.
inline std::int64_t predict_sdim_cl_product(const Inventory& inv) {
  detail::require(inv.n >= 2, "needs n >= 2 local factors");
  const auto u = detail::as_int(inv.units);
  const auto p = detail::pow2(inv.n);
  if (inv.units == 1) return p - 1;
  if (inv.n == 2) return 4 * u - 5;
  return p * u - p;
}

/// sdim(Cl2(R)) for R a product of n >= 2 finite fields, stated with prod(|F_i| - 1).
inline std::int64_t predict_sdim_cl2_reduced(const Inventory& inv) {
  detail::require(inv.n >= 2 && inv.reduced, "needs a product of n >= 2 fields");
  const auto prod = detail::unit_product(inv);
  const auto p = detail::pow2(inv.n);
  std::vector<std::size_t> orders;
  for (const auto& f : inv.factors) orders.push_back(f.order);
  std::sort(orders.begin(), orders.end());
  const bool all_two = std::all_of(orders.begin(), orders.end(), [](auto q) { return q == 2; });
  const bool two_or_three = std::all_of(orders.begin(), orders.end(), [](auto q) { return q <= 3; });
  if (all_two) return p - 2;
  if (two_or_three) return (p - 1) * prod - p + 1;
  if (inv.n == 2 && orders[0] == 2 && (orders[1] == 4 || orders[1] == 5)) return 3 * prod - 5;
  if (inv.n == 2) return (p - 1) * prod - 6;
  return (p - 1) * prod - p;
}

/// sdim(Cl(R)) for R a product of n >= 2 finite fields.
inline std::int64_t predict_sdim_cl_reduced(const Inventory& inv) {
  detail::require(inv.n >= 2 && inv.reduced, "needs a product of n >= 2 fields");
  const auto prod = detail::unit_product(inv);
  const auto p = detail::pow2(inv.n);
  if (prod == 1) return p - 1;
  if (inv.n == 2) return 4 * prod - 5;
  return p * prod - p;
}

// ---------------------------------------------------------------------------
// Factor-list lemma, checked on construction provenance.

namespace detail {

inline std::uint64_t small_prime_power_split(std::uint32_t& m) {
  std::uint32_t p = 2;
  while (m % p != 0) ++p;
  std::uint64_t q = 1;
  while (m % p == 0) {
    m /= p;
    q *= p;
  }
  return q;
}

/// Flattens nested products, resolves catalog names, splits Zm into its
/// prime-power parts and rewrites GF(p) as Zp.
inline void flatten_factors(const RingSpec& s, std::vector<RingSpec>& out) {
  if (s.is<spec::Product>()) {
    for (const auto& f : s.as<spec::Product>().factors) flatten_factors(f, out);
  } else if (s.is<spec::CatalogRef>()) {
    auto resolved = resolve_catalog_name(s.as<spec::CatalogRef>().name);
    if (!resolved) throw MalformedSpec("unknown catalog ring 'local8/" + s.as<spec::CatalogRef>().name + "'");
    flatten_factors(*resolved, out);
  } else if (s.is<spec::Cyclic>()) {
    auto m = s.as<spec::Cyclic>().modulus;
    while (m > 1) out.push_back(RingSpec::cyclic(static_cast<std::uint32_t>(small_prime_power_split(m))));
  } else if (s.is<spec::GaloisField>() && s.as<spec::GaloisField>().degree == 1) {
    out.push_back(RingSpec::cyclic(s.as<spec::GaloisField>().characteristic));
  } else {
    out.push_back(s);
  }
}

inline const std::vector<std::string>& u2_factor_list() {
  static const std::vector<std::string> list = [] {
    std::vector<std::string> out;
    for (const char* text : {"GF(4)", "Z5", "Z2[x]/(x^3)", "Z4[x]/(2x, x^2-2)"})
      out.push_back(to_string(parse_ring_spec(text)));
    return out;
  }();
  return list;
}

}  // namespace detail

struct LemmaCheck {
  bool two_noninvolutory = false;  // |U''(R)| = 2, counted on the tables
  bool factors_in_list = false;    // one listed factor, every other factor Z2
  std::vector<std::string> factors;
  bool passes() const { return two_noninvolutory == factors_in_list; }
};

/// |U''(R)| = 2 iff R = R1 x Z2 x ... x Z2 with R1 among GF(4), Z5,
/// Z2[x]/(x^3), Z4[x]/(2x, x^2-2). The factor side is read from the spec.
/// Throws HypothesisViolated unless R was built as a product of >= 2 local rings.
inline LemmaCheck check_u2_lemma(const FiniteRing& r) {
  std::vector<RingSpec> flat;
  detail::flatten_factors(r.construction(), flat);
  if (flat.size() < 2) throw HypothesisViolated("ring was not built as a product of >= 2 local rings");
  LemmaCheck out;
  const auto& list = detail::u2_factor_list();
  std::size_t listed = 0, z2 = 0;
  for (const auto& f : flat) {
    if (!is_local(build_ring(f, {}))) throw HypothesisViolated("factor " + to_string(f) + " is not local");
    auto text = to_string(f);
    out.factors.push_back(text);
    if (text == "Z2") ++z2;
    if (std::find(list.begin(), list.end(), text) != list.end()) ++listed;
  }
  out.factors_in_list = listed == 1 && z2 + 1 == flat.size();
  out.two_noninvolutory = classify_units(r).noninvolutory.size() == 2;
  return out;
}

// ---------------------------------------------------------------------------
// Per-ring report.

struct VerificationReport {
  std::string ring_name;
  std::optional<Inventory> inventory;
  std::vector<Claim> claims;
  std::string error;  // construction or evaluation failure; claims may be partial
};

struct VerifyOptions {
  std::size_t oracle_bound = 18;
};

namespace detail {

inline std::string num(std::int64_t v) { return std::to_string(v); }

template <class Fn>
Claim numeric_claim(std::string id, Fn&& predict, std::int64_t computed, const std::string& how) {
  try {
    auto predicted = predict();
    auto c = compared_claim(std::move(id), num(predicted), num(computed),
                            "predicted " + num(predicted) + ", " + how + " gives " + num(computed));
    return c;
  } catch (const HypothesisViolated& e) {
    return skipped_claim(std::move(id), e.what());
  }
}

inline Claim bool_claim(std::string id, std::string predicted, bool holds, std::string computed,
                        std::string witness) {
  Claim c;
  c.id = std::move(id);
  c.predicted = std::move(predicted);
  c.computed = std::move(computed);
  c.status = holds ? ClaimStatus::Match : ClaimStatus::Mismatch;
  if (!holds) c.witness = std::move(witness);
  return c;
}

inline Claim mmd_claim(std::string id, const FiniteRing& r, const CleanGraph& g, const MmdPredicate& pred) {
  std::vector<Edge> predicted;
  try {
    predicted = predicted_mmd_pairs(r, g, pred);
  } catch (const HypothesisViolated& e) {
    return skipped_claim(std::move(id), e.what());
  }
  if (!is_connected(g)) return skipped_claim(std::move(id), "graph is disconnected");
  auto computed = mmd_pairs(g, all_pairs_distances(g));
  std::string witness;
  if (computed != predicted) {
    std::set<Edge> a(computed.begin(), computed.end()), b(predicted.begin(), predicted.end());
    for (const auto& e : a)
      if (!b.contains(e)) {
        witness = "pair " + vertex_name(r, g.label(e.first)) + "-" + vertex_name(r, g.label(e.second)) +
                  " is MMD but not predicted";
        break;
      }
    if (witness.empty())
      for (const auto& e : b)
        if (!a.contains(e)) {
          witness = "pair " + vertex_name(r, g.label(e.first)) + "-" + vertex_name(r, g.label(e.second)) +
                    " is predicted but not MMD";
          break;
        }
  }
  return bool_claim(std::move(id), std::to_string(predicted.size()) + " pairs", witness.empty(),
                    std::to_string(computed.size()) + " pairs", witness);
}

struct GraphDimension {
  DimensionReport rep;
  std::int64_t truth = 0;
  std::string method;
};

inline GraphDimension dimension(const CleanGraph& g, std::size_t oracle_bound) {
  GraphDimension gd;
  gd.rep = sdim_report(g, oracle_bound);
  gd.truth = as_int(gd.rep.oracle_ran ? gd.rep.oracle_sdim : gd.rep.sdim);
  gd.method = gd.rep.oracle_ran ? "brute-force oracle" : "alpha of the SR graph";
  return gd;
}

inline Claim oracle_claim(std::string id, const GraphDimension& gd) {
  if (!gd.rep.oracle_ran) return skipped_claim(std::move(id), "graph exceeds oracle bound");
  return compared_claim(std::move(id), num(as_int(gd.rep.alpha_srg)), num(as_int(gd.rep.oracle_sdim)),
                        "alpha(SR) = " + num(as_int(gd.rep.alpha_srg)) + ", oracle = " +
                            num(as_int(gd.rep.oracle_sdim)));
}

inline Claim gallai_claim(std::string id, const CleanGraph& g) {
  auto srg = strong_resolving_graph(g).srg;
  auto mis = max_independent_set(srg);
  auto cover = min_vertex_cover(srg);
  const bool ok = is_independent_set(srg, mis.witness) && is_vertex_cover(srg, cover.witness) &&
                  mis.size + cover.size == srg.size();
  return bool_claim(std::move(id), "alpha + beta = " + std::to_string(srg.size()), ok,
                    std::to_string(cover.size) + " + " + std::to_string(mis.size),
                    "witness check failed or sizes do not sum to |V|");
}

}  // namespace detail

/// Every applicable claim for one ring.
inline VerificationReport verify_ring(const std::string& name, const FiniteRing& r,
                                      const VerifyOptions& opts = {}) {
  using detail::as_int;
  using detail::num;
  VerificationReport rep;
  rep.ring_name = name;
  const auto inv = take_inventory(r);
  rep.inventory = inv;
  auto& out = rep.claims;
  const bool idem = inv.id_star > 0;

  const auto cl = build_cl(r);
  const auto cl1 = build_cl1(r);
  const auto cl2 = build_cl2(r);

  // Counts and basic shape.
  out.push_back(compared_claim("vertex_count.cl", num(as_int(inv.id * inv.units)), num(as_int(cl.size())), ""));
  out.push_back(compared_claim("vertex_count.cl2", num(as_int((inv.id - 1) * inv.units)),
                               num(as_int(cl2.size())), ""));
  if (inv.n >= 2) {
    std::int64_t prod = 1;
    for (const auto& f : inv.factors) prod *= as_int(f.units);
    out.push_back(compared_claim("vertex_count.product", num(detail::pow2(inv.n) * prod),
                                 num(as_int(cl.size())), ""));
  }
  {
    auto props = check_unit_group_propositions(r);
    out.push_back(detail::bool_claim("prop.u2_two_cyclic", "|U''| = 2 iff U cyclic of order 3 or 4",
                                     props.first_consistent(),
                                     std::string("|U''| = 2: ") + (props.two_noninvolutory ? "yes" : "no") +
                                         ", cyclic 3/4: " + (props.cyclic_of_order_3_or_4 ? "yes" : "no"),
                                     "sides of the biconditional disagree"));
    out.push_back(detail::bool_claim("prop.u2_empty_elementary",
                                     "U'' empty iff U trivial or elementary abelian 2-group",
                                     props.second_consistent(),
                                     std::string("U'' empty: ") + (props.no_noninvolutory ? "yes" : "no") +
                                         ", elementary: " + (props.elementary_two_group ? "yes" : "no"),
                                     "sides of the biconditional disagree"));
  }
  out.push_back(detail::bool_claim("cl1.complete", "complete", is_complete(cl1),
                                   is_complete(cl1) ? "complete" : "not complete", "Cl1(R) misses an edge"));
  {
    std::string witness;
    for (std::size_t i = 0; i < cl.size() && witness.empty(); ++i)
      for (std::size_t j = 0; j < cl.size(); ++j)
        if (cl.label(i).idempotent == r.zero() && cl.label(j).idempotent != r.zero() && !cl.adjacent(i, j)) {
          witness = vertex_name(r, cl.label(i)) + " not adjacent to " + vertex_name(r, cl.label(j));
          break;
        }
    out.push_back(detail::bool_claim("cl.join", "Cl(R) = Cl1(R) v Cl2(R)", witness.empty(),
                                     witness.empty() ? "join" : "not a join", witness));
  }
  {
    auto dcl = diameter(cl);
    const std::uint32_t want = is_complete(cl) ? 1 : 2;
    out.push_back(detail::bool_claim("cl.diameter", "diam = " + std::to_string(want), dcl && *dcl == want,
                                     dcl ? "diam = " + std::to_string(*dcl) : "disconnected",
                                     "diameter differs"));
  }
  if (idem) {
    auto d2 = diameter(cl2);
    const bool want3 = inv.units >= 2;
    const bool ok = d2 && (want3 ? *d2 == 3 : *d2 <= 1);
    out.push_back(detail::bool_claim("cl2.diameter3", want3 ? "diam = 3" : "complete", ok,
                                     d2 ? "diam = " + std::to_string(*d2) : "disconnected",
                                     "diameter differs"));
  } else if (inv.units == 1) {
    out.push_back(detail::bool_claim("cl.k2", "K2", cl.size() == 2 && cl.edge_count() == 1,
                                     std::to_string(cl.size()) + " vertices, " + std::to_string(cl.edge_count()) +
                                         " edges",
                                     "Cl(R) is not K2"));
  }

  // MMD characterizations.
  out.push_back(detail::mmd_claim("mmd.cl.no_idempotents", r, cl, predicted_mmd_cl_no_idempotents));
  out.push_back(detail::mmd_claim("mmd.cl2", r, cl2, predicted_mmd_cl2));
  out.push_back(detail::mmd_claim("mmd.cl.idempotents", r, cl, predicted_mmd_cl_with_idempotents));

  // SR-graph structure.
  for (auto& c : verify_srg_structure(r)) out.push_back(std::move(c));

  // Dimensions.
  const auto dcl = detail::dimension(cl, opts.oracle_bound);
  std::optional<detail::GraphDimension> dcl2;
  if (idem && is_connected(cl2)) dcl2 = detail::dimension(cl2, opts.oracle_bound);

  out.push_back(detail::oracle_claim("oracle.cl", dcl));
  if (dcl2)
    out.push_back(detail::oracle_claim("oracle.cl2", *dcl2));
  else
    out.push_back(skipped_claim("oracle.cl2", idem ? "Cl2(R) is disconnected" : "no nontrivial idempotents"));
  out.push_back(detail::gallai_claim("gallai.cl_srg", cl));
  if (dcl2)
    out.push_back(detail::gallai_claim("gallai.cl2_srg", cl2));
  else
    out.push_back(skipped_claim("gallai.cl2_srg", "Cl2(R) has no SR graph here"));

  const auto beta_cl = as_int(dcl.rep.beta_srg);
  if (dcl2) {
    const auto beta_cl2 = as_int(dcl2->rep.beta_srg);
    out.push_back(detail::numeric_claim("beta.cl2", [&] { return predict_beta_cl2_srg(inv); }, beta_cl2,
                                        "beta(Cl2_SR)"));
    out.push_back(detail::numeric_claim("beta.relation", [&] { return predict_beta_relation(inv, beta_cl2); },
                                        beta_cl, "beta(Cl_SR)"));
  } else {
    out.push_back(skipped_claim("beta.cl2", "needs nontrivial idempotents"));
    out.push_back(skipped_claim("beta.relation", "needs nontrivial idempotents"));
  }
  out.push_back(detail::numeric_claim("beta.cl.no_idempotents",
                                      [&] { return predict_beta_cl_no_nontrivial_idempotents(inv); }, beta_cl,
                                      "beta(Cl_SR)"));

  const auto sdim_cl = dcl.truth;
  if (dcl2) {
    const auto sdim_cl2 = dcl2->truth;
    out.push_back(detail::numeric_claim("sdim.relation", [&] { return predict_sdim_relation(inv, sdim_cl2); },
                                        sdim_cl, dcl.method));
    out.push_back(detail::numeric_claim("sdim.cl2.product", [&] { return predict_sdim_cl2_product(inv); },
                                        sdim_cl2, dcl2->method));
    out.push_back(detail::numeric_claim("sdim.cl2.reduced", [&] { return predict_sdim_cl2_reduced(inv); },
                                        sdim_cl2, dcl2->method));
  } else {
    for (const char* id : {"sdim.relation", "sdim.cl2.product", "sdim.cl2.reduced"})
      out.push_back(skipped_claim(id, "needs nontrivial idempotents"));
  }
  out.push_back(detail::numeric_claim("sdim.cl.no_idempotents",
                                      [&] { return predict_sdim_no_nontrivial_idempotents(inv); }, sdim_cl,
                                      dcl.method));
  out.push_back(detail::numeric_claim("sdim.cl.field", [&] { return predict_sdim_field(inv); }, sdim_cl,
                                      dcl.method));
  out.push_back(detail::numeric_claim("sdim.cl.product", [&] { return predict_sdim_cl_product(inv); }, sdim_cl,
                                      dcl.method));
  out.push_back(detail::numeric_claim("sdim.cl.reduced", [&] { return predict_sdim_cl_reduced(inv); }, sdim_cl,
                                      dcl.method));
  if (inv.n >= 2) {
    const auto closed = predict_sdim_cl_product(inv);
    const auto chained = predict_sdim_relation(inv, predict_sdim_cl2_product(inv));
    out.push_back(compared_claim("chain.closed_forms", num(closed), num(chained),
                                 "closed form " + num(closed) + " vs relation applied to Cl2 closed form " +
                                     num(chained)));
  } else {
    out.push_back(skipped_claim("chain.closed_forms", "needs n >= 2 local factors"));
  }

  try {
    auto lemma = check_u2_lemma(r);
    std::string factors;
    for (const auto& f : lemma.factors) factors += (factors.empty() ? "" : " x ") + f;
    out.push_back(detail::bool_claim(
        "lemma.u2", "|U''| = 2 iff factors are one listed ring times copies of Z2", lemma.passes(),
        std::string("|U''| = 2: ") + (lemma.two_noninvolutory ? "yes" : "no") +
            ", listed factors: " + (lemma.factors_in_list ? "yes" : "no"),
        "factors " + factors + " disagree with |U''| = " + std::to_string(inv.noninvolutory)));
  } catch (const HypothesisViolated& e) {
    out.push_back(skipped_claim("lemma.u2", e.what()));
  }
  return rep;
}

inline VerificationReport verify_spec(const NamedSpec& ns, const VerifyOptions& opts = {}) {
  try {
    return verify_ring(ns.name, build_ring(ns.spec, {}), opts);
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.ring_name = ns.name;
    rep.error = e.what();
    return rep;
  }
}

/// Verifies every ring on `jobs` worker threads; reports come back sorted by
/// ring name. A failing ring yields a report with `error` set.
inline std::vector<VerificationReport> run_verification(const std::vector<NamedSpec>& specs,
                                                        const VerifyOptions& opts = {},
                                                        std::size_t jobs = 0) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min(jobs, std::max<std::size_t>(1, specs.size()));
  std::vector<VerificationReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) reports[i] = verify_spec(specs[i], opts);
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  std::stable_sort(reports.begin(), reports.end(),
                   [](const auto& a, const auto& b) { return a.ring_name < b.ring_name; });
  return reports;
}

}  // namespace cleansr
