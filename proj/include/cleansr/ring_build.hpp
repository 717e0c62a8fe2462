#pragma once

// Compiles a RingSpec down to operation tables.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cleansr/catalog.hpp"
#include "cleansr/error.hpp"
#include "cleansr/polynomial.hpp"
#include "cleansr/ring.hpp"
#include "cleansr/ring_spec.hpp"

namespace cleansr {

struct BuildOptions {
  /// Upper bound on the number of normal forms a presentation may close to.
  std::size_t max_elements = 4096;
};

FiniteRing build_ring(const RingSpec& spec, const BuildOptions& opts = {});

namespace detail {

inline FiniteRing build_cyclic(const RingSpec& spec, std::uint32_t n) {
  if (n < 2) throw MalformedSpec("Z" + std::to_string(n) + ": modulus must be at least 2");
  FiniteRing::Table add(static_cast<std::size_t>(n) * n), mul(add.size());
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    names[a] = std::to_string(a);
    for (std::uint32_t b = 0; b < n; ++b) {
      add[a * n + b] = (a + b) % n;
      mul[a * n + b] = static_cast<std::uint32_t>((std::uint64_t{a} * b) % n);
    }
  }
  return FiniteRing(std::move(add), std::move(mul), std::move(names), spec);
}

// Dense univariate polynomials over Z_p, coefficients low degree first.
using Dense = std::vector<std::uint32_t>;

inline void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline Dense poly_mod(Dense a, const Dense& m, std::uint32_t p) {
  // m is monic
  trim(a);
  while (a.size() >= m.size()) {
    std::uint32_t c = a.back();
    std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i)
      a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
    trim(a);
  }
  return a;
}

inline Dense poly_mul(const Dense& a, const Dense& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Dense out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
  trim(out);
  return out;
}

/// Coefficients of the monic polynomial with the given lower-coefficient code
/// (base-p digits, constant term first).
inline Dense monic_from_code(std::uint64_t code, std::uint32_t degree, std::uint32_t p) {
  Dense f(degree + 1, 0);
  for (std::uint32_t i = 0; i < degree; ++i) {
    f[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  f[degree] = 1;
  return f;
}

inline bool is_irreducible(const Dense& f, std::uint32_t p) {
  const auto degree = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
    const auto count = ipow(p, d);
    for (std::uint64_t code = 0; code < count; ++code)
      if (poly_mod(f, monic_from_code(code, d, p), p).empty()) return false;
  }
  return true;
}

/// Smallest irreducible monic polynomial of the given degree, comparing
/// coefficient sequences from x^(k-1) down to the constant term.
inline Dense smallest_irreducible(std::uint32_t p, std::uint32_t degree) {
  const auto count = ipow(p, degree);
  for (std::uint64_t value = 0; value < count; ++value) {
    // value = sum f[i] p^i, so numeric order compares the x^(k-1)
    // coefficient first.
    Dense f(degree + 1, 0);
    std::uint64_t v = value;
    for (std::uint32_t i = 0; i < degree; ++i) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[degree] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw MalformedSpec("no irreducible polynomial found");
}

inline std::string dense_name(const Dense& f) {
  if (f.empty()) return "0";
  std::string out;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (f[i] != 1 || i == 0) out += std::to_string(f[i]);
    if (i >= 1) out += "a";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

inline FiniteRing build_galois(const RingSpec& spec, std::uint32_t p, std::uint32_t k) {
  if (!is_prime(p)) throw MalformedSpec("GF: " + std::to_string(p) + " is not prime");
  if (k < 1) throw MalformedSpec("GF: degree must be at least 1");
  const auto q64 = ipow(p, k);
  if (q64 > 4096) throw MalformedSpec("GF: field order too large");
  const auto q = static_cast<std::uint32_t>(q64);
  const Dense modulus = smallest_irreducible(p, k);

  std::vector<Dense> elems(q);
  std::vector<std::string> names(q);
  std::map<Dense, std::uint32_t> index;
  for (std::uint32_t i = 0; i < q; ++i) {
    Dense f(k, 0);
    std::uint32_t v = i;
    for (std::uint32_t j = 0; j < k; ++j) {
      f[j] = v % p;
      v /= p;
    }
    trim(f);
    elems[i] = f;
    names[i] = dense_name(f);
    index[f] = i;
  }
  FiniteRing::Table add(static_cast<std::size_t>(q) * q), mul(add.size());
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b) {
      Dense s(k, 0);
      for (std::uint32_t j = 0; j < k; ++j) {
        auto ca = j < elems[a].size() ? elems[a][j] : 0u;
        auto cb = j < elems[b].size() ? elems[b][j] : 0u;
        s[j] = (ca + cb) % p;
      }
      trim(s);
      add[a * q + b] = index.at(s);
      mul[a * q + b] = index.at(poly_mod(poly_mul(elems[a], elems[b], p), modulus, p));
    }
  return FiniteRing(std::move(add), std::move(mul), std::move(names), spec);
}

/// Breadth-first closure of {0, 1, generators} under + and x, reducing every
/// result to its normal form with the presentation's rewrite rules.
inline FiniteRing build_quotient(const RingSpec& spec, const spec::Quotient& q,
                                 const BuildOptions& opts) {
  if (q.base_modulus < 2)
    throw MalformedSpec("Z" + std::to_string(q.base_modulus) + "[...]: modulus must be at least 2");
  const std::size_t nv = q.variables.size();
  const std::int64_t m = q.base_modulus;
  RewriteSystem rules(m, nv, q.relations);

  std::vector<Polynomial> elems;
  std::map<Polynomial::Terms, std::uint32_t> index;
  auto intern = [&](const Polynomial& raw) -> std::uint32_t {
    Polynomial nf = rules.reduce(raw);
    auto [it, inserted] = index.try_emplace(nf.terms(), static_cast<std::uint32_t>(elems.size()));
    if (inserted) {
      elems.push_back(nf);
      if (elems.size() > opts.max_elements)
        throw MalformedSpec("presentation does not close within " +
                            std::to_string(opts.max_elements) + " elements");
    }
    return it->second;
  };

  intern(Polynomial(nv));
  intern(Polynomial::constant(nv, 1));
  if (elems.size() < 2)
    throw MalformedSpec("order-1 ring rejected: relations force 1 = 0");
  for (std::size_t v = 0; v < nv; ++v) intern(Polynomial::variable(nv, v));

  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<std::uint32_t, std::uint32_t>> ops;
  for (std::uint32_t i = 0; i < elems.size(); ++i)
    for (std::uint32_t j = 0; j <= i; ++j) {
      auto s = intern(add(elems[i], elems[j], m));
      auto p = intern(multiply(elems[i], elems[j], m));
      ops[{i, j}] = {s, p};
    }

  const auto n = static_cast<std::uint32_t>(elems.size());
  FiniteRing::Table addt(static_cast<std::size_t>(n) * n), mult(addt.size());
  for (const auto& [key, val] : ops) {
    auto [i, j] = key;
    addt[i * n + j] = addt[j * n + i] = val.first;
    mult[i * n + j] = mult[j * n + i] = val.second;
  }
  std::vector<std::string> names;
  for (const auto& e : elems) names.push_back(to_string(e, q.variables));
  return FiniteRing(std::move(addt), std::move(mult), std::move(names), spec);
}

/// Componentwise product. Elements are tuples in mixed-radix order (first
/// factor most significant), except that the identity tuple is moved to
/// index 1 so that element 1 is always the multiplicative identity.
inline FiniteRing build_product(const RingSpec& spec, const spec::Product& prod,
                                const BuildOptions& opts) {
  if (prod.factors.empty()) throw MalformedSpec("product needs at least one factor");
  std::vector<FiniteRing> rings;
  std::size_t total = 1;
  for (const auto& f : prod.factors) {
    rings.push_back(build_ring(f, opts));
    total *= rings.back().order();
    if (total > opts.max_elements)
      throw MalformedSpec("product order exceeds " + std::to_string(opts.max_elements));
  }
  const std::size_t k = rings.size();
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k - 1; i-- > 0;) stride[i] = stride[i + 1] * rings[i + 1].order();

  auto digits = [&](std::size_t raw) {
    std::vector<std::uint32_t> d(k);
    for (std::size_t i = 0; i < k; ++i) d[i] = static_cast<std::uint32_t>((raw / stride[i]) % rings[i].order());
    return d;
  };
  std::size_t raw_one = 0;
  for (std::size_t i = 0; i < k; ++i) raw_one += stride[i];

  // raw mixed-radix index <-> element index
  std::vector<std::uint32_t> to_elem(total), to_raw;
  to_raw.reserve(total);
  to_raw.push_back(0);
  if (raw_one != 0) to_raw.push_back(static_cast<std::uint32_t>(raw_one));
  for (std::size_t r = 1; r < total; ++r)
    if (r != raw_one) to_raw.push_back(static_cast<std::uint32_t>(r));
  for (std::uint32_t e = 0; e < total; ++e) to_elem[to_raw[e]] = e;

  const auto n = static_cast<std::uint32_t>(total);
  FiniteRing::Table addt(static_cast<std::size_t>(n) * n), mult(addt.size());
  std::vector<std::string> names(n);
  for (std::uint32_t a = 0; a < n; ++a) {
    auto da = digits(to_raw[a]);
    std::string name = "(";
    for (std::size_t i = 0; i < k; ++i) name += (i ? "," : "") + rings[i].name({da[i]});
    names[a] = name + ")";
    for (std::uint32_t b = 0; b < n; ++b) {
      auto db = digits(to_raw[b]);
      std::size_t rs = 0, rp = 0;
      for (std::size_t i = 0; i < k; ++i) {
        rs += rings[i].add({da[i]}, {db[i]}).index * stride[i];
        rp += rings[i].mul({da[i]}, {db[i]}).index * stride[i];
      }
      addt[a * n + b] = to_elem[rs];
      mult[a * n + b] = to_elem[rp];
    }
  }
  return FiniteRing(std::move(addt), std::move(mult), std::move(names), spec);
}

}  // namespace detail

/// Builds the ring described by `spec`. Throws MalformedSpec when the spec does
/// not describe a finite commutative ring with 0 != 1.
inline FiniteRing build_ring(const RingSpec& spec, const BuildOptions& opts) {
  if (spec.is<spec::Cyclic>()) return detail::build_cyclic(spec, spec.as<spec::Cyclic>().modulus);
  if (spec.is<spec::GaloisField>()) {
    const auto& g = spec.as<spec::GaloisField>();
    return detail::build_galois(spec, g.characteristic, g.degree);
  }
  if (spec.is<spec::Quotient>()) return detail::build_quotient(spec, spec.as<spec::Quotient>(), opts);
  if (spec.is<spec::Product>()) return detail::build_product(spec, spec.as<spec::Product>(), opts);
  const auto& ref = spec.as<spec::CatalogRef>();
  auto resolved = resolve_catalog_name(ref.name);
  if (!resolved) throw MalformedSpec("unknown catalog ring 'local8/" + ref.name + "'");
  FiniteRing inner = build_ring(*resolved, opts);
  return FiniteRing(inner.add_table(), inner.mul_table(), inner.names(), spec);
}

inline FiniteRing build_ring(std::string_view text, const BuildOptions& opts = {}) {
  return build_ring(parse_ring_spec(text), opts);
}

}  // namespace cleansr
