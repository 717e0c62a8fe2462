#pragma once

// Sparse multivariate polynomials with integer coefficients, plus the
// rewrite-rule reduction used to turn a presentation Z_m[x,...]/(relations)
// into normal forms.

#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "cleansr/error.hpp"

namespace cleansr {

/// Exponent vector, one entry per variable.
using Monomial = std::vector<std::uint32_t>;

inline std::uint32_t total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), std::uint32_t{0});
}

/// Graded lexicographic order: higher total degree is larger, ties broken by
/// comparing exponents variable by variable.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const {
    auto da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return a < b;
  }
};

inline bool divides(const Monomial& d, const Monomial& m) {
  for (std::size_t i = 0; i < d.size(); ++i)
    if (d[i] > m[i]) return false;
  return true;
}

inline Monomial monomial_quotient(const Monomial& m, const Monomial& d) {
  Monomial q(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) q[i] = m[i] - d[i];
  return q;
}

inline Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial p(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) p[i] = a[i] + b[i];
  return p;
}

/// Polynomial in a fixed number of variables. Zero coefficients are never
/// stored. Coefficients are plain integers; arithmetic "mod m" is applied by
/// the free functions that take a modulus.
class Polynomial {
 public:
  using Terms = std::map<Monomial, std::int64_t, GradedLex>;

  Polynomial() = default;
  explicit Polynomial(std::size_t variables) : variables_(variables) {}

  static Polynomial constant(std::size_t variables, std::int64_t c) {
    Polynomial p(variables);
    p.add_term(Monomial(variables, 0), c);
    return p;
  }
  static Polynomial variable(std::size_t variables, std::size_t which) {
    Polynomial p(variables);
    Monomial m(variables, 0);
    m[which] = 1;
    p.add_term(m, 1);
    return p;
  }

  std::size_t variables() const noexcept { return variables_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Monomial& m, std::int64_t c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Leading (greatest) term. Precondition: not zero.
  const Terms::value_type& leading() const { return *terms_.rbegin(); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::size_t variables_ = 0;
  Terms terms_;
};

inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  auto r = a % m;
  return r < 0 ? r + m : r;
}

/// Reduce every coefficient into [0, m).
inline Polynomial reduce_coefficients(const Polynomial& p, std::int64_t m) {
  Polynomial out(p.variables());
  for (const auto& [mono, c] : p.terms()) out.add_term(mono, mod_floor(c, m));
  return out;
}

inline Polynomial add(const Polynomial& a, const Polynomial& b, std::int64_t m) {
  Polynomial out = a;
  for (const auto& [mono, c] : b.terms()) out.add_term(mono, c);
  return reduce_coefficients(out, m);
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b, std::int64_t m) {
  Polynomial out(a.variables());
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms())
      out.add_term(monomial_product(ma, mb), mod_floor(ca * cb, m));
  return reduce_coefficients(out, m);
}

inline Polynomial scale_shift(const Polynomial& p, std::int64_t c, const Monomial& shift,
                              std::int64_t m) {
  Polynomial out(p.variables());
  for (const auto& [mono, k] : p.terms())
    out.add_term(monomial_product(mono, shift), mod_floor(c * k, m));
  return out;
}

/// Renders a polynomial with terms in decreasing graded-lex order, e.g.
/// "x^2-2" or "2x+y". Variables are printed by juxtaposition.
inline std::string to_string(const Polynomial& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [mono, c] = *it;
    std::int64_t mag = c < 0 ? -c : c;
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    bool constant = total_degree(mono) == 0;
    if (mag != 1 || constant) out += std::to_string(mag);
    for (std::size_t v = 0; v < mono.size(); ++v) {
      if (mono[v] == 0) continue;
      out += names[v];
      if (mono[v] > 1) out += "^" + std::to_string(mono[v]);
    }
    first = false;
  }
  return out;
}

/// One rewrite rule `lead_coeff * lead + rest = 0` over Z_m, where lead_coeff
/// divides m. A term a*M with lead | M and a >= lead_coeff is rewritten by
/// subtracting floor(a / lead_coeff) * (M / lead) times the rule.
struct RewriteRule {
  Monomial lead;
  std::int64_t lead_coeff = 1;
  Polynomial full;  // the whole relation, lead term included
};

class RewriteSystem {
 public:
  /// Builds rules from relations over Z_m. Each relation is scaled by a unit
  /// so that its leading coefficient becomes gcd(c, m); when that gcd is not
  /// 1 the annihilator consequence (m / g) * relation is added as well.
  RewriteSystem(std::int64_t modulus, std::size_t variables,
                const std::vector<Polynomial>& relations)
      : modulus_(modulus), variables_(variables) {
    std::vector<Polynomial> pending;
    for (const auto& r : relations) pending.push_back(reduce_coefficients(r, modulus_));
    std::size_t guard = 0;
    while (!pending.empty()) {
      if (++guard > 1000) throw MalformedSpec("relation saturation did not terminate");
      Polynomial r = reduce(pending.back());
      pending.pop_back();
      if (r.is_zero()) continue;
      auto [lead, c] = r.leading();
      std::int64_t g = std::gcd(c, modulus_);
      std::int64_t t = unit_scaling(c, g);
      Polynomial scaled = scale_shift(r, t, Monomial(variables_, 0), modulus_);
      rules_.push_back(RewriteRule{lead, g, scaled});
      if (g != 1) {
        Polynomial annihilated = scale_shift(scaled, modulus_ / g, Monomial(variables_, 0), modulus_);
        if (!annihilated.is_zero()) pending.push_back(annihilated);
      }
    }
  }

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<RewriteRule>& rules() const noexcept { return rules_; }

  Polynomial reduce(Polynomial p) const {
    p = reduce_coefficients(p, modulus_);
    while (true) {
      const RewriteRule* hit = nullptr;
      Monomial target;
      std::int64_t coeff = 0;
      for (auto it = p.terms().rbegin(); it != p.terms().rend() && hit == nullptr; ++it) {
        for (const auto& rule : rules_) {
          if (divides(rule.lead, it->first) && it->second >= rule.lead_coeff) {
            hit = &rule;
            target = it->first;
            coeff = it->second;
            break;
          }
        }
      }
      if (hit == nullptr) return p;
      std::int64_t q = coeff / hit->lead_coeff;
      Polynomial sub = scale_shift(hit->full, modulus_ - q % modulus_,
                                   monomial_quotient(target, hit->lead), modulus_);
      for (const auto& [m2, c2] : sub.terms()) p.add_term(m2, c2);
      p = reduce_coefficients(p, modulus_);
    }
  }

 private:
  // Smallest unit t with t * c == g (mod m).
  std::int64_t unit_scaling(std::int64_t c, std::int64_t g) const {
    for (std::int64_t t = 1; t < modulus_ || t == 1; ++t) {
      if (std::gcd(t, modulus_) != 1) continue;
      if (mod_floor(t * c, modulus_) == g % modulus_) return t;
    }
    throw MalformedSpec("no unit rescales leading coefficient");
  }

  std::int64_t modulus_;
  std::size_t variables_;
  std::vector<RewriteRule> rules_;
};

}  // namespace cleansr
