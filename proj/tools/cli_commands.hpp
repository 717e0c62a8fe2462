#pragma once

// Command implementations behind the cleansr executable. Each command writes
// to the given streams and returns the process exit code:
//   0 success, 1 verification failure, 2 bad input or computation error.

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cleansr/cleansr.hpp"

namespace cleansr::cli {

enum class Format { Text, Json, Csv, Dot };
enum class ExportWhich { Cl, Cl1, Cl2, ClSrg, Cl2Srg };

inline constexpr int kOk = 0;
inline constexpr int kVerifyFailed = 1;
inline constexpr int kError = 2;

namespace detail {

template <class Range, class Fn>
std::string braces(const Range& items, Fn&& show) {
  std::string out = "{";
  bool first = true;
  for (const auto& x : items) {
    out += (first ? "" : ", ") + show(x);
    first = false;
  }
  return out + "}";
}

inline std::string element_set(const FiniteRing& r, const std::vector<RingElement>& xs) {
  return braces(xs, [&](RingElement e) { return r.name(e); });
}

inline std::string vertex_set(const FiniteRing& r, const CleanGraph& g, const std::vector<std::size_t>& vs) {
  return braces(vs, [&](std::size_t v) { return vertex_name(r, g.label(v)); });
}

inline std::string graph_title(CleanVariant v, const std::string& ring) {
  switch (v) {
    case CleanVariant::Cl1: return "Cl1(" + ring + ")";
    case CleanVariant::Cl2: return "Cl2(" + ring + ")";
    default: return "Cl(" + ring + ")";
  }
}

/// Runs `body`, translating library errors into a diagnostic and exit code 2.
inline int guarded(std::ostream& err, const std::string& input, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: parse error at position " << e.position() << ": " << e.what() << '\n';
    err << "  " << input << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
  } catch (const Disconnected& e) {
    err << "error: Disconnected: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kError;
}

inline void write_edges(std::ostream& out, const FiniteRing& r, const CleanGraph& g) {
  out << "edges:\n";
  for (auto [u, v] : g.edges())
    out << "  " << vertex_name(r, g.label(u)) << " -- " << vertex_name(r, g.label(v)) << '\n';
}

}  // namespace detail

inline int cmd_ring_info(const std::string& spec_text, std::ostream& out, std::ostream& err) {
  return detail::guarded(err, spec_text, [&] {
    auto spec = parse_ring_spec(spec_text);
    auto r = build_ring(spec);
    auto inv = take_inventory(r);
    auto cls = classify_units(r);
    out << "ring: " << to_string(spec) << '\n';
    out << "order: " << r.order() << '\n';
    out << "Id = " << detail::element_set(r, r.idempotents()) << "  (|Id| = " << inv.id << ")\n";
    out << "Id* = " << detail::element_set(r, nontrivial_idempotents(r)) << "  (|Id*| = " << inv.id_star
        << ")\n";
    out << "Id_perp* = " << detail::element_set(r, max_orthogonal_idempotents(r))
        << "  (|Id_perp*| = " << inv.id_perp_star << ")\n";
    out << "U = " << detail::element_set(r, r.units()) << "  (|U| = " << inv.units << ")\n";
    out << "U' = " << detail::element_set(r, cls.involutory) << "  (|U'| = " << inv.involutory << ")\n";
    out << "U'' = " << detail::element_set(r, cls.noninvolutory) << "  (|U''| = " << inv.noninvolutory
        << ")\n";
    out << "local: " << (inv.local ? "yes" : "no") << '\n';
    out << "field: " << (inv.field ? "yes" : "no") << '\n';
    out << "reduced: " << (inv.reduced ? "yes" : "no") << '\n';
    out << "n = " << inv.n << '\n';
    std::string orders;
    for (const auto& f : inv.factors)
      orders += (orders.empty() ? "" : ", ") + std::to_string(f.order) + " (|U| = " + std::to_string(f.units) + ")";
    out << "local factor orders: " << orders << '\n';
    return kOk;
  });
}

inline int cmd_graph(const std::string& spec_text, CleanVariant which, Format fmt, std::ostream& out,
                     std::ostream& err) {
  return detail::guarded(err, spec_text, [&] {
    auto spec = parse_ring_spec(spec_text);
    auto r = build_ring(spec);
    auto g = build_clean_graph(r, which);
    auto title = detail::graph_title(which, to_string(spec));
    if (fmt == Format::Dot) {
      write_dot(out, r, g, title);
      return kOk;
    }
    if (fmt == Format::Json) {
      write_graph_json(out, r, g, title);
      return kOk;
    }
    auto diam = diameter(g);
    out << "graph: " << title << '\n';
    out << "vertices: " << g.size() << '\n';
    out << "edges: " << g.edge_count() << '\n';
    out << "connected: " << (is_connected(g) ? "yes" : "no") << '\n';
    out << "complete: " << (is_complete(g) ? "yes" : "no") << '\n';
    out << "diameter: " << (diam ? std::to_string(*diam) : std::string("infinite")) << '\n';
    detail::write_edges(out, r, g);
    return kOk;
  });
}

inline int cmd_srg(const std::string& spec_text, CleanVariant which, Format fmt, std::ostream& out,
                   std::ostream& err) {
  return detail::guarded(err, spec_text, [&] {
    auto spec = parse_ring_spec(spec_text);
    auto r = build_ring(spec);
    auto g = build_clean_graph(r, which);
    auto title = detail::graph_title(which, to_string(spec));
    if (!is_connected(g)) throw Disconnected(title + " is disconnected; its strong resolving graph is undefined");
    auto res = strong_resolving_graph(g);
    auto srg_title = title + "_SR";
    if (fmt == Format::Dot) {
      write_dot(out, r, res.srg, srg_title);
      return kOk;
    }
    if (fmt == Format::Json) {
      write_graph_json(out, r, res.srg, srg_title);
      return kOk;
    }
    out << "graph: " << title << '\n';
    out << "MMD pairs: " << res.mmd_pairs.size() << '\n';
    out << "boundary: " << res.boundary.size() << " of " << g.size() << " vertices\n";
    std::string sizes;
    for (const auto& c : connected_components(res.srg)) sizes += (sizes.empty() ? "" : " ") + std::to_string(c.size());
    out << "SR graph: " << res.srg.size() << " vertices, " << res.srg.edge_count() << " edges\n";
    out << "components: " << sizes << '\n';
    detail::write_edges(out, r, res.srg);
    return kOk;
  });
}

inline int cmd_sdim(const std::string& spec_text, CleanVariant which, std::size_t oracle_bound, std::ostream& out,
                    std::ostream& err) {
  return detail::guarded(err, spec_text, [&] {
    auto spec = parse_ring_spec(spec_text);
    auto r = build_ring(spec);
    auto g = build_clean_graph(r, which);
    auto title = detail::graph_title(which, to_string(spec));
    if (!is_connected(g)) throw Disconnected(title + " is disconnected; sdim needs a connected graph");
    auto rep = sdim_report(g, oracle_bound);
    std::string method = "srg";
    if (rep.oracle_ran) method = rep.oracle_sdim == rep.sdim ? "both-agree" : "DISAGREE";
    out << "graph: " << title << " (" << g.size() << " vertices)\n";
    out << "sdim: " << rep.sdim << '\n';
    out << "method: " << method << '\n';
    out << "|V(SR)|: " << rep.srg_vertices << ", alpha(SR): " << rep.alpha_srg << ", beta(SR): " << rep.beta_srg
        << '\n';
    out << "maximum independent set of SR: " << detail::vertex_set(r, g, rep.independent_set) << '\n';
    out << "minimum vertex cover of SR: " << detail::vertex_set(r, g, rep.vertex_cover) << '\n';
    if (rep.oracle_ran) {
      out << "oracle sdim: " << rep.oracle_sdim << '\n';
      out << "oracle strong resolving set: " << detail::vertex_set(r, g, rep.resolving_set) << '\n';
    } else {
      out << "oracle: skipped (" << g.size() << " vertices > bound " << oracle_bound << ")\n";
    }
    if (method == "DISAGREE") {
      err << "error: oracle and SR-graph dimension disagree\n";
      return kVerifyFailed;
    }
    return kOk;
  });
}

inline int cmd_export(const std::string& spec_text, ExportWhich which, Format fmt, std::ostream& out,
                      std::ostream& err) {
  return detail::guarded(err, spec_text, [&] {
    auto spec = parse_ring_spec(spec_text);
    auto r = build_ring(spec);
    const auto name = to_string(spec);
    CleanGraph g;
    std::string title;
    switch (which) {
      case ExportWhich::Cl: g = build_cl(r); title = "Cl(" + name + ")"; break;
      case ExportWhich::Cl1: g = build_cl1(r); title = "Cl1(" + name + ")"; break;
      case ExportWhich::Cl2: g = build_cl2(r); title = "Cl2(" + name + ")"; break;
      case ExportWhich::ClSrg: g = strong_resolving_graph(build_cl(r)).srg; title = "Cl(" + name + ")_SR"; break;
      case ExportWhich::Cl2Srg: {
        auto cl2 = build_cl2(r);
        if (!is_connected(cl2)) throw Disconnected("Cl2(" + name + ") is disconnected");
        g = strong_resolving_graph(cl2).srg;
        title = "Cl2(" + name + ")_SR";
        break;
      }
    }
    if (fmt == Format::Json)
      write_graph_json(out, r, g, title);
    else
      write_dot(out, r, g, title);
    return kOk;
  });
}

inline int cmd_catalog(std::ostream& out) {
  out << "local rings of order <= 8:\n";
  for (const auto& e : local_ring_table())
    out << "  local8/" << e.name << "  = " << e.definition << "  (order " << e.order << ")\n";
  out << "product battery:\n";
  for (const auto& ns : catalog_products()) out << "  " << ns.name << '\n';
  return kOk;
}

struct VerifyConfig {
  std::string suite;  // "table1", "products-small", "all" or empty
  std::vector<std::string> rings;
  std::size_t jobs = 0;
  std::size_t oracle_bound = 18;
  std::string out_dir = ".";
  std::string registry_path;
  bool registry_required = false;  // explicit path: a missing file is an error
};

inline std::vector<NamedSpec> select_suite(const std::string& suite) {
  if (suite == "table1") return catalog_locals();
  if (suite == "products-small") return catalog_products();
  if (suite == "all") return catalog();
  throw Error("unknown suite '" + suite + "' (expected table1, products-small or all)");
}

inline int cmd_verify(const VerifyConfig& cfg, std::ostream& out, std::ostream& err) {
  std::vector<NamedSpec> specs;
  std::string current;
  int rc = detail::guarded(err, current, [&] {
    if (!cfg.suite.empty() || cfg.rings.empty()) specs = select_suite(cfg.suite.empty() ? "all" : cfg.suite);
    for (const auto& text : cfg.rings) {
      current = text;
      auto s = parse_ring_spec(text);
      specs.push_back({to_string(s), s});
    }
    return kOk;
  });
  if (rc != kOk) return rc;

  std::vector<ExpectedMismatch> registry;
  if (!cfg.registry_path.empty()) {
    if (std::filesystem::exists(cfg.registry_path)) {
      rc = detail::guarded(err, cfg.registry_path, [&] {
        registry = load_registry(cfg.registry_path);
        return kOk;
      });
      if (rc != kOk) return rc;
    } else if (cfg.registry_required) {
      err << "error: registry " << cfg.registry_path << " not found\n";
      return kError;
    } else {
      err << "warning: registry " << cfg.registry_path << " not found; no mismatches are expected\n";
    }
  }

  auto reports = run_verification(specs, VerifyOptions{cfg.oracle_bound}, cfg.jobs);
  auto outcome = apply_registry(reports, registry);

  std::error_code ec;
  std::filesystem::create_directories(cfg.out_dir, ec);
  const auto json_path = std::filesystem::path(cfg.out_dir) / "report.json";
  const auto csv_path = std::filesystem::path(cfg.out_dir) / "report.csv";
  std::ofstream json_out(json_path), csv_out(csv_path);
  if (!json_out || !csv_out) {
    err << "error: cannot write reports to " << cfg.out_dir << '\n';
    return kError;
  }
  write_json(json_out, reports);
  write_csv(csv_out, reports);

  std::size_t match = 0, mismatch = 0, expected = 0, skipped = 0;
  for (const auto& r : reports) {
    std::size_t rm = 0, rmm = 0, rs = 0;
    for (const auto& c : r.claims) {
      if (c.status == ClaimStatus::Match) ++rm;
      else if (c.status == ClaimStatus::Skipped) ++rs;
      else {
        ++rmm;
        if (c.expected_mismatch) ++expected;
      }
    }
    match += rm;
    mismatch += rmm;
    skipped += rs;
    out << r.ring_name << ": ";
    if (!r.error.empty()) out << "ERROR " << r.error;
    else out << rm << " match, " << rmm << " mismatch, " << rs << " skipped";
    out << '\n';
    for (const auto& c : r.claims)
      if (c.status == ClaimStatus::Mismatch)
        out << "  MISMATCH " << c.id << (c.expected_mismatch ? " (registered)" : " (UNREGISTERED)") << ": "
            << c.witness << '\n';
  }
  out << "total: " << reports.size() << " rings, " << match << " match, " << mismatch << " mismatch ("
      << expected << " registered), " << skipped << " skipped\n";
  out << "reports: " << json_path.string() << ", " << csv_path.string() << '\n';
  for (const auto& s : outcome.stale)
    err << "warning: registered mismatch " << s.ring << " / " << s.claim_id << " did not occur\n";
  for (const auto& [ring, id] : outcome.unregistered)
    err << "error: unregistered mismatch " << ring << " / " << id << '\n';
  for (const auto& ring : outcome.failed_rings) err << "error: ring " << ring << " failed\n";
  return outcome.ok() ? kOk : kVerifyFailed;
}

}  // namespace cleansr::cli
