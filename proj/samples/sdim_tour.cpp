// Walks through the library on a few rings: build the ring, form its clean
// graph, compute the strong resolving graph and read off sdim.

#include <iostream>

#include "cleansr/cleansr.hpp"

int main() {
  using namespace cleansr;
  for (const char* text : {"Z5", "Z2 x GF(4)", "Z2 x Z2 x Z3"}) {
    auto r = build_ring(text);
    auto inv = take_inventory(r);
    auto cl = build_cl(r);
    auto srg = strong_resolving_graph(cl);
    auto rep = sdim_report(cl, 18);

    std::cout << text << ": |Id| = " << inv.id << ", |U| = " << inv.units << ", |U''| = " << inv.noninvolutory
              << ", n = " << inv.n << '\n';
    std::cout << "  Cl has " << cl.size() << " vertices and " << cl.edge_count() << " edges\n";
    std::cout << "  SR graph: " << srg.srg.size() << " vertices, " << srg.mmd_pairs.size() << " MMD pairs\n";
    std::cout << "  sdim(Cl) = " << rep.sdim;
    if (rep.oracle_ran) std::cout << " (brute force agrees: " << (rep.oracle_sdim == rep.sdim ? "yes" : "no") << ")";
    std::cout << '\n';

    if (inv.id_star == 0) {
      std::cout << "  closed form: " << predict_sdim_no_nontrivial_idempotents(inv) << '\n';
    } else {
      const auto cl2 = sdim_via_srg(build_cl2(r)).sdim;
      std::cout << "  sdim(Cl2) = " << cl2 << ", relation gives sdim(Cl) = "
                << predict_sdim_relation(inv, static_cast<std::int64_t>(cl2)) << '\n';
    }
    if (rep.oracle_ran && rep.oracle_sdim != rep.sdim) return 1;
  }
  return 0;
}
