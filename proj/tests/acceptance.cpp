// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails. All comparisons are on exact integers.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "cleansr/cleansr.hpp"
#include "test_support.hpp"

using namespace cleansr;

namespace {

int failures = 0;

void report(int id, const std::string& title, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << title << ": " << detail << '\n';
  if (!ok) ++failures;
}

/// Ground-truth sdim: the oracle where it runs, otherwise alpha of the SR graph.
std::size_t sdim_truth(const CleanGraph& g, bool* agree = nullptr) {
  auto rep = sdim_report(g, 18);
  if (agree) *agree = !rep.oracle_ran || rep.oracle_sdim == rep.sdim;
  return rep.oracle_ran ? rep.oracle_sdim : rep.sdim;
}

const Claim* find_claim(const VerificationReport& rep, const std::string& id) {
  for (const auto& c : rep.claims)
    if (c.id == id) return &c;
  return nullptr;
}

void local_rings() {
  bool ok = true;
  std::ostringstream detail;
  for (const auto& e : local_ring_table()) {
    auto r = build_ring(RingSpec::catalog_ref(e.name));
    const auto u = r.units().size();
    const std::size_t want = u == 1 ? 1 : 2 * u - 2;
    bool agree = true;
    const auto got = sdim_truth(build_cl(r), &agree);
    if (got != want || !agree) {
      ok = false;
      detail << e.name << " got " << got << " want " << want << "; ";
    }
  }
  if (ok) detail << "13 local rings, sdim = 1 or 2|U|-2";
  report(1, "local rings", ok, detail.str());
}

void fields() {
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t q : {3, 4, 5, 7, 8}) {
    auto r = build_ring("GF(" + std::to_string(q) + ")");
    auto cl = build_cl(r);
    const auto got = sdim_truth(cl);
    const bool cliques = is_disjoint_union_of_cliques(strong_resolving_graph(cl).srg, {q - 1, q - 1});
    detail << "q=" << q << ": " << got << (cliques ? " 2K" : " !2K") << "; ";
    if (got != 2 * q - 4 || !cliques) ok = false;
  }
  report(2, "fields sdim = 2q-4, SR graph = 2K_{q-1}", ok, detail.str());
}

void boolean_products() {
  bool ok = true;
  std::ostringstream detail;
  std::string spec = "Z2";
  for (std::size_t n = 2; n <= 4; ++n) {
    spec += " x Z2";
    auto r = build_ring(spec);
    const auto cl = sdim_truth(build_cl(r));
    const auto cl2 = sdim_truth(build_cl2(r));
    const std::size_t p = std::size_t{1} << n;
    detail << "n=" << n << ": " << cl << "/" << cl2 << "; ";
    if (cl != p - 1 || cl2 != p - 2) ok = false;
  }
  report(3, "Z2^n sdim(Cl) = 2^n-1, sdim(Cl2) = 2^n-2", ok, detail.str());
}

void two_noninvolutory_family() {
  bool ok = true;
  std::ostringstream detail;
  for (const char* spec : {"Z2 x GF(4)", "Z2 x Z5", "Z2 x Z2[x]/(x^3)", "Z2 x Z4[x]/(2x, x^2-2)"}) {
    auto r = build_ring(spec);
    const auto u = r.units().size();
    const auto cl = sdim_truth(build_cl(r));
    const auto cl2 = sdim_truth(build_cl2(r));
    const bool u2 = classify_units(r).noninvolutory.size() == 2;
    detail << spec << ": " << cl2 << "/" << cl << "; ";
    if (!u2 || cl2 != 3 * u - 5 || cl != 4 * u - 5) ok = false;
  }
  std::size_t lemma_runs = 0;
  for (const char* spec : {"Z2 x GF(4)", "Z2 x Z5", "Z2 x local8/Z2x3", "Z2 x local8/Z4x_2x_x2m2",
                           "Z2 x Z2 x GF(4)", "Z2 x Z2 x Z5", "Z2 x Z3", "Z2 x Z7", "Z3 x GF(4)",
                           "Z3 x Z3", "Z2 x GF(8)", "Z2 x Z9", "Z4 x GF(4)"}) {
    auto check = check_u2_lemma(build_ring(spec));
    ++lemma_runs;
    if (!check.passes()) {
      ok = false;
      detail << "lemma fails on " << spec << "; ";
    }
  }
  const bool negatives = !check_u2_lemma(build_ring("Z2 x Z3")).two_noninvolutory &&
                         !check_u2_lemma(build_ring("Z2 x Z7")).two_noninvolutory;
  if (!negatives) ok = false;
  detail << "lemma battery " << lemma_runs << " rings";
  report(4, "|U''| = 2 family: 3|U|-5 and 4|U|-5, factor lemma", ok, detail.str());
}

void mmd_equivalence() {
  bool ok = true;
  std::size_t graphs = 0, pairs = 0;
  std::ostringstream detail;
  for (const auto& [name, spec] : catalog()) {
    auto r = build_ring(spec);
    if (r.units().size() < 2) continue;
    auto cl = build_cl(r);
    if (cl.size() > 64) continue;
    const bool idem = r.idempotents().size() > 2;
    auto pred = idem ? MmdPredicate(predicted_mmd_cl_with_idempotents) : MmdPredicate(predicted_mmd_cl_no_idempotents);
    auto computed = strong_resolving_graph(cl).mmd_pairs;
    ++graphs;
    pairs += computed.size();
    if (computed != predicted_mmd_pairs(r, cl, pred)) {
      ok = false;
      detail << name << " Cl differs; ";
    }
    auto cl2 = build_cl2(r);
    if (idem && is_connected(cl2)) {
      auto c2 = strong_resolving_graph(cl2).mmd_pairs;
      ++graphs;
      pairs += c2.size();
      if (c2 != predicted_mmd_pairs(r, cl2, predicted_mmd_cl2)) {
        ok = false;
        detail << name << " Cl2 differs; ";
      }
    }
  }
  detail << graphs << " graphs, " << pairs << " MMD pairs compared";
  report(5, "MMD characterizations", ok, detail.str());
}

void structure_theorems() {
  bool ok = true;
  std::map<std::string, std::size_t> matched;
  std::ostringstream detail;
  for (const auto& [name, spec] : catalog()) {
    for (const auto& c : verify_srg_structure(build_ring(spec))) {
      if (c.status == ClaimStatus::Mismatch) {
        ok = false;
        detail << name << " " << c.id << " (" << c.witness << "); ";
      } else if (c.status == ClaimStatus::Match) {
        ++matched[c.id];
      }
    }
  }
  for (const char* id : {"srg.cl2.k_plus_clique", "srg.cl2.hprime", "srg.cl.g_plus_clique", "srg.cl.g_connected",
                         "srg.cl2.vertex_set"}) {
    detail << id << " x" << matched[id] << "; ";
    if (matched[id] == 0) ok = false;
  }
  report(6, "SR graph structure, label-exact", ok, detail.str());
}

void oracle_and_gallai() {
  bool ok = true;
  std::size_t oracle_graphs = 0, srgs = 0;
  std::ostringstream detail;
  auto gallai = [](const auto& g) {
    auto mis = max_independent_set(g);
    auto cover = min_vertex_cover(g);
    return is_independent_set(g, mis.witness) && is_vertex_cover(g, cover.witness) &&
           mis.size + cover.size == g.size();
  };
  for (const auto& [name, spec] : catalog()) {
    auto r = build_ring(spec);
    for (const auto& g : {build_cl(r), build_cl2(r)}) {
      if (g.size() < 2 || !is_connected(g)) continue;
      auto srg = strong_resolving_graph(g).srg;
      ++srgs;
      if (!gallai(srg)) {
        ok = false;
        detail << name << " Gallai fails; ";
      }
      if (g.size() > 18) continue;
      ++oracle_graphs;
      const auto oracle = sdim_bruteforce(g).size;
      const auto alpha = min_vertex_cover(srg).size;
      if (oracle != alpha) {
        ok = false;
        detail << name << " oracle " << oracle << " alpha " << alpha << "; ";
      }
    }
  }
  std::size_t random_ok = 0;
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    auto g = cleansr::testing::random_graph(4 + seed % 17, 0.2 + 0.005 * seed, seed);
    const bool same = gallai(g) &&
                      max_independent_set(g).size == cleansr::testing::brute_force_independence(g);
    if (same) ++random_ok;
  }
  if (random_ok != 100) ok = false;
  detail << oracle_graphs << " oracle graphs, " << srgs << " SR graphs, " << random_ok << "/100 random graphs";
  report(7, "oracle sdim = alpha(SR), Gallai identity", ok, detail.str());
}

void independence_cases() {
  struct Case {
    const char* ring;
    const char* label;
    std::int64_t want;
  };
  const Case cases[] = {{"Z2 x Z3", "i", 3}, {"Z2 x Z2 x GF(4)", "ii", 8}, {"Z2 x GF(4)", "iii", 5}, {"Z2 x Z7", "iv", 6}};
  bool ok = true;
  std::ostringstream detail;
  for (const auto& c : cases) {
    auto r = build_ring(c.ring);
    auto inv = take_inventory(r);
    const auto computed = static_cast<std::int64_t>(max_independent_set(strong_resolving_graph(build_cl2(r)).srg).size);
    const auto predicted = predict_beta_cl2_srg(inv);
    bool shape = true;
    if (std::string(c.label) == "i") shape = inv.noninvolutory == 0;
    if (std::string(c.label) == "ii") shape = inv.noninvolutory == 2 && inv.id_star >= 2 * inv.id_perp_star;
    if (std::string(c.label) == "iii") shape = inv.noninvolutory == 2 && inv.id_star < 2 * inv.id_perp_star;
    if (std::string(c.label) == "iv") shape = inv.noninvolutory > 2;
    detail << "(" << c.label << ") " << c.ring << ": " << computed << "; ";
    if (!shape || computed != predicted || computed != c.want) ok = false;
  }
  report(8, "independence number of Cl2 SR graph, cases i-iv", ok, detail.str());
}

void discrepancy_handling() {
  const std::vector<NamedSpec> specs = {{"Z2 x Z3", parse_ring_spec("Z2 x Z3")},
                                        {"Z3 x Z3", parse_ring_spec("Z3 x Z3")}};
  auto first = run_verification(specs, {}, 2);
  auto second = run_verification(specs, {}, 1);
  bool ok = true;
  std::ostringstream detail;
  for (std::size_t i = 0; i < first.size(); ++i) {
    if (report_json(first[i]) != report_json(second[i])) {
      ok = false;
      detail << first[i].ring_name << " not deterministic; ";
    }
    const auto* oracle = find_claim(first[i], "oracle.cl");
    const auto* chain = find_claim(first[i], "sdim.relation");
    const auto* closed = find_claim(first[i], "sdim.cl.product");
    if (!oracle || !chain || !closed || oracle->status != ClaimStatus::Match) {
      ok = false;
      detail << first[i].ring_name << " missing oracle ground truth; ";
      continue;
    }
    const auto truth = oracle->computed;
    const bool chain_ok = chain->status == ClaimStatus::Match && chain->computed == truth;
    const bool closed_consistent = (closed->predicted == truth) == (closed->status == ClaimStatus::Match);
    const bool witnessed = closed->status == ClaimStatus::Match || !closed->witness.empty();
    detail << first[i].ring_name << ": oracle " << truth << ", relation " << chain->predicted << " "
           << to_string(chain->status) << ", closed form " << closed->predicted << " " << to_string(closed->status)
           << "; ";
    if (!chain_ok || !closed_consistent || !witnessed) ok = false;
  }
  auto with_registry = first;
  const bool registered = apply_registry(with_registry, load_registry(CLEANSR_REGISTRY_PATH)).ok();
  auto without = first;
  const bool bare = apply_registry(without, {}).ok();
  const bool any_mismatch = !apply_registry(second, {}).unregistered.empty();
  detail << "registry " << (registered ? "accepts" : "rejects") << " run, empty registry "
         << (bare ? "accepts" : "rejects");
  if (!registered || bare != !any_mismatch) ok = false;
  report(9, "closed form vs oracle on Z2 x Z3 and Z3 x Z3", ok, detail.str());
}

void propositions() {
  bool ok = true;
  std::size_t rings = 0;
  std::ostringstream detail;
  for (const auto& [name, spec] : catalog()) {
    ++rings;
    if (!check_unit_group_propositions(build_ring(spec)).consistent()) {
      ok = false;
      detail << name << " fails; ";
    }
  }
  detail << rings << " catalog rings";
  report(10, "unit-group propositions", ok, detail.str());
}

}  // namespace

int main() {
  const std::vector<void (*)()> criteria = {local_rings,       fields,           boolean_products,
                                            two_noninvolutory_family, mmd_equivalence, structure_theorems,
                                            oracle_and_gallai, independence_cases, discrepancy_handling,
                                            propositions};
  int id = 0;
  for (auto fn : criteria) {
    ++id;
    try {
      fn();
    } catch (const std::exception& e) {
      report(id, "criterion", false, std::string("exception: ") + e.what());
    }
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << '\n';
  return failures == 0 ? 0 : 1;
}
