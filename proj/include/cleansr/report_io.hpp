#pragma once

// Verification report serialization (JSON, CSV) and the expected-mismatch
// registry.
//
// JSON: an array with one object per ring, in report order:
//   { "ring": str,
//     "error": str                      (only when the ring failed),
//     "inventory": { "order", "idempotents", "nontrivial_idempotents",
//                    "orthogonal_idempotents", "units", "involutory_units",
//                    "noninvolutory_units", "local_factors": int,
//                    "local", "field", "reduced": bool,
//                    "factor_orders": [int] },
//     "claims": [ { "id", "predicted", "computed", "status", "witness",
//                   "note": str, "expected": bool } ] }
//
// CSV columns: ring,claim_id,predicted,computed,status
//
// Registry file: { "expected_mismatches": [ { "ring", "claim_id", "note" } ] }

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "cleansr/claim.hpp"
#include "cleansr/error.hpp"
#include "cleansr/verifier.hpp"

namespace cleansr {

using ordered_json = nlohmann::ordered_json;

inline ordered_json inventory_json(const Inventory& inv) {
  ordered_json j;
  j["order"] = inv.order;
  j["idempotents"] = inv.id;
  j["nontrivial_idempotents"] = inv.id_star;
  j["orthogonal_idempotents"] = inv.id_perp_star;
  j["units"] = inv.units;
  j["involutory_units"] = inv.involutory;
  j["noninvolutory_units"] = inv.noninvolutory;
  j["local_factors"] = inv.n;
  j["local"] = inv.local;
  j["field"] = inv.field;
  j["reduced"] = inv.reduced;
  j["factor_orders"] = ordered_json::array();
  for (const auto& f : inv.factors) j["factor_orders"].push_back(f.order);
  return j;
}

inline ordered_json claim_json(const Claim& c) {
  ordered_json j;
  j["id"] = c.id;
  j["predicted"] = c.predicted;
  j["computed"] = c.computed;
  j["status"] = std::string(to_string(c.status));
  j["witness"] = c.witness;
  j["note"] = c.note;
  j["expected"] = c.expected_mismatch;
  return j;
}

inline ordered_json report_json(const VerificationReport& rep) {
  ordered_json j;
  j["ring"] = rep.ring_name;
  if (!rep.error.empty()) j["error"] = rep.error;
  if (rep.inventory) j["inventory"] = inventory_json(*rep.inventory);
  j["claims"] = ordered_json::array();
  for (const auto& c : rep.claims) j["claims"].push_back(claim_json(c));
  return j;
}

inline void write_json(std::ostream& os, const std::vector<VerificationReport>& reports) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) arr.push_back(report_json(r));
  os << arr.dump(2) << '\n';
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline void write_csv(std::ostream& os, const std::vector<VerificationReport>& reports) {
  os << "ring,claim_id,predicted,computed,status\n";
  for (const auto& r : reports) {
    if (!r.error.empty())
      os << csv_field(r.ring_name) << ",error,," << csv_field(r.error) << ",ERROR\n";
    for (const auto& c : r.claims)
      os << csv_field(r.ring_name) << ',' << csv_field(c.id) << ',' << csv_field(c.predicted) << ','
         << csv_field(c.computed) << ',' << to_string(c.status) << '\n';
  }
}

// ---------------------------------------------------------------------------
// Expected-mismatch registry.

struct ExpectedMismatch {
  std::string ring;
  std::string claim_id;
  std::string note;
};

inline std::vector<ExpectedMismatch> parse_registry(const std::string& text) {
  std::vector<ExpectedMismatch> out;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("registry is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("expected_mismatches") || !j["expected_mismatches"].is_array())
    throw Error("registry needs an \"expected_mismatches\" array");
  for (const auto& e : j["expected_mismatches"]) {
    if (!e.is_object() || !e.contains("ring") || !e.contains("claim_id"))
      throw Error("registry entries need \"ring\" and \"claim_id\"");
    out.push_back({e["ring"].get<std::string>(), e["claim_id"].get<std::string>(), e.value("note", "")});
  }
  return out;
}

inline std::vector<ExpectedMismatch> load_registry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open registry " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_registry(ss.str());
}

struct RegistryOutcome {
  std::vector<std::pair<std::string, std::string>> unregistered;  // (ring, claim id)
  std::vector<ExpectedMismatch> stale;  // registered, ring was run, claim did not mismatch
  std::vector<std::string> failed_rings;
  bool ok() const { return unregistered.empty() && failed_rings.empty(); }
};

/// Marks registered mismatches as expected and collects everything else.
inline RegistryOutcome apply_registry(std::vector<VerificationReport>& reports,
                                      const std::vector<ExpectedMismatch>& registry) {
  RegistryOutcome out;
  std::set<std::pair<std::string, std::string>> known, seen;
  for (const auto& e : registry) known.emplace(e.ring, e.claim_id);
  std::set<std::string> rings;
  for (auto& r : reports) {
    rings.insert(r.ring_name);
    if (!r.error.empty()) out.failed_rings.push_back(r.ring_name);
    for (auto& c : r.claims) {
      if (c.status != ClaimStatus::Mismatch) continue;
      auto key = std::make_pair(r.ring_name, c.id);
      if (known.contains(key)) {
        c.expected_mismatch = true;
        seen.insert(key);
      } else {
        out.unregistered.push_back(key);
      }
    }
  }
  for (const auto& e : registry)
    if (rings.contains(e.ring) && !seen.contains({e.ring, e.claim_id})) out.stale.push_back(e);
  return out;
}

}  // namespace cleansr
