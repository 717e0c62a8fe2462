#pragma once

#include <string>
#include <string_view>

namespace cleansr {

enum class ClaimStatus { Match, Mismatch, Skipped };

inline std::string_view to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::Match: return "MATCH";
    case ClaimStatus::Mismatch: return "MISMATCH";
    default: return "SKIPPED";
  }
}

/// One closed-form or structural prediction compared against computation.
/// A MISMATCH always carries a non-empty witness.
struct Claim {
  std::string id;
  std::string predicted;
  std::string computed;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string witness;
  std::string note;
  bool expected_mismatch = false;
};

inline Claim skipped_claim(std::string id, std::string reason) {
  Claim c;
  c.id = std::move(id);
  c.status = ClaimStatus::Skipped;
  c.note = std::move(reason);
  return c;
}

inline Claim compared_claim(std::string id, std::string predicted, std::string computed,
                            std::string witness_on_mismatch) {
  Claim c;
  c.id = std::move(id);
  c.status = predicted == computed ? ClaimStatus::Match : ClaimStatus::Mismatch;
  c.predicted = std::move(predicted);
  c.computed = std::move(computed);
  if (c.status == ClaimStatus::Mismatch) {
    c.witness = std::move(witness_on_mismatch);
    if (c.witness.empty()) c.witness = "predicted " + c.predicted + ", computed " + c.computed;
  }
  return c;
}

}  // namespace cleansr
