#pragma once

#include <string>
#include <vector>

#include "idyn/model.hpp"
#include "idyn/query.hpp"

namespace idyn {

/// Where an expected value comes from.
///   printed      stated in the example and confirmed by computation
///   derived      computed here; the example states nothing about it
///   discrepancy  the example states `printed_value`, computation gives
///                `expected`; both are kept and reported
enum class ClaimSource { printed, derived, discrepancy };
std::string_view to_string(ClaimSource source);

struct Claim {
  Query query;
  std::string expected;  ///< rendered result text
  ClaimSource source = ClaimSource::printed;
  std::string printed_value;  ///< discrepancy only
  std::string note;
};

struct CorpusEntry {
  std::string name;
  std::string model_text;  ///< model file contents
  std::vector<Claim> claims;
  Model model() const;
};

/// The finite examples (each exactly once).
const std::vector<CorpusEntry>& corpus();

enum class ClaimStatus { ok, registered_discrepancy, mismatch };
std::string_view to_string(ClaimStatus status);

struct ClaimResult {
  std::string entry;
  Claim claim;
  std::string computed;
  ClaimStatus status = ClaimStatus::ok;
};

std::vector<ClaimResult> run_corpus();

/// Notes for a query on a model that matches a corpus model (by structure)
/// and a registered discrepancy claim with the same query.
std::vector<std::string> discrepancy_notes(const Model& model, const Query& query);

}  // namespace idyn
