#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "idyn/model.hpp"
#include "idyn/verdict.hpp"

namespace idyn {

inline constexpr const char* kToolVersion = "0.1.0";

/// One question about one model, in the vocabulary of the command line.
///
/// `command` is `check` (op = transitivity kind name), `compute` (op =
/// operator name such as `local-function` or `k-opens:semi`) or `classify`.
/// Optional arguments are kept as text and parsed against the model.
struct Query {
  std::string command;
  std::string op;
  std::optional<std::string> set;
  std::optional<std::string> point;
  std::optional<std::string> family;
  std::optional<std::string> grade;
  std::optional<std::string> direction;

  /// `check i-transitive`, `compute local-function --set {a b c}`, ...
  std::string describe() const;
};

struct Evaluation {
  std::string query;
  std::string text;  ///< rendered result
  nlohmann::json result;
  std::optional<bool> holds;
  std::optional<Witness> witness;
  std::vector<std::string> notes;
};

/// Names accepted after `compute`.
std::vector<std::string> compute_ops();

/// Answers `query`.  Throws Error for bad arguments (Usage, UnknownPoint,
/// Parse) and whatever the underlying operation raises.
Evaluation evaluate(const Model& model, const Query& query, bool strict_continuity = false);

/// {tool_version, query, model_name, result, holds?, witness?, notes?}
nlohmann::json to_json(const Evaluation& e, const Model& model);

/// `query: ...` then `result: ...`, witness and notes lines.
std::string to_text(const Evaluation& e, const Model& model);

}  // namespace idyn
