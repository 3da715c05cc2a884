#pragma once

#include <string>
#include <string_view>

#include "idyn/model.hpp"

namespace idyn {

/// Line-oriented model file:
///
///     # comment
///     name: EX_4_1
///     points: a b c d
///     opens: {a} {c} {a c} {a c d}
///     ideal: {a c}
///     map: a>c b>b c>a d>d
///
/// `opens:` may repeat; ∅ and X are implied and may also be listed.
/// `ideal:` takes generator sets, `trivial`, or `power {M}`; it defaults to
/// trivial.  `map:` must assign every point exactly once; it defaults to the
/// identity when the line is absent.
class ModelParseError : public Error {
 public:
  ModelParseError(ErrorCode code, std::size_t line, std::size_t column, const std::string& message)
      : Error(code, "line " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

Model parse_model(std::string_view text);
Model load_model(const std::string& path);

/// Canonical text; `parse_model(print_model(m)) == m`.
std::string print_model(const Model& model);

/// Parses `{a c}` (or `{}`) against `ground`; throws ModelParseError.
Subset parse_subset(const GroundSet& ground, std::string_view text);

/// Parses `{} {a} {a c}`, optionally wrapped in `[...]`.
SetFamily parse_family(const GroundSet& ground, std::string_view text);

}  // namespace idyn
