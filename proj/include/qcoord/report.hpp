#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qcoord {

struct CheckCase {
  std::string input;
  std::string residual;  // "0" when the case passes
  bool pass = true;
};

/// Outcome of a verification suite. Serializes to
/// {schema, check, n, ell?, pass, cases: [{input, residual, pass}], notes?}.
struct CheckReport {
  std::string check;
  int n = 0;
  std::optional<int> ell;
  std::vector<CheckCase> cases;
  /// Free-form derived facts (engine-computed constants and the like).
  nlohmann::ordered_json notes = nlohmann::ordered_json::object();

  bool passed() const;
  std::size_t failures() const;
  void add(std::string input, std::string residual, bool pass);
  /// Appends all cases of other, prefixing their inputs.
  void merge(const CheckReport& other, const std::string& prefix = {});

  nlohmann::ordered_json to_json() const;
  /// One summary line, followed by every failing case.
  std::string to_text() const;
};

}  // namespace qcoord
