#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace cmon {

/// Variable bindings (name, element name) for a failing assignment.
struct Witness {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string note;

  std::string to_string() const;
};

/// Outcome of one law, checked exhaustively.
struct AxiomResult {
  std::string label;
  std::string title;
  bool passed = true;
  std::uint64_t checked = 0;
  /// Assignments rejected by a quasi-identity's hypothesis.
  std::uint64_t vacuous = 0;
  std::optional<Witness> witness;
};

/// Per-label results in a fixed order. Labels are unique within a report.
class AxiomReport {
 public:
  AxiomResult& add(AxiomResult result);
  void append(const AxiomReport& other, const std::string& prefix = {});

  bool ok() const;
  const std::vector<AxiomResult>& results() const { return results_; }
  const AxiomResult* find(const std::string& label) const;
  std::size_t failures() const;

  void print(std::ostream& out) const;

 private:
  std::vector<AxiomResult> results_;
};

}  // namespace cmon
