#include "cmon/report.hpp"

#include <algorithm>

#include "cmon/caps.hpp"
#include "cmon/error.hpp"

namespace cmon {

void require_carrier(std::size_t size, const SizeCaps& caps, const char* what) {
  if (size > caps.max_carrier) {
    throw SizeCapError(std::string(what) + ": carrier of " + std::to_string(size) +
                       " elements exceeds cap " + std::to_string(caps.max_carrier));
  }
}

std::string Witness::to_string() const {
  std::string out;
  for (const auto& [name, value] : bindings) {
    if (!out.empty()) out += ' ';
    out += name + '=' + value;
  }
  if (!note.empty()) {
    if (!out.empty()) out += "; ";
    out += note;
  }
  return out;
}

AxiomResult& AxiomReport::add(AxiomResult result) {
  results_.push_back(std::move(result));
  return results_.back();
}

void AxiomReport::append(const AxiomReport& other, const std::string& prefix) {
  for (AxiomResult r : other.results_) {
    r.label = prefix + r.label;
    results_.push_back(std::move(r));
  }
}

bool AxiomReport::ok() const {
  return std::all_of(results_.begin(), results_.end(),
                     [](const AxiomResult& r) { return r.passed; });
}

const AxiomResult* AxiomReport::find(const std::string& label) const {
  for (const auto& r : results_) {
    if (r.label == label) return &r;
  }
  return nullptr;
}

std::size_t AxiomReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results_.begin(), results_.end(),
                    [](const AxiomResult& r) { return !r.passed; }));
}

void AxiomReport::print(std::ostream& out) const {
  for (const auto& r : results_) {
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.label;
    if (!r.title.empty()) out << " (" << r.title << ")";
    out << " checked=" << r.checked;
    if (r.vacuous != 0) out << " vacuous=" << r.vacuous;
    if (r.witness) out << " witness: " << r.witness->to_string();
    out << '\n';
  }
}

}  // namespace cmon
