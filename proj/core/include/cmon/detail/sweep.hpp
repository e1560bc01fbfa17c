#pragma once

#include <array>
#include <string>
#include <type_traits>
#include <utility>

#include "cmon/algebra.hpp"
#include "cmon/report.hpp"

namespace cmon::detail {

enum class Outcome { holds, fails, vacuous };

struct Var {
  const char* name;
  const Names* carrier;
};

/// Exhaustive sweep over the product of the variables' carriers, last
/// variable fastest. Records the first failing assignment as the witness.
/// `pred` returns bool, or Outcome for quasi-identities.
template <std::size_t N, class Pred>
AxiomResult check_law(std::string label, std::string title, const std::array<Var, N>& vars,
                      Pred&& pred) {
  AxiomResult result;
  result.label = std::move(label);
  result.title = std::move(title);
  std::array<ElemId, N> at{};
  for (const Var& v : vars) {
    if (v.carrier->empty()) return result;
  }
  while (true) {
    ++result.checked;
    Outcome outcome;
    if constexpr (std::is_same_v<std::invoke_result_t<Pred&, const std::array<ElemId, N>&>, bool>) {
      outcome = pred(at) ? Outcome::holds : Outcome::fails;
    } else {
      outcome = pred(at);
    }
    if (outcome == Outcome::vacuous) {
      ++result.vacuous;
    } else if (outcome == Outcome::fails) {
      result.passed = false;
      Witness w;
      for (std::size_t i = 0; i < N; ++i) {
        w.bindings.emplace_back(vars[i].name, (*vars[i].carrier)[at[i]]);
      }
      result.witness = std::move(w);
      return result;
    }
    bool advanced = false;
    for (std::size_t i = N; i-- > 0;) {
      if (++at[i] < vars[i].carrier->size()) {
        advanced = true;
        break;
      }
      at[i] = 0;
    }
    if (!advanced) return result;
  }
}

}  // namespace cmon::detail
