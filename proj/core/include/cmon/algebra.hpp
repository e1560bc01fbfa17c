#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cmon/caps.hpp"
#include "cmon/report.hpp"

namespace cmon {

/// Index into a carrier's ordered element list.
using ElemId = std::uint32_t;

using Names = std::vector<std::string>;

/// Finite algebra <M, or, and, neg> with designated T, F, U, given by total
/// tables. Binary tables are row-major: and_table[a * size() + b].
/// The C-algebra laws are not assumed; see check_c_algebra.
struct CAlgebra {
  Names elements;
  std::vector<ElemId> neg_table;
  std::vector<ElemId> and_table;
  std::vector<ElemId> or_table;
  ElemId t = 0;
  ElemId f = 0;
  ElemId u = 0;

  std::size_t size() const { return elements.size(); }
  ElemId neg(ElemId a) const { return neg_table[a]; }
  ElemId conj(ElemId a, ElemId b) const { return and_table[a * size() + b]; }
  ElemId disj(ElemId a, ElemId b) const { return or_table[a * size() + b]; }
  std::optional<ElemId> find(std::string_view name) const;

  /// Throws StructuralError naming the first offending row or entry.
  void validate() const;

  friend bool operator==(const CAlgebra&, const CAlgebra&) = default;
};

/// A C-algebra with a halting oracle (postfix "down").
struct Ada {
  CAlgebra base;
  std::vector<ElemId> down_table;

  std::size_t size() const { return base.size(); }
  ElemId down(ElemId a) const { return down_table[a]; }
  void validate() const;

  friend bool operator==(const Ada&, const Ada&) = default;
};

/// Boolean algebra of halting tests.
struct BoolAlg {
  Names elements;
  std::vector<ElemId> neg_table;
  std::vector<ElemId> and_table;
  std::vector<ElemId> or_table;
  ElemId t = 0;
  ElemId f = 0;

  std::size_t size() const { return elements.size(); }
  ElemId neg(ElemId a) const { return neg_table[a]; }
  ElemId conj(ElemId a, ElemId b) const { return and_table[a * size() + b]; }
  ElemId disj(ElemId a, ElemId b) const { return or_table[a * size() + b]; }
  std::optional<ElemId> find(std::string_view name) const;
  void validate() const;

  friend bool operator==(const BoolAlg&, const BoolAlg&) = default;
};

/// McCarthy's three-valued logic as an ada. Element order is T, F, U.
Ada mk_three();

/// The two-element Boolean algebra, element order T, F.
BoolAlg mk_two();

/// 3^X over a ground set of `x_size` points, with operations computed on
/// pairs of sets. Element i is the map whose letters (x0 first) spell
/// the base-3 digits of i with T=0, F=1, U=2.
Ada power_ada(std::size_t x_size, const SizeCaps& caps = default_caps());

/// 2^X with pointwise operations; element order mirrors power_ada.
BoolAlg power_bool(std::size_t x_size, const SizeCaps& caps = default_caps());

/// C1-C7, each with the first failing (alpha, beta, gamma) in index order.
AxiomReport check_c_algebra(const CAlgebra& alg);

/// check_c_algebra on the base, the constant laws for T, F, U, then A1-A6.
AxiomReport check_ada(const Ada& alg);

/// Standard Boolean algebra identities.
AxiomReport check_bool(const BoolAlg& alg);

/// The constant laws of a "C-algebra with T, F, U": T is a two-sided
/// identity for and, F for or, and U is fixed by neg.
AxiomReport check_tfu_constants(const CAlgebra& alg);

/// alpha[[beta, gamma]] = (alpha and beta) or (not alpha and gamma).
ElemId mm_action(const CAlgebra& m, ElemId alpha, ElemId beta, ElemId gamma);

}  // namespace cmon
