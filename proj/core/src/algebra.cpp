#include "cmon/algebra.hpp"

#include <set>

#include "cmon/detail/sweep.hpp"
#include "cmon/error.hpp"
#include "cmon/pairs.hpp"

namespace cmon {
namespace {

using detail::check_law;
using detail::Var;
using A1 = std::array<ElemId, 1>;
using A2 = std::array<ElemId, 2>;
using A3 = std::array<ElemId, 3>;

std::optional<ElemId> find_name(const Names& names, std::string_view name) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<ElemId>(i);
  }
  return std::nullopt;
}

void validate_names(const Names& names, const char* what) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty()) throw StructuralError(std::string(what) + ": empty element name");
    if (!seen.insert(n).second) {
      throw StructuralError(std::string(what) + ": duplicate element '" + n + "'");
    }
  }
}

void validate_unary(const std::vector<ElemId>& table, std::size_t n, const char* what) {
  if (table.size() != n) {
    throw StructuralError(std::string(what) + " table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i] >= n) {
      throw StructuralError(std::string(what) + " table: entry " + std::to_string(i) +
                            " out of range");
    }
  }
}

void validate_binary(const std::vector<ElemId>& table, std::size_t n, const char* what) {
  if (table.size() != n * n) {
    throw StructuralError(std::string(what) + " table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(n * n));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= n) {
      throw StructuralError(std::string(what) + " table: row " + std::to_string(i / n) +
                            ", column " + std::to_string(i % n) + " out of range");
    }
  }
}

void validate_constant(ElemId c, std::size_t n, const char* what) {
  if (c >= n) throw StructuralError(std::string("constant ") + what + " out of range");
}

}  // namespace

std::optional<ElemId> CAlgebra::find(std::string_view name) const {
  return find_name(elements, name);
}

void CAlgebra::validate() const {
  const std::size_t n = size();
  if (n == 0) throw StructuralError("C-algebra: empty carrier");
  validate_names(elements, "C-algebra");
  validate_unary(neg_table, n, "neg");
  validate_binary(and_table, n, "and");
  validate_binary(or_table, n, "or");
  validate_constant(t, n, "T");
  validate_constant(f, n, "F");
  validate_constant(u, n, "U");
  if (n > 1 && (t == f || t == u || f == u)) {
    throw StructuralError("C-algebra: T, F, U must be pairwise distinct");
  }
}

void Ada::validate() const {
  base.validate();
  validate_unary(down_table, base.size(), "down");
}

std::optional<ElemId> BoolAlg::find(std::string_view name) const {
  return find_name(elements, name);
}

void BoolAlg::validate() const {
  const std::size_t n = size();
  if (n == 0) throw StructuralError("Boolean algebra: empty carrier");
  validate_names(elements, "Boolean algebra");
  validate_unary(neg_table, n, "neg");
  validate_binary(and_table, n, "and");
  validate_binary(or_table, n, "or");
  validate_constant(t, n, "T");
  validate_constant(f, n, "F");
  if (n > 1 && t == f) throw StructuralError("Boolean algebra: T and F coincide");
}

Ada mk_three() {
  constexpr ElemId T = 0, F = 1, U = 2;
  Ada a;
  a.base.elements = {"T", "F", "U"};
  a.base.neg_table = {F, T, U};
  a.base.and_table = {T, F, U,  //
                      F, F, F,  //
                      U, U, U};
  a.base.or_table = {T, T, T,  //
                     T, F, U,  //
                     U, U, U};
  a.base.t = T;
  a.base.f = F;
  a.base.u = U;
  a.down_table = {T, F, F};
  return a;
}

BoolAlg mk_two() {
  constexpr ElemId T = 0, F = 1;
  BoolAlg b;
  b.elements = {"T", "F"};
  b.neg_table = {F, T};
  b.and_table = {T, F, F, F};
  b.or_table = {T, T, T, F};
  b.t = T;
  b.f = F;
  return b;
}

Ada power_ada(std::size_t x_size, const SizeCaps& caps) {
  if (x_size > caps.max_x) {
    throw SizeCapError("power ada: ground set of " + std::to_string(x_size) +
                       " points exceeds cap " + std::to_string(caps.max_x));
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < x_size; ++i) {
    n *= 3;
    require_carrier(n, caps, "power ada");
  }
  std::vector<PairOfSets> carrier;
  carrier.reserve(n);
  Ada a;
  for (std::size_t i = 0; i < n; ++i) {
    carrier.push_back(pair_at_index(x_size, static_cast<ElemId>(i)));
    a.base.elements.push_back(pair_name(carrier.back()));
  }
  a.base.neg_table.resize(n);
  a.down_table.resize(n);
  a.base.and_table.resize(n * n);
  a.base.or_table.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a.base.neg_table[i] = pair_index(pair_neg(carrier[i]));
    a.down_table[i] = pair_index(pair_down(carrier[i]));
    for (std::size_t j = 0; j < n; ++j) {
      a.base.and_table[i * n + j] = pair_index(pair_and(carrier[i], carrier[j]));
      a.base.or_table[i * n + j] = pair_index(pair_or(carrier[i], carrier[j]));
    }
  }
  a.base.t = pair_index(pair_const(x_size, Tri::T));
  a.base.f = pair_index(pair_const(x_size, Tri::F));
  a.base.u = pair_index(pair_const(x_size, Tri::U));
  return a;
}

BoolAlg power_bool(std::size_t x_size, const SizeCaps& caps) {
  if (x_size > caps.max_x) {
    throw SizeCapError("power Boolean algebra: ground set of " + std::to_string(x_size) +
                       " points exceeds cap " + std::to_string(caps.max_x));
  }
  const std::size_t n = std::size_t{1} << x_size;
  require_carrier(n, caps, "power Boolean algebra");
  // Bit (x_size - 1 - x) of an index is set when point x is F.
  BoolAlg b;
  const ElemId mask = static_cast<ElemId>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    std::string name = x_size == 0 ? "e" : "";
    for (std::size_t x = 0; x < x_size; ++x) {
      name += ((i >> (x_size - 1 - x)) & 1U) ? 'F' : 'T';
    }
    b.elements.push_back(name);
  }
  b.neg_table.resize(n);
  b.and_table.resize(n * n);
  b.or_table.resize(n * n);
  for (ElemId i = 0; i < n; ++i) {
    b.neg_table[i] = ~i & mask;
    for (ElemId j = 0; j < n; ++j) {
      b.and_table[i * n + j] = i | j;
      b.or_table[i * n + j] = i & j;
    }
  }
  b.t = 0;
  b.f = mask;
  return b;
}

ElemId mm_action(const CAlgebra& m, ElemId alpha, ElemId beta, ElemId gamma) {
  return m.disj(m.conj(alpha, beta), m.conj(m.neg(alpha), gamma));
}

AxiomReport check_c_algebra(const CAlgebra& m) {
  m.validate();
  const Names* e = &m.elements;
  const std::array<Var, 1> v1{{{"%a", e}}};
  const std::array<Var, 2> v2{{{"%a", e}, {"%b", e}}};
  const std::array<Var, 3> v3{{{"%a", e}, {"%b", e}, {"%c", e}}};
  AxiomReport r;
  r.add(check_law("C1", "double negation", v1,
                  [&](const A1& x) { return m.neg(m.neg(x[0])) == x[0]; }));
  r.add(check_law("C2", "De Morgan", v2, [&](const A2& x) {
    return m.neg(m.conj(x[0], x[1])) == m.disj(m.neg(x[0]), m.neg(x[1]));
  }));
  r.add(check_law("C3", "and-associativity", v3, [&](const A3& x) {
    return m.conj(m.conj(x[0], x[1]), x[2]) == m.conj(x[0], m.conj(x[1], x[2]));
  }));
  r.add(check_law("C4", "left distributivity", v3, [&](const A3& x) {
    return m.conj(x[0], m.disj(x[1], x[2])) ==
           m.disj(m.conj(x[0], x[1]), m.conj(x[0], x[2]));
  }));
  r.add(check_law("C5", "right distributivity", v3, [&](const A3& x) {
    return m.conj(m.disj(x[0], x[1]), x[2]) ==
           m.disj(m.conj(x[0], x[2]), m.conj(m.conj(m.neg(x[0]), x[1]), x[2]));
  }));
  r.add(check_law("C6", "absorption", v2, [&](const A2& x) {
    return m.disj(x[0], m.conj(x[0], x[1])) == x[0];
  }));
  r.add(check_law("C7", "and-or commutation", v2, [&](const A2& x) {
    return m.disj(m.conj(x[0], x[1]), m.conj(x[1], x[0])) ==
           m.disj(m.conj(x[1], x[0]), m.conj(x[0], x[1]));
  }));
  return r;
}

AxiomReport check_tfu_constants(const CAlgebra& m) {
  m.validate();
  const std::array<Var, 1> v1{{{"%a", &m.elements}}};
  AxiomReport r;
  r.add(check_law("TFU-T", "T is an identity for and", v1, [&](const A1& x) {
    return m.conj(m.t, x[0]) == x[0] && m.conj(x[0], m.t) == x[0];
  }));
  r.add(check_law("TFU-F", "F is an identity for or", v1, [&](const A1& x) {
    return m.disj(m.f, x[0]) == x[0] && m.disj(x[0], m.f) == x[0];
  }));
  r.add(check_law("TFU-U", "U is fixed by neg", std::array<Var, 0>{},
                  [&](const std::array<ElemId, 0>&) { return m.neg(m.u) == m.u; }));
  return r;
}

AxiomReport check_ada(const Ada& alg) {
  alg.validate();
  const CAlgebra& m = alg.base;
  AxiomReport r = check_c_algebra(m);
  r.append(check_tfu_constants(m));
  const std::array<Var, 0> v0{};
  const std::array<Var, 1> v1{{{"%a", &m.elements}}};
  const std::array<Var, 2> v2{{{"%a", &m.elements}, {"%b", &m.elements}}};
  using A0 = std::array<ElemId, 0>;
  r.add(check_law("A1", "F down", v0, [&](const A0&) { return alg.down(m.f) == m.f; }));
  r.add(check_law("A2", "U down", v0, [&](const A0&) { return alg.down(m.u) == m.f; }));
  r.add(check_law("A3", "T down", v0, [&](const A0&) { return alg.down(m.t) == m.t; }));
  r.add(check_law("A4", "down under and", v2, [&](const A2& x) {
    return m.conj(x[0], alg.down(x[1])) == m.conj(x[0], alg.down(m.conj(x[0], x[1])));
  }));
  r.add(check_law("A5", "down is halting", v1, [&](const A1& x) {
    return m.disj(alg.down(x[0]), m.neg(alg.down(x[0]))) == m.t;
  }));
  r.add(check_law("A6", "down below", v1, [&](const A1& x) {
    return x[0] == m.disj(alg.down(x[0]), x[0]);
  }));
  return r;
}

AxiomReport check_bool(const BoolAlg& b) {
  b.validate();
  const Names* e = &b.elements;
  const std::array<Var, 1> v1{{{"%a", e}}};
  const std::array<Var, 2> v2{{{"%a", e}, {"%b", e}}};
  const std::array<Var, 3> v3{{{"%a", e}, {"%b", e}, {"%c", e}}};
  AxiomReport r;
  r.add(check_law("and-comm", "", v2,
                  [&](const A2& x) { return b.conj(x[0], x[1]) == b.conj(x[1], x[0]); }));
  r.add(check_law("or-comm", "", v2,
                  [&](const A2& x) { return b.disj(x[0], x[1]) == b.disj(x[1], x[0]); }));
  r.add(check_law("and-assoc", "", v3, [&](const A3& x) {
    return b.conj(b.conj(x[0], x[1]), x[2]) == b.conj(x[0], b.conj(x[1], x[2]));
  }));
  r.add(check_law("or-assoc", "", v3, [&](const A3& x) {
    return b.disj(b.disj(x[0], x[1]), x[2]) == b.disj(x[0], b.disj(x[1], x[2]));
  }));
  r.add(check_law("and-absorb", "", v2,
                  [&](const A2& x) { return b.conj(x[0], b.disj(x[0], x[1])) == x[0]; }));
  r.add(check_law("or-absorb", "", v2,
                  [&](const A2& x) { return b.disj(x[0], b.conj(x[0], x[1])) == x[0]; }));
  r.add(check_law("and-distrib", "", v3, [&](const A3& x) {
    return b.conj(x[0], b.disj(x[1], x[2])) == b.disj(b.conj(x[0], x[1]), b.conj(x[0], x[2]));
  }));
  r.add(check_law("or-distrib", "", v3, [&](const A3& x) {
    return b.disj(x[0], b.conj(x[1], x[2])) == b.conj(b.disj(x[0], x[1]), b.disj(x[0], x[2]));
  }));
  r.add(check_law("and-ident", "", v1, [&](const A1& x) { return b.conj(x[0], b.t) == x[0]; }));
  r.add(check_law("or-ident", "", v1, [&](const A1& x) { return b.disj(x[0], b.f) == x[0]; }));
  r.add(check_law("and-compl", "", v1,
                  [&](const A1& x) { return b.conj(x[0], b.neg(x[0])) == b.f; }));
  r.add(check_law("or-compl", "", v1,
                  [&](const A1& x) { return b.disj(x[0], b.neg(x[0])) == b.t; }));
  return r;
}

}  // namespace cmon
