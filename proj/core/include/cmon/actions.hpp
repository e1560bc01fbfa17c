#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "cmon/algebra.hpp"
#include "cmon/caps.hpp"
#include "cmon/report.hpp"

namespace cmon {

/// A pointed set S_bot, optionally a monoid with identity `one` in which
/// `bot` is a two-sided zero.
struct PointedCarrier {
  Names elements;
  ElemId bot = 0;
  std::optional<ElemId> one;
  std::optional<std::vector<ElemId>> mul;

  std::size_t size() const { return elements.size(); }
  ElemId times(ElemId s, ElemId t) const { return (*mul)[s * size() + t]; }
  std::optional<ElemId> find(std::string_view name) const;
  void validate() const;

  friend bool operator==(const PointedCarrier&, const PointedCarrier&) = default;
};

/// Tests of a C-set: a bare C-algebra, or an ada.
using TestAlgebra = std::variant<CAlgebra, Ada>;

const CAlgebra& c_algebra_of(const TestAlgebra& m);
/// Null when the tests carry no halting oracle.
const Ada* ada_of(const TestAlgebra& m);

/// "if alpha then s else t" over S_bot. act[(alpha * |S| + s) * |S| + t].
struct CSet {
  PointedCarrier s;
  TestAlgebra m;
  std::vector<ElemId> act;

  const CAlgebra& tests() const { return c_algebra_of(m); }
  ElemId apply(ElemId alpha, ElemId s1, ElemId s2) const {
    return act[(static_cast<std::size_t>(alpha) * s.size() + s1) * s.size() + s2];
  }
  void validate() const;

  friend bool operator==(const CSet&, const CSet&) = default;
};

/// A C-set over a monoid with zero, plus s o alpha stored as comp[s * |M| + alpha].
struct CMonoid {
  CSet base;
  std::vector<ElemId> comp;

  const PointedCarrier& programs() const { return base.s; }
  const CAlgebra& tests() const { return base.tests(); }
  ElemId one() const { return *base.s.one; }
  ElemId bot() const { return base.s.bot; }
  ElemId times(ElemId s, ElemId t) const { return base.s.times(s, t); }
  ElemId apply(ElemId alpha, ElemId s, ElemId t) const { return base.apply(alpha, s, t); }
  ElemId compose(ElemId s, ElemId alpha) const { return comp[s * tests().size() + alpha]; }
  void validate() const;

  friend bool operator==(const CMonoid&, const CMonoid&) = default;
};

/// Boolean-test baseline: S with an action of a Boolean algebra.
struct BSet {
  Names elements;
  BoolAlg q;
  std::vector<ElemId> act;

  std::size_t size() const { return elements.size(); }
  ElemId apply(ElemId alpha, ElemId s, ElemId t) const {
    return act[(static_cast<std::size_t>(alpha) * size() + s) * size() + t];
  }
  void validate() const;

  friend bool operator==(const BSet&, const BSet&) = default;
};

struct BMonoid {
  BSet base;
  ElemId one = 0;
  std::vector<ElemId> mul;
  std::vector<ElemId> comp;

  ElemId times(ElemId s, ElemId t) const { return mul[s * base.size() + t]; }
  ElemId compose(ElemId s, ElemId alpha) const { return comp[s * base.q.size() + alpha]; }
  void validate() const;

  friend bool operator==(const BMonoid&, const BMonoid&) = default;
};

/// Associativity, two-sided identity, two-sided zero.
AxiomReport check_pointed_monoid(const PointedCarrier& s);

/// Test-algebra laws, then EC1-EC8 (EC8 as a quasi-identity).
AxiomReport check_c_set(const CSet& cs);

/// Monoid-with-zero laws, check_c_set on the base, then EM1-EM9.
AxiomReport check_c_monoid(const CMonoid& cm);

AxiomReport check_b_set(const BSet& bs);
AxiomReport check_b_monoid(const BMonoid& bm);

/// The C-set (M, M) under mm_action, with base point U.
CSet mm_c_set(const TestAlgebra& m);

/// Base-fixing self-maps of X_bot acting with 3^X.
CSet functional_c_set(std::size_t x_size, const SizeCaps& caps = default_caps());
CMonoid functional_c_monoid(std::size_t x_size, const SizeCaps& caps = default_caps());

/// (S_bot, 3) with T picking the first branch, F the second, U giving bot.
CMonoid basic_c_monoid(const PointedCarrier& s);

/// (S_bot^X, 3^X) with pointwise multiplication.
CMonoid pointwise_c_monoid(const PointedCarrier& s, std::size_t x_size,
                           const SizeCaps& caps = default_caps());

/// (T(X), 2^X) with left-to-right composition.
BMonoid functional_b_monoid(std::size_t x_size, const SizeCaps& caps = default_caps());

/// Monoid on `names` with the given identity and zero; every other product
/// of non-identity, non-zero elements s . t is t.
PointedCarrier band_monoid(const Names& names, ElemId one, ElemId bot);
/// {1, bot}
PointedCarrier monoid_one_bot();
/// {1, a, bot} with a . a = a
PointedCarrier monoid_one_a_bot();

/// Throws StructuralError unless `s` is a non-trivial monoid with zero and
/// no non-zero zero-divisors; the message names the offending pair.
void require_monoid_without_zero_divisors(const PointedCarrier& s);

}  // namespace cmon
