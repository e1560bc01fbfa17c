#include "cmon/actions.hpp"

#include <set>

#include "cmon/detail/sweep.hpp"
#include "cmon/error.hpp"
#include "cmon/functional.hpp"
#include "cmon/pairs.hpp"

namespace cmon {
namespace {

using detail::check_law;
using detail::Outcome;
using detail::Var;
template <std::size_t N>
using At = std::array<ElemId, N>;

void check_table(const std::vector<ElemId>& table, std::size_t entries, std::size_t range,
                 const char* what) {
  if (table.size() != entries) {
    throw StructuralError(std::string(what) + " table has " + std::to_string(table.size()) +
                          " entries, expected " + std::to_string(entries));
  }
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] >= range) {
      throw StructuralError(std::string(what) + " table: entry " + std::to_string(i) +
                            " out of range");
    }
  }
}

void check_names(const Names& names, const char* what) {
  if (names.empty()) throw StructuralError(std::string(what) + ": empty carrier");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (n.empty() || !seen.insert(n).second) {
      throw StructuralError(std::string(what) + ": empty or duplicate element '" + n + "'");
    }
  }
}

std::size_t checked_power(std::size_t base, std::size_t exponent, const SizeCaps& caps,
                          const char* what) {
  std::size_t n = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    n *= base;
    require_carrier(n, caps, what);
  }
  return n;
}

void require_x(std::size_t x_size, const SizeCaps& caps, const char* what) {
  if (x_size == 0) throw StructuralError(std::string(what) + ": ground set must be non-empty");
  if (x_size > caps.max_x) {
    throw SizeCapError(std::string(what) + ": ground set of " + std::to_string(x_size) +
                       " points exceeds cap " + std::to_string(caps.max_x));
  }
}

AxiomReport test_algebra_report(const TestAlgebra& m) {
  if (const Ada* ada = ada_of(m)) return check_ada(*ada);
  AxiomReport r = check_c_algebra(c_algebra_of(m));
  r.append(check_tfu_constants(c_algebra_of(m)));
  return r;
}

}  // namespace

std::optional<ElemId> PointedCarrier::find(std::string_view name) const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] == name) return static_cast<ElemId>(i);
  }
  return std::nullopt;
}

void PointedCarrier::validate() const {
  check_names(elements, "program carrier");
  if (bot >= size()) throw StructuralError("program carrier: bot out of range");
  if (one && *one >= size()) throw StructuralError("program carrier: identity out of range");
  if (mul) check_table(*mul, size() * size(), size(), "mul");
}

const CAlgebra& c_algebra_of(const TestAlgebra& m) {
  if (const auto* ada = std::get_if<Ada>(&m)) return ada->base;
  return std::get<CAlgebra>(m);
}

const Ada* ada_of(const TestAlgebra& m) { return std::get_if<Ada>(&m); }

void CSet::validate() const {
  s.validate();
  if (const Ada* ada = ada_of(m)) {
    ada->validate();
  } else {
    tests().validate();
  }
  check_table(act, tests().size() * s.size() * s.size(), s.size(), "action");
}

void CMonoid::validate() const {
  base.validate();
  if (!base.s.one || !base.s.mul) throw StructuralError("C-monoid: missing monoid structure");
  check_table(comp, programs().size() * tests().size(), tests().size(), "composition");
}

void BSet::validate() const {
  check_names(elements, "B-set carrier");
  q.validate();
  check_table(act, q.size() * size() * size(), size(), "action");
}

void BMonoid::validate() const {
  base.validate();
  if (one >= base.size()) throw StructuralError("B-monoid: identity out of range");
  check_table(mul, base.size() * base.size(), base.size(), "mul");
  check_table(comp, base.size() * base.q.size(), base.q.size(), "composition");
}

AxiomReport check_pointed_monoid(const PointedCarrier& s) {
  s.validate();
  if (!s.mul || !s.one) throw StructuralError("program carrier: missing monoid structure");
  const Names* e = &s.elements;
  const ElemId one = *s.one;
  AxiomReport r;
  r.add(check_law("mon-assoc", "associativity", std::array<Var, 3>{{{"s", e}, {"t", e}, {"u", e}}},
                  [&](const At<3>& x) {
                    return s.times(s.times(x[0], x[1]), x[2]) == s.times(x[0], s.times(x[1], x[2]));
                  }));
  r.add(check_law("mon-one", "two-sided identity", std::array<Var, 1>{{{"s", e}}},
                  [&](const At<1>& x) {
                    return s.times(one, x[0]) == x[0] && s.times(x[0], one) == x[0];
                  }));
  r.add(check_law("mon-zero", "two-sided zero", std::array<Var, 1>{{{"s", e}}},
                  [&](const At<1>& x) {
                    return s.times(s.bot, x[0]) == s.bot && s.times(x[0], s.bot) == s.bot;
                  }));
  return r;
}

AxiomReport check_c_set(const CSet& cs) {
  cs.validate();
  AxiomReport r = test_algebra_report(cs.m);
  const CAlgebra& m = cs.tests();
  const Names* S = &cs.s.elements;
  const Names* M = &m.elements;
  const ElemId bot = cs.s.bot;
  auto act = [&](ElemId a, ElemId s, ElemId t) { return cs.apply(a, s, t); };

  r.add(check_law("EC1", "U-axiom", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) { return act(m.u, x[0], x[1]) == bot; }));
  r.add(check_law("EC2", "premise interchange",
                  std::array<Var, 6>{{{"s", S}, {"t", S}, {"u", S}, {"v", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<6>& x) {
                    const ElemId a = x[4], b = x[5];
                    return act(a, act(b, x[0], x[1]), act(b, x[2], x[3])) ==
                           act(b, act(a, x[0], x[2]), act(a, x[1], x[3]));
                  }));
  r.add(check_law("EC3", "positive redundancy",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return act(x[3], act(x[3], x[0], x[1]), x[2]) == act(x[3], x[0], x[2]);
                  }));
  r.add(check_law("EC4", "negative redundancy",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return act(x[3], x[0], act(x[3], x[1], x[2])) == act(x[3], x[0], x[2]);
                  }));
  r.add(check_law("EC5", "neg-axiom", std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", M}}},
                  [&](const At<3>& x) {
                    return act(m.neg(x[2]), x[0], x[1]) == act(x[2], x[1], x[0]);
                  }));
  r.add(check_law("EC6", "F-axiom", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) { return act(m.f, x[0], x[1]) == x[1]; }));
  r.add(check_law("EC7", "and-axiom",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<4>& x) {
                    return act(m.conj(x[2], x[3]), x[0], x[1]) ==
                           act(x[2], act(x[3], x[0], x[1]), x[1]);
                  }));
  r.add(check_law("EC8", "and-compatibility",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<4>& x) {
                    const ElemId a = x[2], ab = m.conj(x[2], x[3]);
                    if (act(a, x[0], x[1]) != act(a, x[1], x[1])) return Outcome::vacuous;
                    return act(ab, x[0], x[1]) == act(ab, x[1], x[1]) ? Outcome::holds
                                                                      : Outcome::fails;
                  }));
  return r;
}

AxiomReport check_c_monoid(const CMonoid& cm) {
  cm.validate();
  AxiomReport r = check_pointed_monoid(cm.programs());
  r.append(check_c_set(cm.base));
  const CAlgebra& m = cm.tests();
  const Names* S = &cm.programs().elements;
  const Names* M = &m.elements;
  auto act = [&](ElemId a, ElemId s, ElemId t) { return cm.apply(a, s, t); };
  auto mul = [&](ElemId s, ElemId t) { return cm.times(s, t); };
  auto comp = [&](ElemId s, ElemId a) { return cm.compose(s, a); };

  r.add(check_law("EM1", "1-o-axiom", std::array<Var, 1>{{{"%a", M}}},
                  [&](const At<1>& x) { return comp(cm.one(), x[0]) == x[0]; }));
  r.add(check_law("EM2", "semigroup action", std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", M}}},
                  [&](const At<3>& x) {
                    return comp(mul(x[0], x[1]), x[2]) == comp(x[0], comp(x[1], x[2]));
                  }));
  r.add(check_law("EM3", "and-o-axiom", std::array<Var, 3>{{{"s", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<3>& x) {
                    return comp(x[0], m.conj(x[1], x[2])) ==
                           m.conj(comp(x[0], x[1]), comp(x[0], x[2]));
                  }));
  r.add(check_law("EM4", "neg-o-axiom", std::array<Var, 2>{{{"s", S}, {"%a", M}}},
                  [&](const At<2>& x) {
                    return comp(x[0], m.neg(x[1])) == m.neg(comp(x[0], x[1]));
                  }));
  r.add(check_law("EM5", "right composition",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return mul(act(x[3], x[0], x[1]), x[2]) ==
                           act(x[3], mul(x[0], x[2]), mul(x[1], x[2]));
                  }));
  r.add(check_law("EM6", "o-interchange",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<4>& x) {
                    return comp(act(x[2], x[0], x[1]), x[3]) ==
                           mm_action(m, x[2], comp(x[0], x[3]), comp(x[1], x[3]));
                  }));
  r.add(check_law("EM7", "bot-o-axiom", std::array<Var, 1>{{{"%a", M}}},
                  [&](const At<1>& x) { return comp(cm.bot(), x[0]) == m.u; }));
  r.add(check_law("EM8", "U-o-axiom", std::array<Var, 1>{{{"t", S}}},
                  [&](const At<1>& x) { return comp(x[0], m.u) == m.u; }));
  r.add(check_law("EM9", "left composition",
                  std::array<Var, 4>{{{"r", S}, {"s", S}, {"t", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return mul(x[0], act(x[3], x[1], x[2])) ==
                           act(comp(x[0], x[3]), mul(x[0], x[1]), mul(x[0], x[2]));
                  }));
  return r;
}

AxiomReport check_b_set(const BSet& bs) {
  bs.validate();
  AxiomReport r = check_bool(bs.q);
  const BoolAlg& q = bs.q;
  const Names* S = &bs.elements;
  const Names* Q = &q.elements;
  auto act = [&](ElemId a, ElemId s, ElemId t) { return bs.apply(a, s, t); };
  r.add(check_law("B1", "idempotence", std::array<Var, 2>{{{"s", S}, {"%a", Q}}},
                  [&](const At<2>& x) { return act(x[1], x[0], x[0]) == x[0]; }));
  r.add(check_law("B2", "positive redundancy",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", Q}}},
                  [&](const At<4>& x) {
                    return act(x[3], act(x[3], x[0], x[1]), x[2]) == act(x[3], x[0], x[2]);
                  }));
  r.add(check_law("B3", "negative redundancy",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", Q}}},
                  [&](const At<4>& x) {
                    return act(x[3], x[0], act(x[3], x[1], x[2])) == act(x[3], x[0], x[2]);
                  }));
  r.add(check_law("B4", "F-axiom", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) { return act(q.f, x[0], x[1]) == x[1]; }));
  r.add(check_law("B5", "neg-axiom", std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", Q}}},
                  [&](const At<3>& x) {
                    return act(q.neg(x[2]), x[0], x[1]) == act(x[2], x[1], x[0]);
                  }));
  r.add(check_law("B6", "and-axiom",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"%a", Q}, {"%b", Q}}},
                  [&](const At<4>& x) {
                    return act(q.conj(x[2], x[3]), x[0], x[1]) ==
                           act(x[2], act(x[3], x[0], x[1]), x[1]);
                  }));
  return r;
}

AxiomReport check_b_monoid(const BMonoid& bm) {
  bm.validate();
  const Names* S = &bm.base.elements;
  const BoolAlg& q = bm.base.q;
  const Names* Q = &q.elements;
  auto act = [&](ElemId a, ElemId s, ElemId t) { return bm.base.apply(a, s, t); };
  auto mul = [&](ElemId s, ElemId t) { return bm.times(s, t); };
  auto comp = [&](ElemId s, ElemId a) { return bm.compose(s, a); };
  AxiomReport r;
  r.add(check_law("mon-assoc", "associativity",
                  std::array<Var, 3>{{{"s", S}, {"t", S}, {"u", S}}}, [&](const At<3>& x) {
                    return mul(mul(x[0], x[1]), x[2]) == mul(x[0], mul(x[1], x[2]));
                  }));
  r.add(check_law("mon-one", "two-sided identity", std::array<Var, 1>{{{"s", S}}},
                  [&](const At<1>& x) {
                    return mul(bm.one, x[0]) == x[0] && mul(x[0], bm.one) == x[0];
                  }));
  r.append(check_b_set(bm.base));
  r.add(check_law("BM1", "o-T", std::array<Var, 1>{{{"s", S}}},
                  [&](const At<1>& x) { return comp(x[0], q.t) == q.t; }));
  r.add(check_law("BM2", "o-and", std::array<Var, 3>{{{"s", S}, {"%a", Q}, {"%b", Q}}},
                  [&](const At<3>& x) {
                    return q.conj(comp(x[0], x[1]), comp(x[0], x[2])) ==
                           comp(x[0], q.conj(x[1], x[2]));
                  }));
  r.add(check_law("BM3", "o-neg", std::array<Var, 2>{{{"s", S}, {"%a", Q}}},
                  [&](const At<2>& x) {
                    return comp(x[0], q.neg(x[1])) == q.neg(comp(x[0], x[1]));
                  }));
  r.add(check_law("BM4", "semigroup action", std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", Q}}},
                  [&](const At<3>& x) {
                    return comp(x[0], comp(x[1], x[2])) == comp(mul(x[0], x[1]), x[2]);
                  }));
  r.add(check_law("BM5", "right composition",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", Q}}},
                  [&](const At<4>& x) {
                    return mul(act(x[3], x[0], x[1]), x[2]) ==
                           act(x[3], mul(x[0], x[2]), mul(x[1], x[2]));
                  }));
  r.add(check_law("BM6", "left composition",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", Q}}},
                  [&](const At<4>& x) {
                    return mul(x[0], act(x[3], x[1], x[2])) ==
                           act(comp(x[0], x[3]), mul(x[0], x[1]), mul(x[0], x[2]));
                  }));
  r.add(check_law("BM7", "o-interchange",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"%a", Q}, {"%b", Q}}},
                  [&](const At<4>& x) {
                    const ElemId a = x[2], b = x[3];
                    return comp(act(b, x[0], x[1]), a) ==
                           q.disj(q.conj(b, comp(x[0], a)), q.conj(q.neg(b), comp(x[1], a)));
                  }));
  r.add(check_law("BM8", "1-o", std::array<Var, 1>{{{"%a", Q}}},
                  [&](const At<1>& x) { return comp(bm.one, x[0]) == x[0]; }));
  return r;
}

CSet mm_c_set(const TestAlgebra& m) {
  const CAlgebra& alg = c_algebra_of(m);
  alg.validate();
  const std::size_t n = alg.size();
  CSet cs;
  cs.s.elements = alg.elements;
  cs.s.bot = alg.u;
  cs.m = m;
  cs.act.resize(n * n * n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      for (ElemId c = 0; c < n; ++c) cs.act[(a * n + b) * n + c] = mm_action(alg, a, b, c);
    }
  }
  return cs;
}

CSet functional_c_set(std::size_t x_size, const SizeCaps& caps) {
  CSet cs = functional_c_monoid(x_size, caps).base;
  cs.s.one.reset();
  cs.s.mul.reset();
  return cs;
}

CMonoid functional_c_monoid(std::size_t x_size, const SizeCaps& caps) {
  require_x(x_size, caps, "functional C-monoid");
  const std::size_t n = checked_power(x_size + 1, x_size, caps, "functional C-monoid");
  Ada tests = power_ada(x_size, caps);
  const std::size_t m = tests.size();

  std::vector<PointedSelfMap> maps;
  std::vector<PairOfSets> pairs;
  CMonoid cm;
  PointedCarrier& s = cm.base.s;
  for (std::size_t i = 0; i < n; ++i) {
    maps.push_back(map_at_index(x_size, static_cast<std::uint32_t>(i)));
    s.elements.push_back(map_name(maps.back()));
  }
  for (std::size_t i = 0; i < m; ++i) pairs.push_back(pair_at_index(x_size, static_cast<std::uint32_t>(i)));
  s.bot = map_index(zero_map(x_size));
  s.one = map_index(identity_map(x_size));
  s.mul.emplace(n * n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) (*s.mul)[f * n + g] = map_index(compose_lr(maps[f], maps[g]));
  }
  cm.base.act.resize(m * n * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        cm.base.act[(a * n + f) * n + g] = map_index(functional_act(pairs[a], maps[f], maps[g]));
      }
    }
  }
  cm.comp.resize(n * m);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t a = 0; a < m; ++a) cm.comp[f * m + a] = pair_index(functional_comp(maps[f], pairs[a]));
  }
  cm.base.m = std::move(tests);
  return cm;
}

void require_monoid_without_zero_divisors(const PointedCarrier& s) {
  const AxiomReport laws = check_pointed_monoid(s);
  for (const auto& r : laws.results()) {
    if (!r.passed) {
      throw StructuralError("program carrier is not a monoid with zero: " + r.label + " fails at " +
                            r.witness->to_string());
    }
  }
  if (s.size() < 2 || *s.one == s.bot) throw StructuralError("program monoid is trivial");
  for (ElemId a = 0; a < s.size(); ++a) {
    for (ElemId b = 0; b < s.size(); ++b) {
      if (a != s.bot && b != s.bot && s.times(a, b) == s.bot) {
        throw StructuralError("non-zero zero-divisors: " + s.elements[a] + " . " + s.elements[b] +
                              " = " + s.elements[s.bot]);
      }
    }
  }
}

CMonoid basic_c_monoid(const PointedCarrier& s) {
  require_monoid_without_zero_divisors(s);
  const Ada three = mk_three();
  const CAlgebra& m = three.base;
  const std::size_t n = s.size();
  CMonoid cm;
  cm.base.s = s;
  cm.base.act.resize(3 * n * n);
  for (ElemId a = 0; a < 3; ++a) {
    for (ElemId x = 0; x < n; ++x) {
      for (ElemId y = 0; y < n; ++y) {
        cm.base.act[(a * n + x) * n + y] = a == m.t ? x : (a == m.f ? y : s.bot);
      }
    }
  }
  cm.comp.resize(n * 3);
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId a = 0; a < 3; ++a) cm.comp[x * 3 + a] = x == s.bot ? m.u : a;
  }
  cm.base.m = three;
  return cm;
}

CMonoid pointwise_c_monoid(const PointedCarrier& s, std::size_t x_size, const SizeCaps& caps) {
  require_monoid_without_zero_divisors(s);
  require_x(x_size, caps, "pointwise C-monoid");
  const std::size_t k = s.size();
  const std::size_t n = checked_power(k, x_size, caps, "pointwise C-monoid");
  Ada tests = power_ada(x_size, caps);
  const std::size_t m = tests.size();

  // Element i spells its values in base |S|, x0 most significant.
  std::vector<std::vector<ElemId>> funcs(n, std::vector<ElemId>(x_size));
  auto encode = [&](const std::vector<ElemId>& values) {
    ElemId index = 0;
    for (ElemId v : values) index = static_cast<ElemId>(index * k + v);
    return index;
  };
  CMonoid cm;
  PointedCarrier& p = cm.base.s;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t x = x_size; x-- > 0;) {
      funcs[i][x] = static_cast<ElemId>(rest % k);
      rest /= k;
    }
    std::string name = "(";
    for (std::size_t x = 0; x < x_size; ++x) {
      if (x > 0) name += ',';
      name += s.elements[funcs[i][x]];
    }
    p.elements.push_back(name + ")");
  }
  p.one = encode(std::vector<ElemId>(x_size, *s.one));
  p.bot = encode(std::vector<ElemId>(x_size, s.bot));
  p.mul.emplace(n * n);
  std::vector<ElemId> scratch(x_size);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t x = 0; x < x_size; ++x) scratch[x] = s.times(funcs[f][x], funcs[g][x]);
      (*p.mul)[f * n + g] = encode(scratch);
    }
  }
  std::vector<PairOfSets> pairs;
  for (std::size_t i = 0; i < m; ++i) pairs.push_back(pair_at_index(x_size, static_cast<std::uint32_t>(i)));
  cm.base.act.resize(m * n * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t x = 0; x < x_size; ++x) {
          const Tri v = pairs[a].at(x);
          scratch[x] = v == Tri::T ? funcs[f][x] : (v == Tri::F ? funcs[g][x] : s.bot);
        }
        cm.base.act[(a * n + f) * n + g] = encode(scratch);
      }
    }
  }
  cm.comp.resize(n * m);
  std::vector<Tri> values(x_size);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t x = 0; x < x_size; ++x) {
        values[x] = funcs[f][x] == s.bot ? Tri::U : pairs[a].at(x);
      }
      cm.comp[f * m + a] = pair_index(pair_from_function(values));
    }
  }
  cm.base.m = std::move(tests);
  return cm;
}

BMonoid functional_b_monoid(std::size_t x_size, const SizeCaps& caps) {
  require_x(x_size, caps, "functional B-monoid");
  const std::size_t n = checked_power(x_size, x_size, caps, "functional B-monoid");
  BMonoid bm;
  bm.base.q = power_bool(x_size, caps);
  const std::size_t m = bm.base.q.size();

  std::vector<std::vector<std::size_t>> maps(n, std::vector<std::size_t>(x_size));
  auto encode = [&](const std::vector<std::size_t>& values) {
    ElemId index = 0;
    for (std::size_t v : values) index = static_cast<ElemId>(index * x_size + v);
    return index;
  };
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t rest = i;
    for (std::size_t x = x_size; x-- > 0;) {
      maps[i][x] = rest % x_size;
      rest /= x_size;
    }
    std::string name = "g";
    for (std::size_t v : maps[i]) name += std::to_string(v);
    bm.base.elements.push_back(name);
  }
  std::vector<std::size_t> id(x_size);
  for (std::size_t x = 0; x < x_size; ++x) id[x] = x;
  bm.one = encode(id);
  // power_bool: bit (x_size - 1 - x) of a test index marks point x as F.
  auto is_true = [&](std::size_t test, std::size_t x) {
    return ((test >> (x_size - 1 - x)) & 1U) == 0;
  };
  std::vector<std::size_t> scratch(x_size);
  bm.mul.resize(n * n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      for (std::size_t x = 0; x < x_size; ++x) scratch[x] = maps[g][maps[f][x]];
      bm.mul[f * n + g] = encode(scratch);
    }
  }
  bm.base.act.resize(m * n * n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t x = 0; x < x_size; ++x) scratch[x] = is_true(a, x) ? maps[f][x] : maps[g][x];
        bm.base.act[(a * n + f) * n + g] = encode(scratch);
      }
    }
  }
  bm.comp.resize(n * m);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t a = 0; a < m; ++a) {
      ElemId test = 0;
      for (std::size_t x = 0; x < x_size; ++x) {
        test = (test << 1) | (is_true(a, maps[f][x]) ? 0U : 1U);
      }
      bm.comp[f * m + a] = test;
    }
  }
  return bm;
}

PointedCarrier band_monoid(const Names& names, ElemId one, ElemId bot) {
  PointedCarrier s;
  s.elements = names;
  s.one = one;
  s.bot = bot;
  s.validate();
  const std::size_t n = names.size();
  s.mul.emplace(n * n);
  for (ElemId a = 0; a < n; ++a) {
    for (ElemId b = 0; b < n; ++b) {
      ElemId v = b;
      if (a == bot || b == bot) {
        v = bot;
      } else if (b == one) {
        v = a;
      }
      (*s.mul)[a * n + b] = v;
    }
  }
  return s;
}

PointedCarrier monoid_one_bot() { return band_monoid({"1", "bot"}, 0, 1); }

PointedCarrier monoid_one_a_bot() { return band_monoid({"1", "a", "bot"}, 0, 2); }

}  // namespace cmon
