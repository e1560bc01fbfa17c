#include "cmon/congruence.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <map>
#include <set>

#include "cmon/detail/sweep.hpp"
#include "cmon/error.hpp"

namespace cmon {
namespace {

using detail::check_law;
using detail::Outcome;
using detail::Var;
template <std::size_t N>
using At = std::array<ElemId, N>;
using Seed = std::vector<std::pair<ElemId, ElemId>>;

Seed generators(const Partition& p) {
  Seed seed;
  for (ElemId x = 0; x < p.size(); ++x) {
    if (p.rep(x) != x) seed.emplace_back(x, p.rep(x));
  }
  return seed;
}

const Ada& require_ada(const CSet& cs) {
  const Ada* ada = ada_of(cs.m);
  if (ada == nullptr) throw StructuralError("test algebra has no down operation; an ada is required");
  return *ada;
}

void require_sizes(const Partition& p, std::size_t n, const char* what) {
  if (p.size() != n) {
    throw StructuralError(std::string(what) + " has " + std::to_string(p.size()) +
                          " elements, expected " + std::to_string(n));
  }
}

bool by_lattice_order(const Congruence& l, const Congruence& r) {
  const auto lb = l.partition.block_count();
  const auto rb = r.partition.block_count();
  if (lb != rb) return lb > rb;
  return l.partition < r.partition;
}

}  // namespace

Partition::Partition(const std::vector<std::size_t>& labels) : block_(labels.size()) {
  std::map<std::size_t, ElemId> first;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    block_[i] = first.try_emplace(labels[i], static_cast<ElemId>(i)).first->second;
  }
}

Partition Partition::discrete(std::size_t n) {
  std::vector<std::size_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i;
  return Partition(labels);
}

Partition Partition::full(std::size_t n) { return Partition(std::vector<std::size_t>(n, 0)); }

std::vector<ElemId> Partition::reps() const {
  std::vector<ElemId> out;
  for (ElemId x = 0; x < size(); ++x) {
    if (block_[x] == x) out.push_back(x);
  }
  return out;
}

std::vector<std::vector<ElemId>> Partition::blocks() const {
  std::vector<std::vector<ElemId>> out;
  std::map<ElemId, std::size_t> where;
  for (ElemId x = 0; x < size(); ++x) {
    auto [it, fresh] = where.try_emplace(block_[x], out.size());
    if (fresh) out.emplace_back();
    out[it->second].push_back(x);
  }
  return out;
}

std::size_t Partition::block_count() const { return reps().size(); }

bool Partition::refines(const Partition& coarser) const {
  if (coarser.size() != size()) return false;
  for (ElemId x = 0; x < size(); ++x) {
    if (!coarser.same(x, block_[x])) return false;
  }
  return true;
}

Partition Partition::meet(const Partition& other) const {
  std::map<std::pair<ElemId, ElemId>, std::size_t> ids;
  std::vector<std::size_t> labels(size());
  for (ElemId x = 0; x < size(); ++x) {
    labels[x] = ids.try_emplace({block_[x], other.block_[x]}, ids.size()).first->second;
  }
  return Partition(labels);
}

std::string Partition::render(const Names& names) const {
  std::string out;
  for (const auto& block : blocks()) {
    out += '{';
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i > 0) out += ',';
      out += names[block[i]];
    }
    out += '}';
  }
  return out;
}

std::optional<std::string> congruence_violation(const Ada& a, const Partition& p) {
  const CAlgebra& m = a.base;
  require_sizes(p, m.size(), "partition");
  const auto& e = m.elements;
  auto clash = [&](ElemId x, ElemId r, const char* op, ElemId lhs, ElemId rhs)
      -> std::optional<std::string> {
    if (p.same(lhs, rhs)) return std::nullopt;
    return e[x] + " ~ " + e[r] + " but " + op + " gives " + e[lhs] + " !~ " + e[rhs];
  };
  for (ElemId x = 0; x < p.size(); ++x) {
    const ElemId r = p.rep(x);
    if (r == x) continue;
    if (auto v = clash(x, r, "neg", m.neg(x), m.neg(r))) return v;
    if (auto v = clash(x, r, "down", a.down(x), a.down(r))) return v;
    for (ElemId z = 0; z < p.size(); ++z) {
      if (auto v = clash(x, r, "and (left)", m.conj(x, z), m.conj(r, z))) return v;
      if (auto v = clash(x, r, "and (right)", m.conj(z, x), m.conj(z, r))) return v;
      if (auto v = clash(x, r, "or (left)", m.disj(x, z), m.disj(r, z))) return v;
      if (auto v = clash(x, r, "or (right)", m.disj(z, x), m.disj(z, r))) return v;
    }
  }
  return std::nullopt;
}

bool is_congruence(const Ada& a, const Partition& p) { return !congruence_violation(a, p); }

Congruence congruence_closure(const Ada& a, const Seed& seed) {
  const CAlgebra& m = a.base;
  const std::size_t n = m.size();
  boost::disjoint_sets_with_storage<> sets(n);
  for (const auto& [x, y] : seed) {
    if (x >= n || y >= n) throw StructuralError("congruence seed pair out of range");
    sets.union_set(x, y);
  }
  bool changed = true;
  auto merge = [&](ElemId x, ElemId y) {
    if (sets.find_set(x) != sets.find_set(y)) {
      sets.union_set(x, y);
      changed = true;
    }
  };
  while (changed) {
    changed = false;
    for (ElemId x = 0; x < n; ++x) {
      const auto r = static_cast<ElemId>(sets.find_set(x));
      if (r == x) continue;
      merge(m.neg(x), m.neg(r));
      merge(a.down(x), a.down(r));
      for (ElemId z = 0; z < n; ++z) {
        merge(m.conj(x, z), m.conj(r, z));
        merge(m.conj(z, x), m.conj(z, r));
        merge(m.disj(x, z), m.disj(r, z));
        merge(m.disj(z, x), m.disj(z, r));
      }
    }
  }
  std::vector<std::size_t> labels(n);
  for (ElemId x = 0; x < n; ++x) labels[x] = sets.find_set(x);
  return Congruence{Partition(labels)};
}

std::vector<Congruence> all_congruences(const Ada& a, const SizeCaps& caps) {
  a.validate();
  const std::size_t n = a.size();
  if (n > caps.lattice_limit) {
    throw SizeCapError("congruence lattice of " + std::to_string(n) + " elements exceeds cap " +
                       std::to_string(caps.lattice_limit));
  }
  std::set<Congruence> found{Congruence{Partition::discrete(n)}, Congruence{Partition::full(n)}};
  for (ElemId x = 0; x < n; ++x) {
    for (ElemId y = x + 1; y < n; ++y) found.insert(congruence_closure(a, {{x, y}}));
  }
  std::size_t before = 0;
  while (found.size() != before) {
    before = found.size();
    const std::vector<Congruence> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        Seed seed = generators(current[i].partition);
        const Seed more = generators(current[j].partition);
        seed.insert(seed.end(), more.begin(), more.end());
        found.insert(congruence_closure(a, seed));
      }
    }
  }
  std::vector<Congruence> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), by_lattice_order);
  return out;
}

std::vector<Congruence> maximal_congruences_by_search(const Ada& a) {
  a.validate();
  if (a.size() < 2) throw StructuralError("no maximal proper congruence: the ada is trivial");
  std::set<Congruence> seen;
  std::vector<Congruence> maximal;
  std::vector<Congruence> stack{congruence_closure(a, {})};
  while (!stack.empty()) {
    Congruence c = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(c).second) continue;
    const std::vector<ElemId> reps = c.partition.reps();
    bool extendable = false;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = i + 1; j < reps.size(); ++j) {
        Seed seed = generators(c.partition);
        seed.emplace_back(reps[i], reps[j]);
        Congruence bigger = congruence_closure(a, seed);
        if (bigger.partition.is_full()) continue;
        extendable = true;
        if (!seen.contains(bigger)) stack.push_back(std::move(bigger));
      }
    }
    if (!extendable) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

std::vector<Congruence> maximal_congruences(const Ada& a, const SizeCaps& caps) {
  a.validate();
  if (a.size() < 2) throw StructuralError("no maximal proper congruence: the ada is trivial");
  if (a.size() > caps.lattice_limit) return maximal_congruences_by_search(a);
  const std::vector<Congruence> lattice = all_congruences(a, caps);
  std::vector<Congruence> maximal;
  for (const auto& c : lattice) {
    if (c.partition.is_full()) continue;
    const bool covered = std::any_of(lattice.begin(), lattice.end(), [&](const Congruence& d) {
      return d != c && !d.partition.is_full() && c.partition.refines(d.partition);
    });
    if (!covered) maximal.push_back(c);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

Quotient quotient_ada(const Ada& a, const Congruence& theta) {
  a.validate();
  if (auto v = congruence_violation(a, theta.partition)) {
    throw StructuralError("not a congruence: " + *v);
  }
  const CAlgebra& m = a.base;
  const std::vector<ElemId> reps = theta.partition.reps();
  const std::size_t k = reps.size();
  Quotient q;
  q.projection.resize(m.size());
  for (ElemId x = 0; x < m.size(); ++x) {
    const auto pos = std::lower_bound(reps.begin(), reps.end(), theta.partition.rep(x));
    q.projection[x] = static_cast<ElemId>(pos - reps.begin());
  }
  const auto& pr = q.projection;
  CAlgebra& b = q.algebra.base;
  for (ElemId r : reps) b.elements.push_back(m.elements[r]);
  b.neg_table.resize(k);
  b.and_table.resize(k * k);
  b.or_table.resize(k * k);
  q.algebra.down_table.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    b.neg_table[i] = pr[m.neg(reps[i])];
    q.algebra.down_table[i] = pr[a.down(reps[i])];
    for (std::size_t j = 0; j < k; ++j) {
      b.and_table[i * k + j] = pr[m.conj(reps[i], reps[j])];
      b.or_table[i * k + j] = pr[m.disj(reps[i], reps[j])];
    }
  }
  b.t = pr[m.t];
  b.f = pr[m.f];
  b.u = pr[m.u];
  return q;
}

std::optional<std::vector<ElemId>> iso_to_three(const Ada& a) {
  const CAlgebra& m = a.base;
  if (m.size() != 3 || m.t == m.f || m.t == m.u || m.f == m.u) return std::nullopt;
  const Ada three = mk_three();
  const CAlgebra& t3 = three.base;
  std::vector<ElemId> iso(3);
  iso[m.t] = t3.t;
  iso[m.f] = t3.f;
  iso[m.u] = t3.u;
  for (ElemId x = 0; x < 3; ++x) {
    if (iso[m.neg(x)] != t3.neg(iso[x]) || iso[a.down(x)] != three.down(iso[x])) return std::nullopt;
    for (ElemId y = 0; y < 3; ++y) {
      if (iso[m.conj(x, y)] != t3.conj(iso[x], iso[y]) ||
          iso[m.disj(x, y)] != t3.disj(iso[x], iso[y])) {
        return std::nullopt;
      }
    }
  }
  return iso;
}

AxiomReport check_prop_max_theta(const Ada& a, const Congruence& theta) {
  const CAlgebra& m = a.base;
  require_sizes(theta.partition, m.size(), "congruence");
  AxiomReport r;
  auto apart = [&](const char* label, ElemId x, ElemId y) {
    AxiomResult res;
    res.label = label;
    res.title = "constants in distinct classes";
    res.checked = 1;
    if (theta.related(x, y)) {
      res.passed = false;
      res.witness = Witness{{}, m.elements[x] + " and " + m.elements[y] + " share a class"};
    }
    r.add(std::move(res));
  };
  apart("T-F", m.t, m.f);
  apart("T-U", m.t, m.u);
  apart("F-U", m.f, m.u);
  return r;
}

ETheta e_theta(const CSet& cs, const Congruence& theta) {
  const CAlgebra& m = cs.tests();
  require_sizes(theta.partition, m.size(), "congruence");
  const std::size_t n = cs.s.size();
  const auto& names = cs.s.elements;
  std::vector<ElemId> t_class;
  for (ElemId b = 0; b < m.size(); ++b) {
    if (theta.related(b, m.t)) t_class.push_back(b);
  }
  ETheta e;
  e.witness.assign(n * n, std::nullopt);
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = 0; t < n; ++t) {
      for (ElemId b : t_class) {
        if (cs.apply(b, s, t) == cs.apply(b, t, t)) {
          e.witness[s * n + t] = b;
          break;
        }
      }
    }
  }
  auto rel = [&](ElemId s, ElemId t) { return e.witness[s * n + t].has_value(); };
  for (ElemId s = 0; s < n; ++s) {
    for (ElemId t = 0; t < n; ++t) {
      if (rel(s, t) && !rel(t, s)) {
        throw ModelInconsistency("E_theta is not symmetric: (" + names[s] + ", " + names[t] +
                                 ") related but not the reverse");
      }
      if (!rel(s, t)) continue;
      for (ElemId u = 0; u < n; ++u) {
        if (rel(t, u) && !rel(s, u)) {
          throw ModelInconsistency("E_theta is not transitive at " + names[s] + ", " + names[t] +
                                   ", " + names[u]);
        }
      }
    }
  }
  std::vector<std::size_t> labels(n);
  for (ElemId s = 0; s < n; ++s) {
    ElemId t = 0;
    while (!rel(s, t)) ++t;
    labels[s] = t;
  }
  e.partition = Partition(labels);
  return e;
}

AxiomReport check_cset_congruence(const CSet& cs, const Partition& sigma, const Partition& tau) {
  require_sizes(sigma, cs.s.size(), "program partition");
  require_sizes(tau, cs.tests().size(), "test partition");
  const Names* S = &cs.s.elements;
  const Names* M = &cs.tests().elements;
  auto implies = [](bool hyp, bool concl) {
    if (!hyp) return Outcome::vacuous;
    return concl ? Outcome::holds : Outcome::fails;
  };
  AxiomReport r;
  r.add(check_law("cset-congruence.first", "first argument",
                  std::array<Var, 4>{{{"s", S}, {"t", S}, {"u", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return implies(sigma.same(x[0], x[1]),
                                   sigma.same(cs.apply(x[3], x[0], x[2]), cs.apply(x[3], x[1], x[2])));
                  }));
  r.add(check_law("cset-congruence.second", "second argument",
                  std::array<Var, 4>{{{"s", S}, {"u", S}, {"v", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    return implies(sigma.same(x[1], x[2]),
                                   sigma.same(cs.apply(x[3], x[0], x[1]), cs.apply(x[3], x[0], x[2])));
                  }));
  r.add(check_law("cset-congruence.test", "test argument",
                  std::array<Var, 4>{{{"s", S}, {"u", S}, {"%a", M}, {"%b", M}}},
                  [&](const At<4>& x) {
                    return implies(tau.same(x[2], x[3]),
                                   sigma.same(cs.apply(x[2], x[0], x[1]), cs.apply(x[3], x[0], x[1])));
                  }));
  return r;
}

ThetaFamily theta_family(const CSet& cs, const SizeCaps& caps) {
  cs.validate();
  const Ada& ada = require_ada(cs);
  ThetaFamily fam;
  fam.thetas = maximal_congruences(ada, caps);
  for (std::size_t i = 0; i < fam.thetas.size(); ++i) {
    fam.e.push_back(e_theta(cs, fam.thetas[i]));
    fam.names.push_back("theta" + std::to_string(i));
  }
  return fam;
}

AxiomReport check_collection_props(const CSet& cs, const SizeCaps& caps) {
  const ThetaFamily fam = theta_family(cs, caps);
  const CAlgebra& m = cs.tests();
  const Names* S = &cs.s.elements;
  const Names* M = &m.elements;
  const Names* th = &fam.names;
  const ElemId bot = cs.s.bot;
  AxiomReport r;

  r.add(check_law("collection.class-trichotomy", "class of the action follows the test",
                  std::array<Var, 4>{{{"theta", th}, {"s", S}, {"t", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    const Congruence& theta = fam.thetas[x[0]];
                    const ElemId a = x[3];
                    ElemId target;
                    if (theta.related(a, m.t)) {
                      target = x[1];
                    } else if (theta.related(a, m.f)) {
                      target = x[2];
                    } else if (theta.related(a, m.u)) {
                      target = bot;
                    } else {
                      return false;
                    }
                    return fam.e[x[0]].related(cs.apply(a, x[1], x[2]), target);
                  }));

  AxiomResult pair;
  pair.label = "collection.cset-congruence";
  pair.title = "(E_theta, theta) is a C-set congruence";
  for (std::size_t i = 0; i < fam.thetas.size() && pair.passed; ++i) {
    const AxiomReport sub = check_cset_congruence(cs, fam.e[i].partition, fam.thetas[i].partition);
    for (const auto& res : sub.results()) {
      pair.checked += res.checked;
      pair.vacuous += res.vacuous;
      if (!res.passed && pair.passed) {
        pair.passed = false;
        Witness w = *res.witness;
        w.bindings.insert(w.bindings.begin(), {"theta", fam.names[i]});
        w.note = res.label;
        pair.witness = std::move(w);
      }
    }
  }
  r.add(std::move(pair));

  const CSet mm = mm_c_set(cs.m);
  std::vector<ETheta> e_mm;
  for (const auto& theta : fam.thetas) e_mm.push_back(e_theta(mm, theta));
  r.add(check_law("collection.mm-subset-theta", "E_theta on (M, M) lies inside theta",
                  std::array<Var, 3>{{{"theta", th}, {"%a", M}, {"%b", M}}},
                  [&](const At<3>& x) {
                    if (!e_mm[x[0]].related(x[1], x[2])) return Outcome::vacuous;
                    return fam.thetas[x[0]].related(x[1], x[2]) ? Outcome::holds : Outcome::fails;
                  }));
  r.add(check_law("collection.e-intersection-trivial", "intersection of the E_theta is the diagonal",
                  std::array<Var, 2>{{{"s", S}, {"t", S}}}, [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    const bool split = std::any_of(fam.e.begin(), fam.e.end(), [&](const ETheta& e) {
                      return !e.related(x[0], x[1]);
                    });
                    return split ? Outcome::holds : Outcome::fails;
                  }));
  r.add(check_law("collection.theta-intersection-trivial",
                  "intersection of the maximal congruences is the diagonal",
                  std::array<Var, 2>{{{"%a", M}, {"%b", M}}}, [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    const bool split =
                        std::any_of(fam.thetas.begin(), fam.thetas.end(),
                                    [&](const Congruence& c) { return !c.related(x[0], x[1]); });
                    return split ? Outcome::holds : Outcome::fails;
                  }));
  return r;
}

AxiomReport check_rho_hom_props(const CMonoid& cm, const SizeCaps& caps) {
  const ThetaFamily fam = theta_family(cm.base, caps);
  const CAlgebra& m = cm.tests();
  const Names* S = &cm.programs().elements;
  const Names* M = &m.elements;
  const Names* th = &fam.names;
  const ElemId bot = cm.bot();
  AxiomReport r;
  r.add(check_law("domain.q-T-restores-q", "(q o T)[q, bot] = q", std::array<Var, 1>{{{"q", S}}},
                  [&](const At<1>& x) {
                    return cm.apply(cm.compose(x[0], m.t), x[0], bot) == x[0];
                  }));
  r.add(check_law("domain.q-T-not-F", "q o T is not in the class of F",
                  std::array<Var, 2>{{{"theta", th}, {"q", S}}}, [&](const At<2>& x) {
                    return !fam.thetas[x[0]].related(cm.compose(x[1], m.t), m.f);
                  }));
  r.add(check_law("domain.q-T-U-iff-q-bot", "q o T ~ U exactly when q E bot",
                  std::array<Var, 2>{{{"theta", th}, {"q", S}}}, [&](const At<2>& x) {
                    return fam.thetas[x[0]].related(cm.compose(x[1], m.t), m.u) ==
                           fam.e[x[0]].related(x[1], bot);
                  }));
  r.add(check_law("domain.q-T-T-iff-not-bot", "q o T ~ T, q o F ~ F and not q E bot agree",
                  std::array<Var, 2>{{{"theta", th}, {"q", S}}}, [&](const At<2>& x) {
                    const Congruence& theta = fam.thetas[x[0]];
                    const bool a = theta.related(cm.compose(x[1], m.t), m.t);
                    const bool b = theta.related(cm.compose(x[1], m.f), m.f);
                    const bool c = !fam.e[x[0]].related(x[1], bot);
                    return a == b && b == c;
                  }));
  r.add(check_law("domain.E-respects-comp", "s E t implies s o a ~ t o a",
                  std::array<Var, 4>{{{"theta", th}, {"s", S}, {"t", S}, {"%a", M}}},
                  [&](const At<4>& x) {
                    if (!fam.e[x[0]].related(x[1], x[2])) return Outcome::vacuous;
                    return fam.thetas[x[0]].related(cm.compose(x[1], x[3]), cm.compose(x[2], x[3]))
                               ? Outcome::holds
                               : Outcome::fails;
                  }));
  r.add(check_law("domain.one-not-bot", "1 and bot are not E-related",
                  std::array<Var, 1>{{{"theta", th}}},
                  [&](const At<1>& x) { return !fam.e[x[0]].related(cm.one(), bot); }));
  return r;
}

}  // namespace cmon
