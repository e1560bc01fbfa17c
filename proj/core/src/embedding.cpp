#include "cmon/embedding.hpp"

#include <algorithm>

#include "cmon/detail/sweep.hpp"
#include "cmon/error.hpp"

namespace cmon {
namespace {

using detail::check_law;
using detail::Outcome;
using detail::Var;
template <std::size_t N>
using At = std::array<ElemId, N>;

AxiomResult single(std::string label, std::string title, bool passed, std::string note = {}) {
  AxiomResult r;
  r.label = std::move(label);
  r.title = std::move(title);
  r.checked = 1;
  r.passed = passed;
  if (!passed) r.witness = Witness{{}, std::move(note)};
  return r;
}

PairOfSets pair_of(std::size_t n, bool first) {
  PairOfSets p(n);
  (first ? p.a : p.b).set();
  return p;
}

}  // namespace

QuotientPointedSet quotient_pointed_set(const ETheta& e, ElemId bot) {
  QuotientPointedSet q;
  q.classes = e.partition;
  const ElemId bot_rep = q.classes.rep(bot);
  for (ElemId r : q.classes.reps()) {
    if (r != bot_rep) q.reps.push_back(r);
  }
  q.reps.push_back(bot_rep);
  q.point_of.resize(q.classes.size());
  for (ElemId s = 0; s < q.classes.size(); ++s) {
    const auto it = std::find(q.reps.begin(), q.reps.end(), q.classes.rep(s));
    q.point_of[s] = static_cast<std::uint32_t>(it - q.reps.begin());
  }
  return q;
}

ThetaHom theta_hom(const CMonoid& cm, const Congruence& theta, const ETheta& e) {
  const CAlgebra& m = cm.tests();
  const auto& names = cm.programs().elements;
  const std::size_t n = cm.programs().size();
  ThetaHom h;
  h.quotient = quotient_pointed_set(e, cm.bot());
  const QuotientPointedSet& q = h.quotient;
  const std::size_t k = q.ground_size();

  for (ElemId s = 0; s < n; ++s) {
    PointedSelfMap psi{std::vector<std::uint32_t>(k + 1)};
    for (ElemId t = 0; t < n; ++t) {
      const std::uint32_t from = q.point_of[t];
      const std::uint32_t to = q.point_of[cm.times(t, s)];
      if (t == q.reps[from]) {
        psi.values[from] = to;
      } else if (psi.values[from] != to) {
        throw ModelInconsistency("phi_theta(" + names[s] + ") is not well defined: " + names[t] +
                                 " and " + names[q.reps[from]] + " are E-related but " +
                                 names[cm.times(t, s)] + " and " +
                                 names[cm.times(q.reps[from], s)] + " are not");
      }
    }
    if (psi.values[k] != k) {
      throw ModelInconsistency("phi_theta(" + names[s] + ") moves the class of bot");
    }
    h.phi.push_back(std::move(psi));
  }

  for (ElemId a = 0; a < m.size(); ++a) {
    if (a == m.t || a == m.f) {
      h.rho.push_back(pair_of(k, a == m.t));
      continue;
    }
    // 0: T-class, 1: F-class, 2: neither; per point, fixed by its representative.
    std::vector<int> kind(k + 1, -1);
    for (ElemId t = 0; t < n; ++t) {
      const ElemId c = cm.compose(t, a);
      const int v = theta.related(c, m.t) ? 0 : (theta.related(c, m.f) ? 1 : 2);
      int& slot = kind[q.point_of[t]];
      if (slot == -1) {
        slot = v;
      } else if (slot != v) {
        throw ModelInconsistency("rho_theta(" + m.elements[a] + ") depends on the representative of the class of " + names[t]);
      }
    }
    if (kind[k] != 2) {
      throw ModelInconsistency("rho_theta(" + m.elements[a] + ") contains the class of bot");
    }
    PairOfSets p(k);
    for (std::size_t x = 0; x < k; ++x) {
      if (kind[x] == 0) p.a.set(x);
      if (kind[x] == 1) p.b.set(x);
    }
    h.rho.push_back(std::move(p));
  }
  return h;
}

ThetaHom theta_hom(const CMonoid& cm, const Congruence& theta) {
  return theta_hom(cm, theta, e_theta(cm.base, theta));
}

AxiomReport check_phi_rho_theta_hom(const CMonoid& cm, const Congruence& theta) {
  cm.validate();
  AxiomReport r;
  ThetaHom h;
  try {
    h = theta_hom(cm, theta);
  } catch (const ModelInconsistency& e) {
    r.add(single("hom.well-defined", "phi_theta and rho_theta are well defined", false, e.what()));
    return r;
  }
  r.add(single("hom.well-defined", "phi_theta and rho_theta are well defined", true));
  const CAlgebra& m = cm.tests();
  const Names* S = &cm.programs().elements;
  const Names* M = &m.elements;
  const std::size_t k = h.quotient.ground_size();
  const auto& phi = h.phi;
  const auto& rho = h.rho;

  r.add(single("hom.phi-one", "phi_theta(1) is the identity", phi[cm.one()] == identity_map(k)));
  r.add(single("hom.phi-bot", "phi_theta(bot) is constant at the class of bot",
               phi[cm.bot()] == zero_map(k)));
  r.add(check_law("hom.phi-mul", "phi_theta is multiplicative", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) {
                    return phi[cm.times(x[0], x[1])] == compose_lr(phi[x[0]], phi[x[1]]);
                  }));
  r.add(single("hom.rho-constants", "rho_theta preserves T, F, U",
               rho[m.t] == pair_const(k, Tri::T) && rho[m.f] == pair_const(k, Tri::F) &&
                   rho[m.u] == pair_const(k, Tri::U)));
  r.add(check_law("hom.rho-neg", "rho_theta preserves neg", std::array<Var, 1>{{{"%a", M}}},
                  [&](const At<1>& x) { return rho[m.neg(x[0])] == pair_neg(rho[x[0]]); }));
  r.add(check_law("hom.rho-and", "rho_theta preserves and",
                  std::array<Var, 2>{{{"%a", M}, {"%b", M}}}, [&](const At<2>& x) {
                    return rho[m.conj(x[0], x[1])] == pair_and(rho[x[0]], rho[x[1]]);
                  }));
  r.add(check_law("hom.rho-or", "rho_theta preserves or",
                  std::array<Var, 2>{{{"%a", M}, {"%b", M}}}, [&](const At<2>& x) {
                    return rho[m.disj(x[0], x[1])] == pair_or(rho[x[0]], rho[x[1]]);
                  }));
  r.add(check_law("hom.action", "phi_theta(a[s, t]) = rho_theta(a)[phi_theta(s), phi_theta(t)]",
                  std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", M}}}, [&](const At<3>& x) {
                    return phi[cm.apply(x[2], x[0], x[1])] ==
                           functional_act(rho[x[2]], phi[x[0]], phi[x[1]]);
                  }));
  r.add(check_law("hom.comp", "rho_theta(s o a) = phi_theta(s) o rho_theta(a)",
                  std::array<Var, 2>{{{"s", S}, {"%a", M}}}, [&](const At<2>& x) {
                    return rho[cm.compose(x[0], x[1])] == functional_comp(phi[x[0]], rho[x[1]]);
                  }));
  return r;
}

AxiomReport check_separation(const CMonoid& cm, const SizeCaps& caps) {
  const ThetaFamily fam = theta_family(cm.base, caps);
  std::vector<ThetaHom> homs;
  for (std::size_t i = 0; i < fam.thetas.size(); ++i) {
    homs.push_back(theta_hom(cm, fam.thetas[i], fam.e[i]));
  }
  const CAlgebra& m = cm.tests();
  const Names* S = &cm.programs().elements;
  const Names* M = &m.elements;
  const Names* th = &fam.names;
  AxiomReport r;
  r.add(check_law("separation.programs", "distinct programs split by some phi_theta",
                  std::array<Var, 2>{{{"s", S}, {"t", S}}}, [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    const bool split = std::any_of(homs.begin(), homs.end(), [&](const ThetaHom& h) {
                      return h.phi[x[0]] != h.phi[x[1]];
                    });
                    return split ? Outcome::holds : Outcome::fails;
                  }));
  r.add(check_law("separation.tests", "distinct tests split by some rho_theta",
                  std::array<Var, 2>{{{"%a", M}, {"%b", M}}}, [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    const bool split = std::any_of(homs.begin(), homs.end(), [&](const ThetaHom& h) {
                      return h.rho[x[0]] != h.rho[x[1]];
                    });
                    return split ? Outcome::holds : Outcome::fails;
                  }));
  auto full_side = [&](const char* label, const char* title, bool first, ElemId constant) {
    r.add(check_law(label, title, std::array<Var, 2>{{{"theta", th}, {"%a", M}}},
                    [&](const At<2>& x) {
                      const ThetaHom& h = homs[x[0]];
                      if (h.rho[x[1]] != pair_of(h.quotient.ground_size(), first)) {
                        return Outcome::vacuous;
                      }
                      return fam.thetas[x[0]].related(x[1], constant) ? Outcome::holds
                                                                       : Outcome::fails;
                    }));
  };
  full_side("separation.rho-T-implies-T", "rho_theta(a) = (S_theta, {}) implies a ~ T", true, m.t);
  full_side("separation.rho-F-implies-F", "rho_theta(a) = ({}, S_theta) implies a ~ F", false, m.f);
  return r;
}

Embedding build_embedding(const CMonoid& cm, const SizeCaps& caps) {
  Embedding emb;
  emb.family = theta_family(cm.base, caps);
  std::vector<std::size_t> offset;
  for (std::size_t i = 0; i < emb.family.thetas.size(); ++i) {
    emb.homs.push_back(theta_hom(cm, emb.family.thetas[i], emb.family.e[i]));
    const QuotientPointedSet& q = emb.homs.back().quotient;
    offset.push_back(emb.points.size());
    for (std::size_t x = 0; x < q.ground_size(); ++x) emb.points.push_back({i, q.reps[x]});
  }
  const std::size_t nx = emb.points.size();
  const auto global_bot = static_cast<std::uint32_t>(nx);

  for (ElemId s = 0; s < cm.programs().size(); ++s) {
    PointedSelfMap f{std::vector<std::uint32_t>(nx + 1, global_bot)};
    for (std::size_t i = 0; i < emb.homs.size(); ++i) {
      const ThetaHom& h = emb.homs[i];
      for (std::uint32_t x = 0; x < h.quotient.ground_size(); ++x) {
        const std::uint32_t v = h.phi[s](x);
        if (v != h.quotient.base()) f.values[offset[i] + x] = static_cast<std::uint32_t>(offset[i] + v);
      }
    }
    emb.morphism.phi.push_back(std::move(f));
  }
  for (ElemId a = 0; a < cm.tests().size(); ++a) {
    PairOfSets p(nx);
    for (std::size_t i = 0; i < emb.homs.size(); ++i) {
      const PairOfSets& local = emb.homs[i].rho[a];
      for (std::size_t x = 0; x < local.ground_size(); ++x) {
        p.a[offset[i] + x] = local.a[x];
        p.b[offset[i] + x] = local.b[x];
      }
    }
    emb.morphism.rho.push_back(std::move(p));
  }

  std::size_t target_size = 1;
  bool fits = nx <= caps.max_x;
  for (std::size_t i = 0; i < nx && fits; ++i) {
    target_size *= nx + 1;
    fits = target_size <= caps.max_carrier;
  }
  if (fits && nx > 0) emb.target = functional_c_monoid(nx, caps);
  return emb;
}

AxiomReport verify_embedding(const CMonoid& cm, const Embedding& emb) {
  const CAlgebra& m = cm.tests();
  const Names* S = &cm.programs().elements;
  const Names* M = &m.elements;
  const std::size_t nx = emb.x_size();
  const auto& phi = emb.morphism.phi;
  const auto& rho = emb.morphism.rho;
  if (phi.size() != S->size() || rho.size() != M->size()) {
    throw StructuralError("embedding was built for a different model");
  }
  AxiomReport r;

  r.add(check_law("embed.phi-injective", "phi is injective", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    return phi[x[0]] != phi[x[1]] ? Outcome::holds : Outcome::fails;
                  }));
  r.add(check_law("embed.rho-injective", "rho is injective",
                  std::array<Var, 2>{{{"%a", M}, {"%b", M}}}, [&](const At<2>& x) {
                    if (x[0] == x[1]) return Outcome::vacuous;
                    return rho[x[0]] != rho[x[1]] ? Outcome::holds : Outcome::fails;
                  }));
  r.add(check_law("embed.mul", "phi(s . t) = phi(s) . phi(t)", std::array<Var, 2>{{{"s", S}, {"t", S}}},
                  [&](const At<2>& x) {
                    return phi[cm.times(x[0], x[1])] == compose_lr(phi[x[0]], phi[x[1]]);
                  }));
  r.add(single("embed.one", "phi(1) is the identity", phi[cm.one()] == identity_map(nx)));
  r.add(single("embed.bot", "phi(bot) is constant at bot", phi[cm.bot()] == zero_map(nx)));
  r.add(single("embed.constants", "rho preserves T, F, U",
               rho[m.t] == pair_const(nx, Tri::T) && rho[m.f] == pair_const(nx, Tri::F) &&
                   rho[m.u] == pair_const(nx, Tri::U)));
  r.add(check_law("embed.neg", "rho preserves neg", std::array<Var, 1>{{{"%a", M}}},
                  [&](const At<1>& x) { return rho[m.neg(x[0])] == pair_neg(rho[x[0]]); }));
  r.add(check_law("embed.and", "rho preserves and", std::array<Var, 2>{{{"%a", M}, {"%b", M}}},
                  [&](const At<2>& x) {
                    return rho[m.conj(x[0], x[1])] == pair_and(rho[x[0]], rho[x[1]]);
                  }));
  r.add(check_law("embed.or", "rho preserves or", std::array<Var, 2>{{{"%a", M}, {"%b", M}}},
                  [&](const At<2>& x) {
                    return rho[m.disj(x[0], x[1])] == pair_or(rho[x[0]], rho[x[1]]);
                  }));
  r.add(check_law("embed.action", "phi(a[s, t]) = rho(a)[phi(s), phi(t)]",
                  std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", M}}}, [&](const At<3>& x) {
                    return phi[cm.apply(x[2], x[0], x[1])] ==
                           functional_act(rho[x[2]], phi[x[0]], phi[x[1]]);
                  }));
  r.add(check_law("embed.comp", "rho(s o a) = phi(s) o rho(a)", std::array<Var, 2>{{{"s", S}, {"%a", M}}},
                  [&](const At<2>& x) {
                    return rho[cm.compose(x[0], x[1])] == functional_comp(phi[x[0]], rho[x[1]]);
                  }));
  r.add(check_law("embed.image-identity", "(f o T)[f, f] = f in the image",
                  std::array<Var, 1>{{{"s", S}}}, [&](const At<1>& x) {
                    const PointedSelfMap& f = phi[x[0]];
                    return functional_act(functional_comp(f, pair_const(nx, Tri::T)), f, f) == f;
                  }));

  std::size_t expected = 0;
  for (const auto& h : emb.homs) expected += h.quotient.ground_size();
  r.add(single("embed.finite-X", "|X| = " + std::to_string(nx) + ", the disjoint union of the S_theta",
               expected == nx && nx > 0, "expected " + std::to_string(expected) + " points"));

  if (emb.target) {
    const CMonoid& tg = *emb.target;
    std::vector<ElemId> pi, ri;
    for (const auto& f : phi) pi.push_back(map_index(f));
    for (const auto& p : rho) ri.push_back(pair_index(p));
    r.add(check_law("embed.target-agrees", "tabled target agrees with the functional semantics",
                    std::array<Var, 3>{{{"s", S}, {"t", S}, {"%a", M}}}, [&](const At<3>& x) {
                      return tg.times(pi[x[0]], pi[x[1]]) == pi[cm.times(x[0], x[1])] &&
                             tg.apply(ri[x[2]], pi[x[0]], pi[x[1]]) == pi[cm.apply(x[2], x[0], x[1])] &&
                             tg.compose(pi[x[0]], ri[x[2]]) == ri[cm.compose(x[0], x[2])];
                    }));
  }
  return r;
}

std::string point_name(const CMonoid& cm, const Embedding& emb, std::size_t point) {
  const TaggedPoint& p = emb.points.at(point);
  return emb.family.names[p.theta] + ":" + cm.programs().elements[p.rep];
}

CMonoid image_model(const CMonoid& cm, const Embedding& emb) {
  CMonoid out = cm;
  for (std::size_t s = 0; s < out.base.s.elements.size(); ++s) {
    out.base.s.elements[s] = map_name(emb.morphism.phi[s]);
  }
  Names tests;
  for (const auto& p : emb.morphism.rho) tests.push_back(pair_name(p));
  std::visit([&](auto& alg) {
    if constexpr (std::is_same_v<std::decay_t<decltype(alg)>, Ada>) {
      alg.base.elements = tests;
    } else {
      alg.elements = tests;
    }
  }, out.base.m);
  out.validate();
  return out;
}

}  // namespace cmon
