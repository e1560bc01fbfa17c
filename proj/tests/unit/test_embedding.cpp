#include <gtest/gtest.h>

#include <map>
#include <set>

#include "cmon/bundled.hpp"
#include "cmon/embedding.hpp"
#include "cmon/error.hpp"

namespace cmon {
namespace {

const CMonoid& bundled(const std::string& name) {
  for (const auto& nm : bundled_c_monoids()) {
    if (nm.name == name) return nm.model;
  }
  throw std::out_of_range(name);
}

TEST(ThetaHom, BasicOneABot) {
  const CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  const auto thetas = maximal_congruences(*ada_of(cm.base.m));
  ASSERT_EQ(thetas.size(), 1u);
  const ThetaHom h = theta_hom(cm, thetas[0]);
  // Classes {1}, {a}, then bot's class as the base point.
  EXPECT_EQ(h.quotient.reps, (std::vector<ElemId>{0, 1, 2}));
  EXPECT_EQ(h.quotient.ground_size(), 2u);
  // phi(s) sends the class of t to the class of t . s.
  EXPECT_EQ(h.phi[0].values, (std::vector<std::uint32_t>{0, 1, 2}));
  EXPECT_EQ(h.phi[1].values, (std::vector<std::uint32_t>{1, 1, 2}));
  EXPECT_EQ(h.phi[2].values, (std::vector<std::uint32_t>{2, 2, 2}));
  const CAlgebra& m = cm.tests();
  EXPECT_EQ(h.rho[m.t], pair_const(2, Tri::T));
  EXPECT_EQ(h.rho[m.f], pair_const(2, Tri::F));
  EXPECT_EQ(h.rho[m.u], pair_const(2, Tri::U));
  EXPECT_TRUE(check_phi_rho_theta_hom(cm, thetas[0]).ok());
}

TEST(ThetaHom, AllBundled) {
  for (const auto& nm : bundled_c_monoids()) {
    for (const auto& th : maximal_congruences(*ada_of(nm.model.base.m))) {
      const AxiomReport r = check_phi_rho_theta_hom(nm.model, th);
      EXPECT_TRUE(r.ok()) << nm.name;
      for (const char* label : {"hom.well-defined", "hom.phi-one", "hom.phi-bot", "hom.phi-mul",
                                "hom.rho-constants", "hom.rho-neg", "hom.rho-and", "hom.rho-or",
                                "hom.action", "hom.comp"}) {
        EXPECT_NE(r.find(label), nullptr) << label;
      }
    }
  }
}

TEST(ThetaHom, RhoMatchesDefinitionOnFunctional) {
  // rho_theta(alpha) = ({t : t o alpha ~ T}, {t : t o alpha ~ F}) over the classes.
  const CMonoid& cm = bundled("functional-2");
  const CAlgebra& m = cm.tests();
  for (const auto& th : maximal_congruences(*ada_of(cm.base.m))) {
    const ThetaHom h = theta_hom(cm, th);
    for (ElemId a = 0; a < m.size(); ++a) {
      for (std::size_t x = 0; x < h.quotient.ground_size(); ++x) {
        const ElemId c = cm.compose(h.quotient.reps[x], a);
        EXPECT_EQ(h.rho[a].a.test(x), th.related(c, m.t));
        EXPECT_EQ(h.rho[a].b.test(x), th.related(c, m.f));
      }
    }
  }
}

TEST(ThetaHom, CorruptedCompositionFailsPreservation) {
  CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  const CAlgebra& m = cm.tests();
  cm.comp[1 * 3 + m.u] = m.t;  // a o U = T
  const Congruence th = maximal_congruences(*ada_of(cm.base.m))[0];
  const AxiomReport r = check_phi_rho_theta_hom(cm, th);
  EXPECT_TRUE(r.find("hom.well-defined")->passed);
  EXPECT_FALSE(r.find("hom.rho-neg")->passed);
  EXPECT_FALSE(verify_embedding(cm, build_embedding(cm)).ok());
}

TEST(ThetaHom, BotClassInRhoIsInconsistent) {
  CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  const CAlgebra& m = cm.tests();
  cm.comp[cm.bot() * 3 + m.u] = m.t;
  const Congruence th = maximal_congruences(*ada_of(cm.base.m))[0];
  EXPECT_THROW(theta_hom(cm, th), ModelInconsistency);
  const AxiomReport r = check_phi_rho_theta_hom(cm, th);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find("hom.well-defined")->passed);
}

TEST(ThetaHom, PhiMovingBotIsInconsistent) {
  CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  (*cm.base.s.mul)[2 * 3 + 1] = 1;  // bot . a = a
  const Congruence th = maximal_congruences(*ada_of(cm.base.m))[0];
  EXPECT_THROW(theta_hom(cm, th), ModelInconsistency);
}

TEST(Embedding, SizesOfX) {
  const std::map<std::string, std::size_t> expected = {
      {"functional-1", 1}, {"functional-2", 4}, {"basic-1bot", 1}, {"basic-1abot", 2}};
  for (const auto& nm : bundled_c_monoids()) {
    const Embedding emb = build_embedding(nm.model);
    std::size_t sum = 0;
    for (const ETheta& e : emb.family.e) sum += e.partition.block_count() - 1;
    EXPECT_EQ(emb.x_size(), sum) << nm.name;
    if (auto it = expected.find(nm.name); it != expected.end()) {
      EXPECT_EQ(emb.x_size(), it->second) << nm.name;
    }
  }
}

TEST(Embedding, VerifiesOnAllBundled) {
  for (const auto& nm : bundled_c_monoids()) {
    const Embedding emb = build_embedding(nm.model);
    const AxiomReport r = verify_embedding(nm.model, emb);
    EXPECT_TRUE(r.ok()) << nm.name;
    for (const char* label :
         {"embed.phi-injective", "embed.rho-injective", "embed.mul", "embed.one", "embed.bot",
          "embed.constants", "embed.neg", "embed.and", "embed.or", "embed.action", "embed.comp",
          "embed.finite-X"}) {
      EXPECT_NE(r.find(label), nullptr) << nm.name << " " << label;
    }
    EXPECT_EQ(r.find("embed.target-agrees") != nullptr, emb.target.has_value()) << nm.name;
  }
}

TEST(Embedding, TargetOnlyWhenSmall) {
  EXPECT_TRUE(build_embedding(bundled("basic-1abot")).target.has_value());
  EXPECT_TRUE(build_embedding(bundled("basic-1bot")).target.has_value());
  EXPECT_FALSE(build_embedding(bundled("functional-2")).target.has_value());
}

// phi(s) at the point (theta, r) is the class of r . s under the same theta,
// or the global bot when r . s falls in bot's class.
TEST(Embedding, RepointingAgainstOracle) {
  for (const auto& nm : bundled_c_monoids()) {
    const CMonoid& cm = nm.model;
    const Embedding emb = build_embedding(cm);
    const std::size_t nx = emb.x_size();
    std::set<std::size_t> seen_branches;
    for (ElemId s = 0; s < cm.programs().size(); ++s) {
      const PointedSelfMap& f = emb.morphism.phi[s];
      ASSERT_EQ(f.values.size(), nx + 1);
      EXPECT_EQ(f(static_cast<std::uint32_t>(nx)), nx);
      for (std::size_t p = 0; p < nx; ++p) {
        const TaggedPoint pt = emb.points[p];
        const ETheta& e = emb.family.e[pt.theta];
        const ElemId image = cm.times(pt.rep, s);
        if (e.related(image, cm.bot())) {
          EXPECT_EQ(f(static_cast<std::uint32_t>(p)), nx);
          seen_branches.insert(0);
        } else {
          const TaggedPoint target = emb.points[f(static_cast<std::uint32_t>(p))];
          EXPECT_EQ(target.theta, pt.theta);
          EXPECT_TRUE(e.related(target.rep, image));
          seen_branches.insert(1);
        }
      }
    }
    EXPECT_EQ(seen_branches.size(), 2u) << nm.name;
  }
}

TEST(Embedding, InjectiveOnFunctional) {
  const CMonoid& cm = bundled("functional-2");
  const Embedding emb = build_embedding(cm);
  std::set<PointedSelfMap> images(emb.morphism.phi.begin(), emb.morphism.phi.end());
  EXPECT_EQ(images.size(), cm.programs().size());
  std::set<PairOfSets> tests(emb.morphism.rho.begin(), emb.morphism.rho.end());
  EXPECT_EQ(tests.size(), cm.tests().size());
}

TEST(Embedding, PointNames) {
  const CMonoid& cm = bundled("basic-1abot");
  const Embedding emb = build_embedding(cm);
  EXPECT_EQ(point_name(cm, emb, 0), "theta0:1");
  EXPECT_EQ(point_name(cm, emb, 1), "theta0:a");
}

TEST(Embedding, ImageModelIsACMonoid) {
  const CMonoid& cm = bundled("pointwise-1abot-1");
  const CMonoid image = image_model(cm, build_embedding(cm));
  EXPECT_TRUE(check_c_monoid(image).ok());
  EXPECT_EQ(image.base.act, cm.base.act);
  EXPECT_EQ(image.comp, cm.comp);
  EXPECT_NE(image.programs().elements, cm.programs().elements);
}

TEST(Separation, AllBundled) {
  for (const auto& nm : bundled_c_monoids()) {
    const AxiomReport r = check_separation(nm.model);
    EXPECT_TRUE(r.ok()) << nm.name;
    EXPECT_NE(r.find("separation.rho-T-implies-T"), nullptr);
  }
}

}  // namespace
}  // namespace cmon
