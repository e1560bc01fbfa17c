#include <gtest/gtest.h>

#include <random>

#include "cmon/bundled.hpp"
#include "cmon/error.hpp"
#include "cmon/terms.hpp"

namespace cmon {
namespace {

std::size_t error_position(std::string_view text) {
  try {
    parse_identity(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

TEST(Parse, Precedence) {
  const Identity id = parse_identity("%a | %b & %c = (%a | %b) & %c");
  EXPECT_EQ(id.lhs.op, Op::disj);
  EXPECT_EQ(id.lhs.kids[1].op, Op::conj);
  EXPECT_EQ(id.rhs.op, Op::conj);

  const Term comp = parse_term("s . t @ %a & %b");
  EXPECT_EQ(comp.op, Op::conj);
  EXPECT_EQ(comp.kids[0].op, Op::comp);
  EXPECT_EQ(comp.kids[0].kids[0].op, Op::mul);

  // '@' groups to the right, '.' to the left.
  const Term at = parse_term("r @ s @ %a");
  EXPECT_EQ(at.kids[1].op, Op::comp);
  const Term dot = parse_term("r . s . t");
  EXPECT_EQ(dot.kids[0].op, Op::mul);

  // Postfix binds tighter than prefix.
  const Term neg = parse_term("~%a!");
  EXPECT_EQ(neg.op, Op::neg);
  EXPECT_EQ(neg.kids[0].op, Op::down);

  const Term act = parse_term("(~%a)[s . t, bot]");
  EXPECT_EQ(act.op, Op::act);
  EXPECT_EQ(act.kids[0].op, Op::neg);
  EXPECT_EQ(act.kids[1].op, Op::mul);
  EXPECT_EQ(act.kids[2].op, Op::bot);
}

TEST(Parse, Constants) {
  EXPECT_EQ(parse_term("1").op, Op::one);
  EXPECT_EQ(parse_term("bot").op, Op::bot);
  EXPECT_EQ(parse_term("T").op, Op::t);
  EXPECT_EQ(parse_term("F").op, Op::f);
  EXPECT_EQ(parse_term("U").op, Op::u);
  EXPECT_EQ(parse_term("s1").op, Op::var);
  EXPECT_EQ(parse_term("%a").name, "%a");
}

TEST(Parse, Quasi) {
  const Identity id = parse_identity("%a[s, t] = %a[t, t] ==> (%a & %b)[s, t] = (%a & %b)[t, t]");
  EXPECT_TRUE(id.quasi());
  EXPECT_EQ(id.sort(), Sort::program);
  EXPECT_EQ(variables(id), (std::vector<std::string>{"s", "t", "%a", "%b"}));
}

TEST(Parse, Spans) {
  const Term t = parse_term("  %a & s @ %b");
  EXPECT_EQ(t.span.begin, 2u);
  EXPECT_EQ(t.span.end, 13u);
  EXPECT_EQ(t.kids[1].span.begin, 7u);
}

TEST(Parse, ErrorPositions) {
  EXPECT_EQ(error_position("s . = t"), 4u);
  EXPECT_EQ(error_position("%a[s, t = s"), 8u);
  EXPECT_EQ(error_position("s = t $"), 6u);
  EXPECT_EQ(error_position("% = T"), 1u);
  EXPECT_EQ(error_position("s t = s"), 2u);
  EXPECT_EQ(error_position("s"), 1u);
  EXPECT_EQ(error_position("(s = s"), 3u);
}

TEST(Parse, SortErrors) {
  // A test where a program belongs, and the reverse.
  EXPECT_EQ(error_position("s . %a = s"), 4u);
  EXPECT_EQ(error_position("s[t, u] = s"), 0u);
  EXPECT_EQ(error_position("~s = s"), 1u);
  EXPECT_EQ(error_position("%a @ %b = %a"), 0u);
  EXPECT_EQ(error_position("s @ %a = s"), 9u);
  EXPECT_THROW(parse_term("s", Sort::test), ParseError);
  EXPECT_NO_THROW(parse_term("s @ %a", Sort::test));
}

TEST(Print, MinimalParentheses) {
  EXPECT_EQ(print(parse_term("((%a & %b) | %c)")), "%a & %b | %c");
  EXPECT_EQ(print(parse_term("%a & (%b | %c)")), "%a & (%b | %c)");
  EXPECT_EQ(print(parse_term("%a & (%b & %c)")), "%a & (%b & %c)");
  EXPECT_EQ(print(parse_term("(s . t) . u")), "s . t . u");
  EXPECT_EQ(print(parse_term("s . (t . u)")), "s . (t . u)");
  EXPECT_EQ(print(parse_term("r @ (s @ %a)")), "r @ s @ %a");
  EXPECT_EQ(print(parse_term("(r . s) @ %a")), "r . s @ %a");
  EXPECT_EQ(print(parse_term("(~%a)!")), "(~%a)!");
  EXPECT_EQ(print(parse_term("~(%a!)")), "~%a!");
  EXPECT_EQ(print(parse_term("(%a & %b)[s,t]")), "(%a & %b)[s, t]");
  EXPECT_EQ(print(parse_term("%a[%b[s, t], u]")), "%a[%b[s, t], u]");
}

TEST(Print, CorpusRoundTrip) {
  ASSERT_EQ(builtin_corpus().size(), 44u);
  for (const auto& e : builtin_corpus()) {
    EXPECT_EQ(parse_identity(print(e.identity)), e.identity) << e.label;
    EXPECT_EQ(parse_identity(e.text), e.identity) << e.label;
  }
}

class RandomTerms {
 public:
  explicit RandomTerms(unsigned seed) : rng_(seed) {}

  Term gen(Sort s, int depth) {
    const bool leaf = depth == 0 || pick(4) == 0;
    if (s == Sort::program) {
      if (leaf) {
        switch (pick(4)) {
          case 0: return make_const(Op::one);
          case 1: return make_const(Op::bot);
          default: return make_var(pick(2) ? "s" : "t");
        }
      }
      if (pick(2)) return make_node(Op::mul, {gen(s, depth - 1), gen(s, depth - 1)});
      return make_node(Op::act, {gen(Sort::test, depth - 1), gen(s, depth - 1), gen(s, depth - 1)});
    }
    if (leaf) {
      switch (pick(5)) {
        case 0: return make_const(Op::t);
        case 1: return make_const(Op::f);
        case 2: return make_const(Op::u);
        default: return make_tvar(pick(2) ? "%a" : "%b");
      }
    }
    switch (pick(5)) {
      case 0: return make_node(Op::neg, {gen(s, depth - 1)});
      case 1: return make_node(Op::down, {gen(s, depth - 1)});
      case 2: return make_node(Op::conj, {gen(s, depth - 1), gen(s, depth - 1)});
      case 3: return make_node(Op::disj, {gen(s, depth - 1), gen(s, depth - 1)});
      default: return make_node(Op::comp, {gen(Sort::program, depth - 1), gen(s, depth - 1)});
    }
  }

 private:
  unsigned pick(unsigned n) { return std::uniform_int_distribution<unsigned>(0, n - 1)(rng_); }
  std::mt19937 rng_;
};

TEST(Print, RandomRoundTrip) {
  RandomTerms gen(7);
  for (int i = 0; i < 2000; ++i) {
    const Sort s = i % 2 ? Sort::program : Sort::test;
    const Term t = gen.gen(s, 5);
    const std::string text = print(t);
    EXPECT_EQ(parse_term(text, s), t) << text;
  }
}

TEST(Print, RandomTermsEvaluateAfterRoundTrip) {
  const CMonoid cm = functional_c_monoid(2);
  const EvalModel m(cm);
  RandomTerms gen(11);
  std::mt19937 rng(3);
  std::uniform_int_distribution<ElemId> pick(0, 8);
  for (int i = 0; i < 300; ++i) {
    const Term t = gen.gen(i % 2 ? Sort::program : Sort::test, 4);
    const Assignment env{{"s", pick(rng)}, {"t", pick(rng)}, {"%a", pick(rng)}, {"%b", pick(rng)}};
    EXPECT_EQ(eval(parse_term(print(t)), m, env), eval(t, m, env));
  }
}

TEST(Eval, BasicModel) {
  const CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  const EvalModel m(cm);
  const Assignment env{{"s", 1}, {"t", 0}, {"%a", 0}, {"%b", 2}};
  EXPECT_EQ(eval(parse_term("%a[s, t]"), m, env), 1u);
  EXPECT_EQ(eval(parse_term("(~%a)[s, t]"), m, env), 0u);
  EXPECT_EQ(eval(parse_term("%b[s, t]"), m, env), 2u);
  EXPECT_EQ(eval(parse_term("s . t"), m, env), 1u);
  EXPECT_EQ(eval(parse_term("bot @ %a"), m, env), cm.tests().u);
  EXPECT_EQ(eval(parse_term("%b!"), m, env), cm.tests().f);
  EXPECT_EQ(eval(parse_term("%a & %b"), m, env), cm.tests().u);
  EXPECT_EQ(eval(parse_term("F & %b"), m, env), cm.tests().f);
}

TEST(Eval, Errors) {
  const CMonoid cm = basic_c_monoid(monoid_one_bot());
  EXPECT_THROW(eval(parse_term("s . t"), EvalModel(cm), {{"s", 0}}), EvalError);
  EXPECT_THROW(eval(parse_term("s"), EvalModel(cm), {{"s", 7}}), EvalError);

  const BMonoid bm = functional_b_monoid(1);
  EXPECT_THROW(eval(parse_term("bot"), EvalModel(bm), {}), EvalError);
  EXPECT_THROW(eval(parse_term("U"), EvalModel(bm), {}), EvalError);
  EXPECT_THROW(eval(parse_term("T!"), EvalModel(bm), {}), EvalError);

  CMonoid plain = cm;
  plain.base.m = c_algebra_of(cm.base.m);
  EXPECT_THROW(eval(parse_term("T!"), EvalModel(plain), {}), EvalError);
}

TEST(Identity, CommutativityOfOrRefuted) {
  const CMonoid cm = basic_c_monoid(monoid_one_bot());
  const EvalModel m(cm);
  const Identity id = parse_identity("%a | %b = %b | %a");
  const IdentityResult r = check_identity(m, id, "basic");
  ASSERT_FALSE(r.holds);
  ASSERT_TRUE(r.counterexample.has_value());
  const Counterexample& c = *r.counterexample;
  EXPECT_EQ(c.bindings, (std::vector<std::pair<std::string, std::string>>{{"%a", "T"}, {"%b", "U"}}));
  EXPECT_EQ(c.lhs, "T");
  EXPECT_EQ(c.rhs, "U");
  EXPECT_EQ(c.to_string(), "in basic: %a=T %b=U; lhs=T rhs=U");
  EXPECT_TRUE(certifies(m, id, c));
  EXPECT_EQ(r.checked, 3u);
}

TEST(Identity, Certification) {
  const CMonoid cm = functional_c_monoid(2);
  const EvalModel m(cm);
  const Identity id = parse_identity("%a[s, t] = %a[t, s]");
  const IdentityResult r = check_identity(m, id);
  ASSERT_FALSE(r.holds);
  EXPECT_TRUE(certifies(m, id, *r.counterexample));

  Counterexample forged = *r.counterexample;
  forged.assignment["t"] = forged.assignment["s"];
  EXPECT_FALSE(certifies(m, id, forged));
  forged = *r.counterexample;
  forged.lhs = forged.rhs;
  EXPECT_FALSE(certifies(m, id, forged));
}

TEST(Identity, QuasiCountsVacuous) {
  const CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  const Identity id = parse_identity("s = t ==> s . u = t . u");
  const IdentityResult r = check_identity(EvalModel(cm), id);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checked, 27u);
  EXPECT_EQ(r.vacuous, 18u);
}

TEST(Identity, ClosedIdentity) {
  const CMonoid cm = basic_c_monoid(monoid_one_bot());
  const IdentityResult r = check_identity(EvalModel(cm), parse_identity("U! = F"));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.checked, 1u);
}

TEST(Identity, AssignmentCap) {
  SizeCaps caps;
  caps.max_assignments = 1000;
  const CMonoid cm = functional_c_monoid(2);
  const Identity ec2 = parse_identity("%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]");
  EXPECT_THROW(check_identity(EvalModel(cm), ec2, "m", caps), SizeCapError);
}

TEST(Identity, HaltingLawFailsWithNonHaltingTests) {
  // B1 holds for Boolean tests but not when U is present.
  const Identity b1 = parse_identity("%a[s, s] = s");
  const CMonoid cm = basic_c_monoid(monoid_one_bot());
  const IdentityResult r = check_identity(EvalModel(cm), b1);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.counterexample->bindings.back().second, "U");
  EXPECT_TRUE(check_identity(EvalModel(functional_b_monoid(2)), b1).holds);
}

TEST(Universal, ImageIdentity) {
  const UniversalResult r = check_identity_universal(parse_identity("(f @ T)[f, f] = f"), 2);
  EXPECT_EQ(r.verdict, Verdict::no_counterexample_up_to_bound);
  EXPECT_STREQ(verdict_name(r.verdict), "NO-COUNTEREXAMPLE-UP-TO-BOUND");
  EXPECT_EQ(r.models, (std::vector<std::string>{"functional-1", "functional-2", "basic-1bot",
                                                "basic-1abot", "pointwise-1abot-1",
                                                "pointwise-1abot-2"}));
}

TEST(Universal, SwapRefuted) {
  const Identity id = parse_identity("%a[s, t] = %a[t, s]");
  const UniversalResult r = check_identity_universal(id, 2);
  EXPECT_EQ(r.verdict, Verdict::refuted);
  EXPECT_STREQ(verdict_name(r.verdict), "REFUTED");
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(r.counterexample->model, "functional-1");
  const CMonoid cm = functional_c_monoid(1);
  EXPECT_TRUE(certifies(EvalModel(cm), id, *r.counterexample));
}

TEST(Universal, Bounds) {
  const Identity id = parse_identity("s = s");
  EXPECT_THROW(check_identity_universal(id, 0), StructuralError);
  EXPECT_THROW(check_identity_universal(id, 4), SizeCapError);
  const UniversalResult b = check_identity_universal(id, 2, Theory::b_monoid);
  EXPECT_EQ(b.models, (std::vector<std::string>{"bfunctional-1", "bfunctional-2"}));
}

TEST(Corpus, HoldsUpToTwo) {
  for (const auto& e : builtin_corpus()) {
    const UniversalResult r = check_identity_universal(e.identity, 2, e.theory);
    EXPECT_EQ(r.verdict, Verdict::no_counterexample_up_to_bound)
        << e.label << ": " << (r.counterexample ? r.counterexample->to_string() : "");
  }
}

// The identity engine and the dedicated checkers must reach the same verdict
// on every law, for sound models and for corrupted ones.
void expect_oracles_agree(const CMonoid& cm, const std::string& name) {
  const AxiomReport r = check_c_monoid(cm);
  for (const auto& e : builtin_corpus()) {
    if (e.theory != Theory::c_monoid) continue;
    const AxiomResult* res = r.find(e.label);
    ASSERT_NE(res, nullptr) << e.label;
    const IdentityResult ir = check_identity(EvalModel(cm), e.identity, name);
    EXPECT_EQ(ir.holds, res->passed) << name << " " << e.label;
    if (e.identity.quasi() && ir.holds) {
      EXPECT_EQ(ir.vacuous, res->vacuous) << name << " " << e.label;
    }
  }
}

TEST(Oracle, BundledCModels) {
  for (const auto& nm : bundled_c_monoids()) expect_oracles_agree(nm.model, nm.name);
}

TEST(Oracle, BundledBModels) {
  for (const auto& nm : bundled_b_monoids()) {
    const AxiomReport r = check_b_monoid(nm.model);
    for (const auto& e : builtin_corpus()) {
      if (e.theory != Theory::b_monoid) continue;
      const AxiomResult* res = r.find(e.label);
      ASSERT_NE(res, nullptr) << e.label;
      EXPECT_EQ(check_identity(EvalModel(nm.model), e.identity).holds, res->passed) << e.label;
    }
  }
}

TEST(Oracle, CorruptedCModels) {
  std::mt19937 rng(99);
  for (const auto& nm : bundled_c_monoids()) {
    if (nm.model.programs().size() > 9) continue;
    for (int trial = 0; trial < 10; ++trial) {
      CMonoid cm = nm.model;
      const std::size_t k = cm.tests().size();
      switch (trial % 3) {
        case 0: {
          std::uniform_int_distribution<std::size_t> pos(0, cm.base.act.size() - 1);
          cm.base.act[pos(rng)] = static_cast<ElemId>(rng() % cm.programs().size());
          break;
        }
        case 1: {
          std::uniform_int_distribution<std::size_t> pos(0, cm.comp.size() - 1);
          cm.comp[pos(rng)] = static_cast<ElemId>(rng() % k);
          break;
        }
        default: {
          CAlgebra& m = std::get<Ada>(cm.base.m).base;
          std::uniform_int_distribution<std::size_t> pos(0, m.and_table.size() - 1);
          m.and_table[pos(rng)] = static_cast<ElemId>(rng() % k);
          break;
        }
      }
      expect_oracles_agree(cm, nm.name + "#" + std::to_string(trial));
    }
  }
}

}  // namespace
}  // namespace cmon
