#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cmon/bundled.hpp"
#include "cmon/cli/commands.hpp"
#include "cmon/cli/model_file.hpp"
#include "cmon/error.hpp"

namespace cmon::cli {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cmon(std::vector<std::string> args) {
  args.insert(args.begin(), "cmon");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string tmp(const std::string& name) {
  const fs::path dir = fs::path(CMON_TEST_TMPDIR) / "cli";
  fs::create_directories(dir);
  return (dir / name).string();
}

Model round_trip(const Model& m) {
  std::stringstream s;
  write_model(s, m);
  return read_model(s);
}

TEST(ModelFile, RoundTripBundled) {
  for (const auto& nm : bundled_c_monoids()) {
    EXPECT_EQ(round_trip(nm.model), Model(nm.model)) << nm.name;
  }
  for (const auto& nm : bundled_b_monoids()) {
    EXPECT_EQ(round_trip(nm.model), Model(nm.model)) << nm.name;
  }
}

TEST(ModelFile, RoundTripAlgebrasAndCSets) {
  EXPECT_EQ(round_trip(mk_three()), Model(mk_three()));
  EXPECT_EQ(round_trip(power_ada(2)), Model(power_ada(2)));
  EXPECT_EQ(round_trip(mk_three().base), Model(mk_three().base));
  EXPECT_EQ(round_trip(power_bool(2)), Model(power_bool(2)));
  EXPECT_EQ(round_trip(functional_c_set(1)), Model(functional_c_set(1)));
  EXPECT_EQ(round_trip(mm_c_set(mk_three().base)), Model(mm_c_set(mk_three().base)));
}

TEST(ModelFile, Kinds) {
  EXPECT_STREQ(model_kind(Model(mk_three())), "ada");
  EXPECT_STREQ(model_kind(Model(mk_three().base)), "calgebra");
  EXPECT_STREQ(model_kind(Model(mk_two())), "boolalg");
  EXPECT_STREQ(model_kind(Model(functional_c_set(1))), "cset");
  EXPECT_STREQ(model_kind(Model(functional_c_monoid(1))), "cmonoid");
  EXPECT_STREQ(model_kind(Model(functional_b_monoid(1))), "bmonoid");
}

std::size_t parse_error_line(const std::string& text) {
  std::istringstream in(text);
  try {
    read_model(in);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error";
  return 0;
}

const char* kThree =
    "[ada]\n"
    "elements = T F U\n"
    "T = T\nF = F\nU = U\n"
    "neg = F T U\n"
    "and = T F U / F F F / U U U\n"
    "or = T T T / T F U / U U U\n"
    "down = T F F\n";

TEST(ModelFile, ParsesHandWritten) {
  std::istringstream in(kThree);
  EXPECT_EQ(read_model(in), Model(mk_three()));
}

TEST(ModelFile, LineNumberedErrors) {
  std::string bad = kThree;
  bad.replace(bad.find("neg = F T U"), 11, "neg = F T X");
  EXPECT_EQ(parse_error_line(bad), 6u);
  EXPECT_EQ(parse_error_line(std::string(kThree) + "colour = red\n"), 10u);
  EXPECT_EQ(parse_error_line("# comment\n\n[cmonoid]\nprograms = 1 bot\n"), 3u);
  EXPECT_EQ(parse_error_line("[ada]\nelements T F U\n"), 2u);
  EXPECT_EQ(parse_error_line("[nonsense]\n"), 1u);
}

TEST(ModelFile, StructuralErrorsAreNotParseErrors) {
  std::string bad = kThree;
  bad.replace(bad.find("T = T"), 5, "T = U");
  std::istringstream in(bad);
  EXPECT_THROW(read_model(in), StructuralError);
}

TEST(ModelFile, LawViolationsLoadAndFailTheCheck) {
  std::string bad = kThree;
  bad.replace(bad.find("neg = F T U"), 11, "neg = F T T");
  const std::string path = tmp("bad-neg.cm");
  std::ofstream(path) << bad;
  EXPECT_NO_THROW(read_model_file(path));
  EXPECT_EQ(cmon({"check", path}).code, failure);
}

TEST(Cli, GenThenCheck) {
  const std::string path = tmp("basic.cm");
  CliRun g = cmon({"gen", "basic", "--S", "1,a,bot", "--out", path});
  ASSERT_EQ(g.code, pass) << g.err;
  CliRun c = cmon({"check", path});
  EXPECT_EQ(c.code, pass) << c.out << c.err;
  EXPECT_NE(c.out.find("result: PASS"), std::string::npos);
  EXPECT_EQ(read_model_file(path), Model(basic_c_monoid(monoid_one_a_bot())));
}

TEST(Cli, GenKinds) {
  for (const std::string kind : {"functional", "pointwise", "power", "bfunctional"}) {
    const std::string path = tmp(kind + ".cm");
    ASSERT_EQ(cmon({"gen", kind, "--x", "2", "--out", path}).code, pass) << kind;
    EXPECT_EQ(cmon({"check", path}).code, pass) << kind;
  }
  EXPECT_EQ(read_model_file(tmp("functional.cm")), Model(functional_c_monoid(2)));
}

TEST(Cli, GenWithMultiplication) {
  const std::string path = tmp("mul.cm");
  CliRun g = cmon({"gen", "basic", "--S", "1,a,bot", "--mul", "1 a bot / a a bot / bot bot bot",
                "--out", path});
  ASSERT_EQ(g.code, pass) << g.err;
  // a . a = bot makes a a zero-divisor.
  CliRun z = cmon({"gen", "basic", "--S", "1,a,bot", "--mul", "1 a bot / a bot bot / bot bot bot"});
  EXPECT_EQ(z.code, usage);
}

TEST(Cli, CheckFailsOnCorruptedModel) {
  CMonoid cm = basic_c_monoid(monoid_one_a_bot());
  cm.base.act[(2 * 3 + 1) * 3 + 0] = 1;  // U[a, 1] = a
  const std::string path = tmp("broken.cm");
  write_model_file(path, cm);
  CliRun c = cmon({"check", path});
  EXPECT_EQ(c.code, failure);
  EXPECT_NE(c.out.find("EC1"), std::string::npos);
  EXPECT_NE(c.out.find("result: FAIL"), std::string::npos);
}

TEST(Cli, Congruences) {
  const std::string path = tmp("p2.cm");
  ASSERT_EQ(cmon({"gen", "power", "--x", "2", "--out", path}).code, pass);
  CliRun r = cmon({"congruences", path, "--maximal"});
  EXPECT_EQ(r.code, pass);
  EXPECT_NE(r.out.find("maximal: 2"), std::string::npos) << r.out;
  CliRun all = cmon({"congruences", path});
  EXPECT_EQ(all.code, pass);
}

TEST(Cli, IdentityOnFunctional) {
  CliRun r = cmon({"identity", "(f @ T)[f, f] = f", "--functional", "2"});
  EXPECT_EQ(r.code, pass) << r.out << r.err;
  CliRun w = cmon({"identity", "%a[s, t] = %a[t, s]", "--functional", "2"});
  EXPECT_EQ(w.code, failure);
  EXPECT_NE(w.out.find("certified: yes"), std::string::npos) << w.out;
}

TEST(Cli, IdentityUniversalAndModelFile) {
  CliRun u = cmon({"identity", "%a & (%b & %c) = (%a & %b) & %c", "--universal", "2"});
  EXPECT_EQ(u.code, pass) << u.out;
  EXPECT_NE(u.out.find("NO-COUNTEREXAMPLE-UP-TO-BOUND"), std::string::npos) << u.out;
  CliRun b = cmon({"identity", "%a[s, s] = s", "--universal", "2", "--theory", "b"});
  EXPECT_EQ(b.code, pass) << b.out;
  CliRun c = cmon({"identity", "%a[s, s] = s", "--universal", "2"});
  EXPECT_EQ(c.code, failure);
  EXPECT_NE(c.out.find("REFUTED"), std::string::npos) << c.out;

  const std::string path = tmp("basic2.cm");
  ASSERT_EQ(cmon({"gen", "basic", "--out", path}).code, pass);
  EXPECT_EQ(cmon({"identity", path, "s . 1 = s"}).code, pass);
}

TEST(Cli, Embed) {
  const std::string path = tmp("embed-src.cm");
  const std::string image = tmp("embed-img.cm");
  ASSERT_EQ(cmon({"gen", "basic", "--out", path}).code, pass);
  CliRun r = cmon({"embed", path, "--verify", "--out", image});
  EXPECT_EQ(r.code, pass) << r.out << r.err;
  EXPECT_EQ(cmon({"check", image}).code, pass);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cmon({"identity", "s = ", "--functional", "1"}).code, usage);
  EXPECT_EQ(cmon({"check", tmp("does-not-exist.cm")}).code, usage);
  EXPECT_EQ(cmon({"frobnicate"}).code, usage);
  EXPECT_EQ(cmon({"identity", "s = s", "--universal", "4"}).code, cap);
  EXPECT_EQ(cmon({"--max-carrier", "20", "gen", "functional", "--x", "3"}).code, cap);
  EXPECT_EQ(cmon({"identity", "s . t = t . s", "--functional", "1"}).code, pass);
  EXPECT_EQ(cmon({"identity", "s . t = t . s", "--functional", "2"}).code, failure);

  std::ofstream(tmp("garbled.cm")) << "[ada]\nelements = T F U\nT == T\n";
  CliRun g = cmon({"check", tmp("garbled.cm")});
  EXPECT_EQ(g.code, usage);
  EXPECT_NE(g.err.find("line 3"), std::string::npos) << g.err;
}

TEST(Cli, SelftestPasses) {
  std::ostringstream out;
  EXPECT_EQ(cmd_selftest(default_caps(), out), pass);
  EXPECT_NE(out.str().find("selftest: PASS"), std::string::npos);
}

}  // namespace
}  // namespace cmon::cli
