#include "cmon/cli/commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cmon/actions.hpp"
#include "cmon/bundled.hpp"
#include "cmon/cli/model_file.hpp"
#include "cmon/congruence.hpp"
#include "cmon/embedding.hpp"
#include "cmon/error.hpp"
#include "cmon/terms.hpp"

namespace cmon::cli {
namespace {

int finish(const AxiomReport& r, std::ostream& out) {
  r.print(out);
  out << "result: " << (r.ok() ? "PASS" : "FAIL") << " (" << r.results().size() << " laws, "
      << r.failures() << " failed)\n";
  return r.ok() ? pass : failure;
}

const Ada& ada_of_model(const Model& m) {
  if (const auto* a = std::get_if<Ada>(&m)) return *a;
  const TestAlgebra* tests = nullptr;
  if (const auto* cs = std::get_if<CSet>(&m)) tests = &cs->m;
  if (const auto* cm = std::get_if<CMonoid>(&m)) tests = &cm->base.m;
  if (tests != nullptr) {
    if (const Ada* a = ada_of(*tests)) return *a;
  }
  throw StructuralError(std::string("a ") + model_kind(m) + " model has no ada; congruences need one");
}

const CMonoid& c_monoid_of(const Model& m) {
  if (const auto* cm = std::get_if<CMonoid>(&m)) return *cm;
  throw StructuralError(std::string("expected a cmonoid model, found ") + model_kind(m));
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) {
    std::istringstream w(part);
    std::string word;
    w >> word;
    if (!word.empty()) out.push_back(word);
  }
  return out;
}

PointedCarrier parse_programs(const GenOptions& opts) {
  const Names names = split(opts.programs, ',');
  if (names.size() < 2) throw StructuralError("--S needs at least the identity and bot");
  const auto bot = static_cast<ElemId>(names.size() - 1);
  if (!opts.mul) return band_monoid(names, 0, bot);
  PointedCarrier s;
  s.elements = names;
  s.one = 0;
  s.bot = bot;
  s.mul.emplace();
  std::istringstream all(*opts.mul);
  std::string row;
  std::size_t count = 0;
  while (std::getline(all, row, '/')) {
    std::istringstream in(row);
    std::size_t cols = 0;
    for (std::string w; in >> w; ++cols) {
      const auto id = s.find(w);
      if (!id) throw StructuralError("--mul: unknown element '" + w + "'");
      s.mul->push_back(*id);
    }
    if (cols != names.size()) throw StructuralError("--mul: row " + std::to_string(count + 1) + " has the wrong length");
    ++count;
  }
  if (count != names.size()) throw StructuralError("--mul needs one row per element");
  s.validate();
  return s;
}

void congruence_line(std::ostream& out, const std::string& tag, const Congruence& c,
                     const Names& names) {
  out << "  " << tag << ' ' << c.partition.render(names) << " blocks=" << c.partition.block_count()
      << '\n';
}

AxiomResult fact(std::string label, std::string title, bool passed, std::string note = {}) {
  AxiomResult r;
  r.label = std::move(label);
  r.title = std::move(title);
  r.checked = 1;
  r.passed = passed;
  if (!passed) r.witness = Witness{{}, std::move(note)};
  return r;
}

struct Tally {
  std::size_t laws = 0;
  std::size_t failed = 0;

  void section(std::ostream& out, const std::string& title, const AxiomReport& r) {
    out << "== " << title << '\n';
    r.print(out);
    laws += r.results().size();
    failed += r.failures();
  }
};

}  // namespace

int cmd_check(const std::string& path, const SizeCaps& caps, std::ostream& out) {
  const Model m = read_model_file(path);
  out << "check " << path << " (" << model_kind(m) << ")\n";
  AxiomReport r = std::visit(
      [&](const auto& x) -> AxiomReport {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CAlgebra>) {
          AxiomReport rep = check_c_algebra(x);
          rep.append(check_tfu_constants(x));
          return rep;
        } else if constexpr (std::is_same_v<T, Ada>) {
          return check_ada(x);
        } else if constexpr (std::is_same_v<T, BoolAlg>) {
          return check_bool(x);
        } else if constexpr (std::is_same_v<T, CSet>) {
          require_carrier(x.s.size(), caps, "program carrier");
          return check_c_set(x);
        } else if constexpr (std::is_same_v<T, CMonoid>) {
          require_carrier(x.programs().size(), caps, "program carrier");
          return check_c_monoid(x);
        } else {
          require_carrier(x.base.size(), caps, "program carrier");
          return check_b_monoid(x);
        }
      },
      m);
  return finish(r, out);
}

int cmd_congruences(const std::string& path, bool maximal_only, const SizeCaps& caps,
                    std::ostream& out) {
  const Model m = read_model_file(path);
  const Ada& a = ada_of_model(m);
  const Names& names = a.base.elements;
  out << "congruences " << path << " (|M|=" << a.size() << ")\n";
  if (!maximal_only) {
    const auto lattice = all_congruences(a, caps);
    out << "lattice: " << lattice.size() << " congruences\n";
    for (std::size_t i = 0; i < lattice.size(); ++i) {
      congruence_line(out, "c" + std::to_string(i), lattice[i], names);
    }
  }
  if (a.size() < 2) {
    out << "maximal: none (trivial ada)\n";
    return pass;
  }
  const auto maximal = maximal_congruences(a, caps);
  out << "maximal: " << maximal.size() << '\n';
  for (std::size_t i = 0; i < maximal.size(); ++i) {
    congruence_line(out, "theta" + std::to_string(i), maximal[i], names);
  }
  return pass;
}

int cmd_embed(const std::string& path, bool verify, const std::optional<std::string>& out_path,
              const SizeCaps& caps, std::ostream& out) {
  const Model model = read_model_file(path);
  const CMonoid& cm = c_monoid_of(model);
  const Embedding emb = build_embedding(cm, caps);
  const Names& tests = cm.tests().elements;
  out << "embed " << path << '\n';
  out << "maximal congruences: " << emb.family.thetas.size() << '\n';
  for (std::size_t i = 0; i < emb.family.thetas.size(); ++i) {
    congruence_line(out, emb.family.names[i], emb.family.thetas[i], tests);
    out << "    E: " << emb.family.e[i].partition.render(cm.programs().elements) << '\n';
  }
  out << "X: " << emb.x_size() << " points\n";
  for (std::size_t x = 0; x < emb.x_size(); ++x) {
    out << "  x" << x << " = " << point_name(cm, emb, x) << '\n';
  }
  out << "phi:\n";
  for (std::size_t s = 0; s < cm.programs().size(); ++s) {
    out << "  " << cm.programs().elements[s] << " -> " << map_name(emb.morphism.phi[s]) << '\n';
  }
  out << "rho:\n";
  for (std::size_t a = 0; a < tests.size(); ++a) {
    out << "  " << tests[a] << " -> " << pair_name(emb.morphism.rho[a]) << '\n';
  }
  out << "target: "
      << (emb.target ? "tabled (" + std::to_string(emb.target->programs().size()) + " maps)"
                     : std::string("lazy"))
      << '\n';
  int code = pass;
  if (verify) code = finish(verify_embedding(cm, emb), out);
  if (out_path) {
    write_model_file(*out_path, Model{image_model(cm, emb)});
    out << "image written to " << *out_path << '\n';
  }
  return code;
}

int cmd_identity(const IdentityOptions& opts, const std::string& text, const SizeCaps& caps,
                 std::ostream& out) {
  Identity id;
  try {
    id = parse_identity(text);
  } catch (const ParseError& e) {
    throw ParseError("byte " + std::to_string(e.position()) + ": " + e.what(), e.position());
  }
  out << "identity " << print(id) << '\n';
  if (opts.universal) {
    const UniversalResult r = check_identity_universal(
        id, *opts.universal, opts.b_theory ? Theory::b_monoid : Theory::c_monoid, caps);
    out << "models:";
    for (const auto& m : r.models) out << ' ' << m;
    out << "\nassignments: " << r.checked << '\n';
    if (r.counterexample) out << "counterexample: " << r.counterexample->to_string() << '\n';
    out << "verdict: " << verdict_name(r.verdict) << '\n';
    return r.verdict == Verdict::refuted ? failure : pass;
  }
  std::optional<Model> model;
  std::string name;
  if (opts.functional) {
    model = Model{functional_c_monoid(*opts.functional, caps)};
    name = "functional-" + std::to_string(*opts.functional);
  } else if (opts.path) {
    model = read_model_file(*opts.path);
    name = *opts.path;
  } else {
    throw StructuralError("identity needs a model path, --functional K or --universal N");
  }
  std::optional<EvalModel> view;
  if (const auto* cm = std::get_if<CMonoid>(&*model)) view.emplace(*cm);
  if (const auto* bm = std::get_if<BMonoid>(&*model)) view.emplace(*bm);
  if (!view) throw StructuralError(std::string("identities need a cmonoid or bmonoid, found ") + model_kind(*model));
  const IdentityResult r = check_identity(*view, id, name, caps);
  out << "assignments: " << r.checked;
  if (id.quasi()) out << " (hypothesis failed in " << r.vacuous << ")";
  out << '\n';
  if (r.holds) {
    out << "holds\n";
    return pass;
  }
  out << "counterexample: " << r.counterexample->to_string() << '\n';
  out << "certified: " << (certifies(*view, id, *r.counterexample) ? "yes" : "no") << '\n';
  return failure;
}

int cmd_gen(const GenOptions& opts, const SizeCaps& caps, std::ostream& out) {
  Model m;
  if (opts.kind == "functional") {
    m = functional_c_monoid(opts.x, caps);
  } else if (opts.kind == "basic") {
    m = basic_c_monoid(parse_programs(opts));
  } else if (opts.kind == "pointwise") {
    m = pointwise_c_monoid(parse_programs(opts), opts.x, caps);
  } else if (opts.kind == "power") {
    m = power_ada(opts.x, caps);
  } else if (opts.kind == "bfunctional") {
    m = functional_b_monoid(opts.x, caps);
  } else {
    throw StructuralError("unknown kind '" + opts.kind + "'");
  }
  if (opts.out_path) {
    write_model_file(*opts.out_path, m);
    out << "wrote " << model_kind(m) << " to " << *opts.out_path << '\n';
  } else {
    write_model(out, m);
  }
  return pass;
}

int cmd_selftest(const SizeCaps& caps, std::ostream& out) {
  Tally tally;
  for (const auto& nm : bundled_c_monoids()) {
    tally.section(out, "c-monoid axioms: " + nm.name, check_c_monoid(nm.model));
  }
  tally.section(out, "ada: 3", check_ada(mk_three()));
  for (std::size_t k = 1; k <= 3; ++k) {
    tally.section(out, "ada: 3^" + std::to_string(k), check_ada(power_ada(k, caps)));
  }
  for (const auto& nm : bundled_b_monoids()) {
    tally.section(out, "b-monoid axioms: " + nm.name, check_b_monoid(nm.model));
  }

  AxiomReport counts;
  const std::size_t expected[] = {1, 2, 3};
  for (std::size_t k = 1; k <= 3; ++k) {
    const Ada a = power_ada(k, caps);
    const auto maximal = maximal_congruences(a, caps);
    bool simple_quotients = true;
    for (const auto& theta : maximal) {
      simple_quotients = simple_quotients && iso_to_three(quotient_ada(a, theta).algebra).has_value();
    }
    const std::string tag = "3^" + std::to_string(k);
    counts.add(fact("maximal-count " + tag, "number of maximal congruences",
                    maximal.size() == expected[k - 1],
                    "found " + std::to_string(maximal.size())));
    counts.add(fact("quotients " + tag, "quotients by maximal congruences are 3", simple_quotients));
  }
  tally.section(out, "congruences of 3^k", counts);

  for (const auto& nm : bundled_c_monoids()) {
    const CMonoid& cm = nm.model;
    tally.section(out, "collection: " + nm.name, check_collection_props(cm.base, caps));
    tally.section(out, "domain: " + nm.name, check_rho_hom_props(cm, caps));
    const ThetaFamily fam = theta_family(cm.base, caps);
    const Ada& ada = *ada_of(cm.base.m);
    for (std::size_t i = 0; i < fam.thetas.size(); ++i) {
      AxiomReport r = check_prop_max_theta(ada, fam.thetas[i]);
      r.append(check_phi_rho_theta_hom(cm, fam.thetas[i]));
      tally.section(out, "theta: " + nm.name + " " + fam.names[i], r);
    }
    tally.section(out, "separation: " + nm.name, check_separation(cm, caps));
    const Embedding emb = build_embedding(cm, caps);
    tally.section(out, "embedding: " + nm.name, verify_embedding(cm, emb));
  }

  AxiomReport corpus;
  for (const auto& e : builtin_corpus()) {
    const UniversalResult u = check_identity_universal(e.identity, 2, e.theory, caps);
    AxiomResult r;
    r.label = e.label;
    r.title = e.text;
    r.checked = u.checked;
    r.passed = u.verdict != Verdict::refuted;
    if (!r.passed) r.witness = Witness{{}, u.counterexample->to_string()};
    corpus.add(std::move(r));
  }
  tally.section(out, "corpus up to |X| = 2", corpus);

  AxiomReport corollary;
  {
    const Identity id = parse_identity("(f @ T)[f, f] = f");
    const UniversalResult u = check_identity_universal(id, 2, Theory::c_monoid, caps);
    corollary.add(fact("image-identity", print(id), u.verdict != Verdict::refuted,
                       u.counterexample ? u.counterexample->to_string() : ""));
    const Identity wrong = parse_identity("%a[s, t] = %a[t, s]");
    const UniversalResult w = check_identity_universal(wrong, 2, Theory::c_monoid, caps);
    bool certified = false;
    if (w.counterexample) {
      for (const auto& nm : bundled_c_monoids()) {
        if (nm.name == w.counterexample->model) certified = certifies(EvalModel(nm.model), wrong, *w.counterexample);
      }
      if (w.counterexample->model.starts_with("functional-")) {
        const std::size_t k = std::stoul(w.counterexample->model.substr(11));
        certified = certifies(EvalModel(functional_c_monoid(k, caps)), wrong, *w.counterexample);
      }
    }
    corollary.add(fact("refuted", print(wrong), w.verdict == Verdict::refuted && certified,
                       "not refuted with a certified counterexample"));
  }
  tally.section(out, "identities", corollary);

  out << "selftest: " << (tally.failed == 0 ? "PASS" : "FAIL") << " (" << tally.laws << " laws, "
      << tally.failed << " failed)\n";
  return tally.failed == 0 ? pass : failure;
}

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite C-monoids, adas, congruences and the functional embedding", "cmon"};
  app.require_subcommand(1);
  app.fallthrough();
  SizeCaps caps;
  app.add_option("--max-carrier", caps.max_carrier, "largest carrier a sweep may build")
      ->capture_default_str();
  app.add_option("--max-x", caps.max_x, "largest ground set for generated models")
      ->capture_default_str();

  std::string path;
  auto* check = app.add_subcommand("check", "run the axiom checkers matching a model file");
  check->add_option("model", path, "model file")->required();

  bool maximal = false;
  auto* congr = app.add_subcommand("congruences", "list the congruence lattice of an ada");
  congr->add_option("model", path, "model file")->required();
  congr->add_flag("--maximal", maximal, "only the maximal proper congruences");

  bool verify = false;
  std::optional<std::string> out_path;
  auto* embed = app.add_subcommand("embed", "embed a C-monoid into a functional one");
  embed->add_option("model", path, "cmonoid model file")->required();
  embed->add_flag("--verify", verify, "verify injectivity and preservation");
  embed->add_option("--out", out_path, "write the image model here");

  IdentityOptions id_opts;
  std::vector<std::string> id_args;
  std::string theory = "c";
  auto* ident = app.add_subcommand("identity", "check an identity or quasi-identity");
  ident->add_option("args", id_args, "[model] \"lhs = rhs\"")->required()->expected(1, 2);
  ident->add_option("--functional", id_opts.functional, "use functional_c_monoid(K)");
  ident->add_option("--universal", id_opts.universal, "search functional models up to |X| = N");
  ident->add_option("--theory", theory, "b or c, for --universal")
      ->check(CLI::IsMember({"b", "c"}))
      ->capture_default_str();

  GenOptions gen_opts;
  auto* gen = app.add_subcommand("gen", "generate a model file");
  gen->add_option("kind", gen_opts.kind, "functional, basic, pointwise, power or bfunctional")
      ->required()
      ->check(CLI::IsMember({"functional", "basic", "pointwise", "power", "bfunctional"}));
  gen->add_option("--x", gen_opts.x, "ground set size")->capture_default_str();
  gen->add_option("--S", gen_opts.programs, "programs, identity first and bot last")
      ->capture_default_str();
  gen->add_option("--mul", gen_opts.mul, "multiplication rows separated by '/'");
  gen->add_option("--out", gen_opts.out_path, "output path (default: standard output)");

  auto* selftest = app.add_subcommand("selftest", "run every built-in verification");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? pass : usage;
  }

  try {
    if (*check) return cmd_check(path, caps, out);
    if (*congr) return cmd_congruences(path, maximal, caps, out);
    if (*embed) return cmd_embed(path, verify, out_path, caps, out);
    if (*ident) {
      if (id_args.size() == 2) id_opts.path = id_args[0];
      id_opts.b_theory = theory == "b";
      return cmd_identity(id_opts, id_args.back(), caps, out);
    }
    if (*gen) return cmd_gen(gen_opts, caps, out);
    if (*selftest) return cmd_selftest(caps, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage;
  } catch (const SizeCapError& e) {
    err << "size cap: " << e.what() << '\n';
    return cap;
  } catch (const ModelInconsistency& e) {
    err << "model inconsistency: " << e.what() << '\n';
    return failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace cmon::cli
