#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmon/actions.hpp"
#include "cmon/caps.hpp"

namespace cmon {

enum class Sort { program, test };

const char* sort_name(Sort s);

enum class Op {
  // program sort
  var,
  one,
  bot,
  mul,  // kids: left, right
  act,  // kids: test, then, else
  // test sort
  tvar,
  t,
  f,
  u,
  neg,
  conj,
  disj,
  down,
  comp,  // kids: program, test
};

/// Byte range in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

/// Well-sorted term. Variable names keep their sigil: "s", "%a".
struct Term {
  Op op = Op::var;
  std::string name;
  std::vector<Term> kids;
  Span span;

  Sort sort() const;

  /// Structural; spans are ignored.
  friend bool operator==(const Term& l, const Term& r);
};

Term make_var(std::string name);
Term make_tvar(std::string name);
Term make_const(Op op);
Term make_node(Op op, std::vector<Term> kids);

/// lhs = rhs, or hyp_lhs = hyp_rhs ==> lhs = rhs.
struct Identity {
  std::optional<std::pair<Term, Term>> hypothesis;
  Term lhs;
  Term rhs;

  bool quasi() const { return hypothesis.has_value(); }
  Sort sort() const { return lhs.sort(); }
  friend bool operator==(const Identity&, const Identity&) = default;
};

/// Throws ParseError (byte position) on syntax or sort errors.
Term parse_term(std::string_view text, std::optional<Sort> expected = std::nullopt);
Identity parse_identity(std::string_view text);

/// Minimal parentheses; parse(print(t)) == t.
std::string print(const Term& t);
std::string print(const Identity& id);

/// Program variables, then test variables, each sorted by name.
std::vector<std::string> variables(const Identity& id);

/// Uniform read access to a C-monoid or a B-monoid for evaluation.
class EvalModel {
 public:
  explicit EvalModel(const CMonoid& cm) : c_(&cm) {}
  explicit EvalModel(const BMonoid& bm) : b_(&bm) {}

  const Names& programs() const;
  const Names& tests() const;
  bool is_c_monoid() const { return c_ != nullptr; }

  ElemId one() const;
  ElemId bot() const;
  ElemId times(ElemId s, ElemId t) const;
  ElemId apply(ElemId a, ElemId s, ElemId t) const;
  ElemId t() const;
  ElemId f() const;
  ElemId u() const;
  ElemId neg(ElemId a) const;
  ElemId conj(ElemId a, ElemId b) const;
  ElemId disj(ElemId a, ElemId b) const;
  ElemId down(ElemId a) const;
  ElemId compose(ElemId s, ElemId a) const;

 private:
  const CMonoid* c_ = nullptr;
  const BMonoid* b_ = nullptr;
};

/// Variable name (with sigil) to element index.
using Assignment = std::map<std::string, ElemId>;

/// Throws EvalError on unbound variables or symbols the model lacks.
ElemId eval(const Term& t, const EvalModel& model, const Assignment& env);

struct Counterexample {
  std::string model;
  std::vector<std::pair<std::string, std::string>> bindings;  // variable, element name
  Assignment assignment;
  std::string lhs;
  std::string rhs;

  std::string to_string() const;
};

struct IdentityResult {
  bool holds = true;
  std::uint64_t checked = 0;
  std::uint64_t vacuous = 0;
  std::optional<Counterexample> counterexample;
};

/// Exhaustive search in variables() order, last variable fastest.
IdentityResult check_identity(const EvalModel& model, const Identity& id,
                              const std::string& model_name = "model",
                              const SizeCaps& caps = default_caps());

/// Re-evaluates a counterexample; true iff both sides differ (and the
/// hypothesis, if any, holds).
bool certifies(const EvalModel& model, const Identity& id, const Counterexample& cex);

/// Which family of models an identity is meant for.
enum class Theory { b_monoid, c_monoid };

enum class Verdict { refuted, no_counterexample_up_to_bound };

const char* verdict_name(Verdict v);

struct UniversalResult {
  Verdict verdict = Verdict::no_counterexample_up_to_bound;
  std::vector<std::string> models;  // checked, in order
  std::uint64_t checked = 0;
  std::optional<Counterexample> counterexample;
};

/// C-monoid theory: functional_c_monoid(k) for k = 1..x_max, then the
/// bundled non-functional models. B-monoid theory: functional_b_monoid(k).
UniversalResult check_identity_universal(const Identity& id, std::size_t x_max,
                                         Theory theory = Theory::c_monoid,
                                         const SizeCaps& caps = default_caps());

struct CorpusEntry {
  std::string label;
  std::string title;
  Theory theory;
  std::string text;
  Identity identity;
};

/// B1-B6, BM1-BM8, C1-C7, A1-A6, EC1-EC8, EM1-EM9.
const std::vector<CorpusEntry>& builtin_corpus();

}  // namespace cmon
