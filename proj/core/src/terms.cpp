#include "cmon/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "cmon/bundled.hpp"
#include "cmon/error.hpp"

namespace cmon {
namespace {

enum class Tok {
  ident,
  tident,
  one,
  lparen,
  rparen,
  lbrack,
  rbrack,
  comma,
  dot,
  at,
  tilde,
  bang,
  amp,
  bar,
  eq,
  implies,
  end
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text.substr(i, 3) == "==>") {
      out.push_back({Tok::implies, "==>", start});
      i += 3;
      continue;
    }
    if (ident_start(c) || c == '%') {
      const bool test = c == '%';
      if (test) ++i;
      if (i >= text.size() || !ident_start(text[i])) {
        throw ParseError("expected a name after '%'", i);
      }
      while (i < text.size() && ident_char(text[i])) ++i;
      out.push_back({test ? Tok::tident : Tok::ident, std::string(text.substr(start, i - start)), start});
      continue;
    }
    if (c == '1' && (i + 1 >= text.size() || !std::isalnum(static_cast<unsigned char>(text[i + 1])))) {
      out.push_back({Tok::one, "1", start});
      ++i;
      continue;
    }
    Tok kind;
    switch (c) {
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case '[': kind = Tok::lbrack; break;
      case ']': kind = Tok::rbrack; break;
      case ',': kind = Tok::comma; break;
      case '.': kind = Tok::dot; break;
      case '@': kind = Tok::at; break;
      case '~': kind = Tok::tilde; break;
      case '!': kind = Tok::bang; break;
      case '&': kind = Tok::amp; break;
      case '|': kind = Tok::bar; break;
      case '=': kind = Tok::eq; break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, std::string(1, c), start});
    ++i;
  }
  out.push_back({Tok::end, "", text.size()});
  return out;
}

Sort op_sort(Op op) {
  switch (op) {
    case Op::var:
    case Op::one:
    case Op::bot:
    case Op::mul:
    case Op::act:
      return Sort::program;
    default:
      return Sort::test;
  }
}

std::vector<Sort> kid_sorts(Op op) {
  switch (op) {
    case Op::mul: return {Sort::program, Sort::program};
    case Op::act: return {Sort::test, Sort::program, Sort::program};
    case Op::neg:
    case Op::down: return {Sort::test};
    case Op::conj:
    case Op::disj: return {Sort::test, Sort::test};
    case Op::comp: return {Sort::program, Sort::test};
    default: return {};
  }
}

void check_sorts(const Term& t) {
  const std::vector<Sort> want = kid_sorts(t.op);
  for (std::size_t i = 0; i < t.kids.size(); ++i) {
    check_sorts(t.kids[i]);
    if (t.kids[i].sort() != want[i]) {
      throw ParseError(std::string("sort error: expected ") + sort_name(want[i]) + ", found " +
                           sort_name(t.kids[i].sort()),
                       t.kids[i].span.begin);
    }
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Term expr() { return parse_or(); }

  bool at(Tok k) const { return toks_[i_].kind == k; }
  const Token& peek() const { return toks_[i_]; }

  void expect(Tok k, const char* what) {
    if (!at(k)) {
      const Token& t = peek();
      throw ParseError(std::string("expected ") + what + ", found " +
                           (t.kind == Tok::end ? std::string("end of input") : "'" + t.text + "'"),
                       t.pos);
    }
    ++i_;
  }

 private:
  static Term node(Op op, std::vector<Term> kids) {
    Term t = make_node(op, std::move(kids));
    t.span = {t.kids.front().span.begin, t.kids.back().span.end};
    return t;
  }

  Term parse_or() {
    Term l = parse_and();
    while (at(Tok::bar)) {
      ++i_;
      l = node(Op::disj, {std::move(l), parse_and()});
    }
    return l;
  }

  Term parse_and() {
    Term l = parse_at();
    while (at(Tok::amp)) {
      ++i_;
      l = node(Op::conj, {std::move(l), parse_at()});
    }
    return l;
  }

  Term parse_at() {
    Term l = parse_dot();
    if (!at(Tok::at)) return l;
    ++i_;
    return node(Op::comp, {std::move(l), parse_at()});
  }

  Term parse_dot() {
    Term l = parse_prefix();
    while (at(Tok::dot)) {
      ++i_;
      l = node(Op::mul, {std::move(l), parse_prefix()});
    }
    return l;
  }

  Term parse_prefix() {
    if (!at(Tok::tilde)) return parse_postfix();
    const std::size_t begin = peek().pos;
    ++i_;
    Term t = make_node(Op::neg, {parse_prefix()});
    t.span = {begin, t.kids[0].span.end};
    return t;
  }

  Term parse_postfix() {
    Term t = primary();
    while (true) {
      if (at(Tok::bang)) {
        const std::size_t end = peek().pos + 1;
        ++i_;
        const std::size_t begin = t.span.begin;
        t = make_node(Op::down, {std::move(t)});
        t.span = {begin, end};
      } else if (at(Tok::lbrack)) {
        ++i_;
        Term first = parse_or();
        expect(Tok::comma, "','");
        Term second = parse_or();
        const std::size_t end = peek().pos + 1;
        expect(Tok::rbrack, "']'");
        const std::size_t begin = t.span.begin;
        t = make_node(Op::act, {std::move(t), std::move(first), std::move(second)});
        t.span = {begin, end};
      } else {
        return t;
      }
    }
  }

  Term primary() {
    const Token tok = peek();
    Term t;
    switch (tok.kind) {
      case Tok::ident:
        if (tok.text == "bot") {
          t = make_const(Op::bot);
        } else if (tok.text == "T") {
          t = make_const(Op::t);
        } else if (tok.text == "F") {
          t = make_const(Op::f);
        } else if (tok.text == "U") {
          t = make_const(Op::u);
        } else {
          t = make_var(tok.text);
        }
        break;
      case Tok::tident:
        t = make_tvar(tok.text);
        break;
      case Tok::one:
        t = make_const(Op::one);
        break;
      case Tok::lparen: {
        ++i_;
        Term inner = parse_or();
        const std::size_t end = peek().pos + 1;
        expect(Tok::rparen, "')'");
        inner.span = {tok.pos, end};
        return inner;
      }
      default:
        throw ParseError(tok.kind == Tok::end ? "unexpected end of input"
                                              : "unexpected '" + tok.text + "'",
                         tok.pos);
    }
    ++i_;
    t.span = {tok.pos, tok.pos + tok.text.size()};
    return t;
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int level(Op op) {
  switch (op) {
    case Op::disj: return 1;
    case Op::conj: return 2;
    case Op::comp: return 3;
    case Op::mul: return 4;
    case Op::neg: return 5;
    case Op::down:
    case Op::act: return 6;
    default: return 7;
  }
}

std::string print_at(const Term& t, int min_level);

std::string render(const Term& t) {
  const auto& k = t.kids;
  switch (t.op) {
    case Op::var:
    case Op::tvar: return t.name;
    case Op::one: return "1";
    case Op::bot: return "bot";
    case Op::t: return "T";
    case Op::f: return "F";
    case Op::u: return "U";
    case Op::disj: return print_at(k[0], 1) + " | " + print_at(k[1], 2);
    case Op::conj: return print_at(k[0], 2) + " & " + print_at(k[1], 3);
    case Op::comp: return print_at(k[0], 4) + " @ " + print_at(k[1], 3);
    case Op::mul: return print_at(k[0], 4) + " . " + print_at(k[1], 5);
    case Op::neg: return "~" + print_at(k[0], 5);
    case Op::down: return print_at(k[0], 6) + "!";
    case Op::act:
      return print_at(k[0], 6) + "[" + print_at(k[1], 1) + ", " + print_at(k[2], 1) + "]";
  }
  return {};
}

std::string print_at(const Term& t, int min_level) {
  std::string s = render(t);
  return level(t.op) < min_level ? "(" + s + ")" : s;
}

void collect(const Term& t, std::set<std::string>& progs, std::set<std::string>& tests) {
  if (t.op == Op::var) progs.insert(t.name);
  if (t.op == Op::tvar) tests.insert(t.name);
  for (const auto& k : t.kids) collect(k, progs, tests);
}

// Postfix program over variable slots, for the exhaustive search.
struct Compiled {
  struct Instr {
    Op op;
    std::size_t slot;
  };
  std::vector<Instr> code;
};

void compile(const Term& t, const std::map<std::string, std::size_t>& slots, Compiled& out) {
  for (const auto& k : t.kids) compile(k, slots, out);
  std::size_t slot = 0;
  if (t.op == Op::var || t.op == Op::tvar) slot = slots.at(t.name);
  out.code.push_back({t.op, slot});
}

ElemId run(const Compiled& c, const EvalModel& m, const std::vector<ElemId>& env,
           std::vector<ElemId>& stack) {
  stack.clear();
  for (const auto& in : c.code) {
    ElemId v = 0;
    switch (in.op) {
      case Op::var:
      case Op::tvar: v = env[in.slot]; break;
      case Op::one: v = m.one(); break;
      case Op::bot: v = m.bot(); break;
      case Op::t: v = m.t(); break;
      case Op::f: v = m.f(); break;
      case Op::u: v = m.u(); break;
      case Op::neg: v = m.neg(stack.back()); stack.pop_back(); break;
      case Op::down: v = m.down(stack.back()); stack.pop_back(); break;
      case Op::mul:
      case Op::conj:
      case Op::disj:
      case Op::comp: {
        const ElemId r = stack.back();
        stack.pop_back();
        const ElemId l = stack.back();
        stack.pop_back();
        v = in.op == Op::mul ? m.times(l, r)
            : in.op == Op::conj ? m.conj(l, r)
            : in.op == Op::disj ? m.disj(l, r)
                                : m.compose(l, r);
        break;
      }
      case Op::act: {
        const ElemId e = stack.back();
        stack.pop_back();
        const ElemId th = stack.back();
        stack.pop_back();
        const ElemId a = stack.back();
        stack.pop_back();
        v = m.apply(a, th, e);
        break;
      }
    }
    stack.push_back(v);
  }
  return stack.back();
}

const Names& carrier(const EvalModel& m, Sort s) {
  return s == Sort::program ? m.programs() : m.tests();
}

}  // namespace

const char* sort_name(Sort s) { return s == Sort::program ? "program" : "test"; }

Sort Term::sort() const { return op_sort(op); }

bool operator==(const Term& l, const Term& r) {
  return l.op == r.op && l.name == r.name && l.kids == r.kids;
}

Term make_var(std::string name) { return Term{Op::var, std::move(name), {}, {}}; }
Term make_tvar(std::string name) { return Term{Op::tvar, std::move(name), {}, {}}; }
Term make_const(Op op) { return Term{op, {}, {}, {}}; }
Term make_node(Op op, std::vector<Term> kids) { return Term{op, {}, std::move(kids), {}}; }

Term parse_term(std::string_view text, std::optional<Sort> expected) {
  Parser p(text);
  Term t = p.expr();
  p.expect(Tok::end, "end of input");
  check_sorts(t);
  if (expected && t.sort() != *expected) {
    throw ParseError(std::string("sort error: expected ") + sort_name(*expected) + ", found " +
                         sort_name(t.sort()),
                     t.span.begin);
  }
  return t;
}

Identity parse_identity(std::string_view text) {
  Parser p(text);
  auto equation = [&]() {
    Term l = p.expr();
    p.expect(Tok::eq, "'='");
    Term r = p.expr();
    check_sorts(l);
    check_sorts(r);
    if (l.sort() != r.sort()) {
      throw ParseError(std::string("sort error: left side is a ") + sort_name(l.sort()) +
                           ", right side a " + sort_name(r.sort()),
                       r.span.begin);
    }
    return std::pair<Term, Term>(std::move(l), std::move(r));
  };
  Identity id;
  auto first = equation();
  if (p.at(Tok::implies)) {
    p.expect(Tok::implies, "'==>'");
    id.hypothesis = std::move(first);
    auto concl = equation();
    id.lhs = std::move(concl.first);
    id.rhs = std::move(concl.second);
  } else {
    id.lhs = std::move(first.first);
    id.rhs = std::move(first.second);
  }
  p.expect(Tok::end, "end of input");
  return id;
}

std::string print(const Term& t) { return print_at(t, 0); }

std::string print(const Identity& id) {
  std::string out;
  if (id.hypothesis) out = print(id.hypothesis->first) + " = " + print(id.hypothesis->second) + " ==> ";
  return out + print(id.lhs) + " = " + print(id.rhs);
}

std::vector<std::string> variables(const Identity& id) {
  std::set<std::string> progs;
  std::set<std::string> tests;
  collect(id.lhs, progs, tests);
  collect(id.rhs, progs, tests);
  if (id.hypothesis) {
    collect(id.hypothesis->first, progs, tests);
    collect(id.hypothesis->second, progs, tests);
  }
  std::vector<std::string> out(progs.begin(), progs.end());
  out.insert(out.end(), tests.begin(), tests.end());
  return out;
}

const Names& EvalModel::programs() const {
  return c_ ? c_->programs().elements : b_->base.elements;
}
const Names& EvalModel::tests() const { return c_ ? c_->tests().elements : b_->base.q.elements; }

ElemId EvalModel::one() const { return c_ ? c_->one() : b_->one; }
ElemId EvalModel::bot() const {
  if (!c_) throw EvalError("bot is not available in a B-monoid");
  return c_->bot();
}
ElemId EvalModel::times(ElemId s, ElemId t) const { return c_ ? c_->times(s, t) : b_->times(s, t); }
ElemId EvalModel::apply(ElemId a, ElemId s, ElemId t) const {
  return c_ ? c_->apply(a, s, t) : b_->base.apply(a, s, t);
}
ElemId EvalModel::t() const { return c_ ? c_->tests().t : b_->base.q.t; }
ElemId EvalModel::f() const { return c_ ? c_->tests().f : b_->base.q.f; }
ElemId EvalModel::u() const {
  if (!c_) throw EvalError("U is not available in a B-monoid");
  return c_->tests().u;
}
ElemId EvalModel::neg(ElemId a) const { return c_ ? c_->tests().neg(a) : b_->base.q.neg(a); }
ElemId EvalModel::conj(ElemId a, ElemId b) const {
  return c_ ? c_->tests().conj(a, b) : b_->base.q.conj(a, b);
}
ElemId EvalModel::disj(ElemId a, ElemId b) const {
  return c_ ? c_->tests().disj(a, b) : b_->base.q.disj(a, b);
}
ElemId EvalModel::down(ElemId a) const {
  const Ada* ada = c_ ? ada_of(c_->base.m) : nullptr;
  if (!ada) throw EvalError("down is not available: the tests are not an ada");
  return ada->down(a);
}
ElemId EvalModel::compose(ElemId s, ElemId a) const {
  return c_ ? c_->compose(s, a) : b_->compose(s, a);
}

ElemId eval(const Term& t, const EvalModel& model, const Assignment& env) {
  std::set<std::string> progs;
  std::set<std::string> tests;
  collect(t, progs, tests);
  std::map<std::string, std::size_t> slots;
  std::vector<ElemId> values;
  for (const auto* names : {&progs, &tests}) {
    const Names& car = names == &progs ? model.programs() : model.tests();
    for (const auto& v : *names) {
      const auto it = env.find(v);
      if (it == env.end()) throw EvalError("unbound variable " + v);
      if (it->second >= car.size()) throw EvalError("value of " + v + " out of range");
      slots[v] = values.size();
      values.push_back(it->second);
    }
  }
  Compiled c;
  compile(t, slots, c);
  std::vector<ElemId> stack;
  return run(c, model, values, stack);
}

std::string Counterexample::to_string() const {
  std::string out = "in " + model + ":";
  for (const auto& [v, e] : bindings) out += " " + v + "=" + e;
  return out + "; lhs=" + lhs + " rhs=" + rhs;
}

IdentityResult check_identity(const EvalModel& model, const Identity& id,
                              const std::string& model_name, const SizeCaps& caps) {
  const std::vector<std::string> vars = variables(id);
  std::map<std::string, std::size_t> slots;
  std::vector<const Names*> car;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    slots[vars[i]] = i;
    car.push_back(vars[i][0] == '%' ? &model.tests() : &model.programs());
    total *= car.back()->size();
    if (total > caps.max_assignments) {
      throw SizeCapError("identity search over more than " + std::to_string(caps.max_assignments) +
                         " assignments");
    }
  }
  Compiled lhs, rhs, hl, hr;
  compile(id.lhs, slots, lhs);
  compile(id.rhs, slots, rhs);
  if (id.hypothesis) {
    compile(id.hypothesis->first, slots, hl);
    compile(id.hypothesis->second, slots, hr);
  }

  IdentityResult res;
  std::vector<ElemId> env(vars.size(), 0);
  std::vector<ElemId> stack;
  if (std::any_of(car.begin(), car.end(), [](const Names* n) { return n->empty(); })) return res;
  while (true) {
    ++res.checked;
    if (id.hypothesis && run(hl, model, env, stack) != run(hr, model, env, stack)) {
      ++res.vacuous;
    } else {
      const ElemId l = run(lhs, model, env, stack);
      const ElemId r = run(rhs, model, env, stack);
      if (l != r) {
        Counterexample cex;
        cex.model = model_name;
        for (std::size_t i = 0; i < vars.size(); ++i) {
          cex.bindings.emplace_back(vars[i], (*car[i])[env[i]]);
          cex.assignment[vars[i]] = env[i];
        }
        const Names& out = carrier(model, id.sort());
        cex.lhs = out[l];
        cex.rhs = out[r];
        res.holds = false;
        res.counterexample = std::move(cex);
        return res;
      }
    }
    std::size_t i = vars.size();
    while (i > 0) {
      --i;
      if (++env[i] < car[i]->size()) break;
      env[i] = 0;
      if (i == 0) return res;
    }
    if (vars.empty()) return res;
  }
}

bool certifies(const EvalModel& model, const Identity& id, const Counterexample& cex) {
  if (id.hypothesis && eval(id.hypothesis->first, model, cex.assignment) !=
                           eval(id.hypothesis->second, model, cex.assignment)) {
    return false;
  }
  const ElemId l = eval(id.lhs, model, cex.assignment);
  const ElemId r = eval(id.rhs, model, cex.assignment);
  const Names& out = carrier(model, id.sort());
  return l != r && out[l] == cex.lhs && out[r] == cex.rhs;
}

const char* verdict_name(Verdict v) {
  return v == Verdict::refuted ? "REFUTED" : "NO-COUNTEREXAMPLE-UP-TO-BOUND";
}

UniversalResult check_identity_universal(const Identity& id, std::size_t x_max, Theory theory,
                                         const SizeCaps& caps) {
  if (x_max == 0) throw StructuralError("x_max must be at least 1");
  if (x_max > caps.max_x) {
    throw SizeCapError("x_max " + std::to_string(x_max) + " exceeds cap " + std::to_string(caps.max_x));
  }
  UniversalResult out;
  auto run_on = [&](const EvalModel& m, const std::string& name) {
    out.models.push_back(name);
    IdentityResult r = check_identity(m, id, name, caps);
    out.checked += r.checked;
    if (!r.holds) {
      out.verdict = Verdict::refuted;
      out.counterexample = std::move(r.counterexample);
      return false;
    }
    return true;
  };
  for (std::size_t k = 1; k <= x_max; ++k) {
    if (theory == Theory::c_monoid) {
      const CMonoid cm = functional_c_monoid(k, caps);
      if (!run_on(EvalModel(cm), "functional-" + std::to_string(k))) return out;
    } else {
      const BMonoid bm = functional_b_monoid(k, caps);
      if (!run_on(EvalModel(bm), "bfunctional-" + std::to_string(k))) return out;
    }
  }
  if (theory == Theory::c_monoid) {
    for (const auto& nm : bundled_c_monoids()) {
      if (nm.functional) continue;
      if (!run_on(EvalModel(nm.model), nm.name)) return out;
    }
  }
  return out;
}

const std::vector<CorpusEntry>& builtin_corpus() {
  struct Raw {
    const char* label;
    const char* title;
    Theory theory;
    const char* text;
  };
  constexpr Theory B = Theory::b_monoid;
  constexpr Theory C = Theory::c_monoid;
  static const Raw raw[] = {
      {"B1", "idempotence", B, "%a[s, s] = s"},
      {"B2", "positive redundancy", B, "%a[%a[s, t], u] = %a[s, u]"},
      {"B3", "negative redundancy", B, "%a[s, %a[t, u]] = %a[s, u]"},
      {"B4", "F-axiom", B, "F[s, t] = t"},
      {"B5", "neg-axiom", B, "(~%a)[s, t] = %a[t, s]"},
      {"B6", "and-axiom", B, "(%a & %b)[s, t] = %a[%b[s, t], t]"},
      {"BM1", "o-T", B, "s @ T = T"},
      {"BM2", "o-and", B, "(s @ %a) & (s @ %b) = s @ (%a & %b)"},
      {"BM3", "o-neg", B, "s @ ~%a = ~(s @ %a)"},
      {"BM4", "semigroup action", B, "s @ (t @ %a) = (s . t) @ %a"},
      {"BM5", "right composition", B, "%a[s, t] . u = %a[s . u, t . u]"},
      {"BM6", "left composition", B, "s . %a[t, u] = (s @ %a)[s . t, s . u]"},
      {"BM7", "o-interchange", B, "%b[s, t] @ %a = (%b & (s @ %a)) | (~%b & (t @ %a))"},
      {"BM8", "1-o", B, "1 @ %a = %a"},
      {"C1", "double negation", C, "~~%a = %a"},
      {"C2", "De Morgan", C, "~(%a & %b) = ~%a | ~%b"},
      {"C3", "and-associativity", C, "(%a & %b) & %c = %a & (%b & %c)"},
      {"C4", "left distributivity", C, "%a & (%b | %c) = (%a & %b) | (%a & %c)"},
      {"C5", "right distributivity", C, "(%a | %b) & %c = (%a & %c) | (~%a & %b & %c)"},
      {"C6", "absorption", C, "%a | (%a & %b) = %a"},
      {"C7", "and-or commutation", C, "(%a & %b) | (%b & %a) = (%b & %a) | (%a & %b)"},
      {"A1", "F down", C, "F! = F"},
      {"A2", "U down", C, "U! = F"},
      {"A3", "T down", C, "T! = T"},
      {"A4", "down under and", C, "%a & %b! = %a & (%a & %b)!"},
      {"A5", "down is halting", C, "%a! | ~(%a!) = T"},
      {"A6", "down below", C, "%a = %a! | %a"},
      {"EC1", "U-axiom", C, "U[s, t] = bot"},
      {"EC2", "premise interchange", C, "%a[%b[s, t], %b[u, v]] = %b[%a[s, u], %a[t, v]]"},
      {"EC3", "positive redundancy", C, "%a[%a[s, t], u] = %a[s, u]"},
      {"EC4", "negative redundancy", C, "%a[s, %a[t, u]] = %a[s, u]"},
      {"EC5", "neg-axiom", C, "(~%a)[s, t] = %a[t, s]"},
      {"EC6", "F-axiom", C, "F[s, t] = t"},
      {"EC7", "and-axiom", C, "(%a & %b)[s, t] = %a[%b[s, t], t]"},
      {"EC8", "and-compatibility", C,
       "%a[s, t] = %a[t, t] ==> (%a & %b)[s, t] = (%a & %b)[t, t]"},
      {"EM1", "1-o-axiom", C, "1 @ %a = %a"},
      {"EM2", "semigroup action", C, "(s . t) @ %a = s @ (t @ %a)"},
      {"EM3", "and-o-axiom", C, "s @ (%a & %b) = (s @ %a) & (s @ %b)"},
      {"EM4", "neg-o-axiom", C, "s @ ~%a = ~(s @ %a)"},
      {"EM5", "right composition", C, "%a[s, t] . u = %a[s . u, t . u]"},
      {"EM6", "o-interchange", C, "%a[s, t] @ %b = (%a & (s @ %b)) | (~%a & (t @ %b))"},
      {"EM7", "bot-o-axiom", C, "bot @ %a = U"},
      {"EM8", "U-o-axiom", C, "t @ U = U"},
      {"EM9", "left composition", C, "r . %a[s, t] = (r @ %a)[r . s, r . t]"},
  };
  static const std::vector<CorpusEntry> corpus = [] {
    std::vector<CorpusEntry> out;
    for (const Raw& r : raw) out.push_back({r.label, r.title, r.theory, r.text, parse_identity(r.text)});
    return out;
  }();
  return corpus;
}

}  // namespace cmon
