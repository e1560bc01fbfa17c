#include "cmon/cli/model_file.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "cmon/error.hpp"

namespace cmon::cli {
namespace {

struct Entry {
  std::string value;
  std::size_t line;
};

struct Section {
  std::string name;
  std::size_t line = 0;
  std::map<std::string, Entry> entries;
};

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::vector<Section> split_sections(std::istream& in) {
  std::vector<Section> sections;
  Entry* last = nullptr;
  std::string raw;
  for (std::size_t line = 1; std::getline(in, raw); ++line) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string text = trim(raw);
    if (text.empty()) continue;
    if (text.front() == '[') {
      if (text.back() != ']') throw ParseError("malformed section header", line);
      sections.push_back({trim(text.substr(1, text.size() - 2)), line, {}});
      last = nullptr;
      continue;
    }
    if (raw.front() == ' ' || raw.front() == '\t') {
      if (last == nullptr) throw ParseError("continuation line without a key", line);
      last->value += ' ' + text;
      continue;
    }
    if (sections.empty()) throw ParseError("key outside of a section", line);
    const auto eq = text.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line);
    const std::string key = trim(text.substr(0, eq));
    auto [it, fresh] = sections.back().entries.try_emplace(key, Entry{trim(text.substr(eq + 1)), line});
    if (!fresh) throw ParseError("duplicate key '" + key + "'", line);
    last = &it->second;
  }
  return sections;
}

class Reader {
 public:
  explicit Reader(const Section& s) : s_(s) {}

  const Entry& get(const std::string& key) const {
    const auto it = s_.entries.find(key);
    if (it == s_.entries.end()) {
      throw ParseError("missing key '" + key + "' in [" + s_.name + "]", s_.line);
    }
    used_.insert(key);
    return it->second;
  }

  bool has(const std::string& key) const { return s_.entries.contains(key); }

  void finish() const {
    for (const auto& [key, e] : s_.entries) {
      if (!used_.contains(key)) throw ParseError("unknown key '" + key + "' in [" + s_.name + "]", e.line);
    }
  }

  Names names(const std::string& key) const {
    const Entry& e = get(key);
    Names out = words(e.value);
    if (out.empty()) throw ParseError("empty element list for '" + key + "'", e.line);
    return out;
  }

  ElemId element(const std::string& key, const Names& carrier) const {
    const Entry& e = get(key);
    const auto w = words(e.value);
    if (w.size() != 1) throw ParseError("'" + key + "' takes exactly one element", e.line);
    return lookup(w[0], carrier, e.line);
  }

  std::vector<ElemId> unary(const std::string& key, const Names& carrier) const {
    const Entry& e = get(key);
    const auto w = words(e.value);
    if (w.size() != carrier.size()) {
      throw ParseError("'" + key + "' needs " + std::to_string(carrier.size()) + " entries, found " +
                           std::to_string(w.size()),
                       e.line);
    }
    std::vector<ElemId> out;
    for (const auto& x : w) out.push_back(lookup(x, carrier, e.line));
    return out;
  }

  /// `rows` rows of `cols` entries, separated by '/', flattened row-major.
  std::vector<ElemId> table(const std::string& key, std::size_t rows, std::size_t cols,
                            const Names& values) const {
    const Entry& e = get(key);
    std::vector<std::string> parts;
    std::string part;
    std::istringstream in(e.value);
    while (std::getline(in, part, '/')) parts.push_back(part);
    if (parts.size() != rows) {
      throw ParseError("'" + key + "' needs " + std::to_string(rows) + " rows, found " +
                           std::to_string(parts.size()),
                       e.line);
    }
    std::vector<ElemId> out;
    for (std::size_t r = 0; r < rows; ++r) {
      const auto w = words(parts[r]);
      if (w.size() != cols) {
        throw ParseError("'" + key + "' row " + std::to_string(r + 1) + " needs " +
                             std::to_string(cols) + " entries, found " + std::to_string(w.size()),
                         e.line);
      }
      for (const auto& x : w) out.push_back(lookup(x, values, e.line));
    }
    return out;
  }

 private:
  ElemId lookup(const std::string& name, const Names& carrier, std::size_t line) const {
    for (std::size_t i = 0; i < carrier.size(); ++i) {
      if (carrier[i] == name) return static_cast<ElemId>(i);
    }
    throw ParseError("unknown element '" + name + "'", line);
  }

  const Section& s_;
  mutable std::set<std::string> used_;
};

CAlgebra read_calgebra(const Reader& r) {
  CAlgebra a;
  a.elements = r.names("elements");
  const std::size_t n = a.elements.size();
  a.t = r.element("T", a.elements);
  a.f = r.element("F", a.elements);
  a.u = r.element("U", a.elements);
  a.neg_table = r.unary("neg", a.elements);
  a.and_table = r.table("and", n, n, a.elements);
  a.or_table = r.table("or", n, n, a.elements);
  return a;
}

BoolAlg read_boolalg(const Reader& r) {
  BoolAlg b;
  b.elements = r.names("elements");
  const std::size_t n = b.elements.size();
  b.t = r.element("T", b.elements);
  b.f = r.element("F", b.elements);
  b.neg_table = r.unary("neg", b.elements);
  b.and_table = r.table("and", n, n, b.elements);
  b.or_table = r.table("or", n, n, b.elements);
  return b;
}

CSet read_cset(const Reader& r, TestAlgebra tests, bool monoid) {
  CSet cs;
  cs.m = std::move(tests);
  cs.s.elements = r.names("programs");
  const Names& S = cs.s.elements;
  const Names& M = c_algebra_of(cs.m).elements;
  cs.s.bot = r.element("bot", S);
  if (monoid) {
    cs.s.one = r.element("one", S);
    cs.s.mul = r.table("mul", S.size(), S.size(), S);
  }
  cs.act = r.table("act", M.size() * S.size(), S.size(), S);
  return cs;
}

std::string row(const std::vector<ElemId>& table, std::size_t start, std::size_t cols,
                const Names& names) {
  std::string out;
  for (std::size_t j = 0; j < cols; ++j) {
    if (j > 0) out += ' ';
    out += names[table[start + j]];
  }
  return out;
}

void put_names(std::ostream& out, const char* key, const Names& names) {
  out << key << " =";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
}

void put_unary(std::ostream& out, const char* key, const std::vector<ElemId>& t, const Names& v) {
  out << key << " = " << row(t, 0, t.size(), v) << '\n';
}

void put_table(std::ostream& out, const char* key, const std::vector<ElemId>& t, std::size_t cols,
               const Names& v) {
  out << key << " = ";
  for (std::size_t start = 0; start < t.size(); start += cols) {
    if (start > 0) out << "\n  / ";
    out << row(t, start, cols, v);
  }
  out << '\n';
}

void write_calgebra(std::ostream& out, const CAlgebra& a, const std::vector<ElemId>* down) {
  out << (down ? "[ada]\n" : "[calgebra]\n");
  put_names(out, "elements", a.elements);
  out << "T = " << a.elements[a.t] << "\nF = " << a.elements[a.f] << "\nU = " << a.elements[a.u]
      << '\n';
  put_unary(out, "neg", a.neg_table, a.elements);
  put_table(out, "and", a.and_table, a.size(), a.elements);
  put_table(out, "or", a.or_table, a.size(), a.elements);
  if (down) put_unary(out, "down", *down, a.elements);
}

void write_tests(std::ostream& out, const TestAlgebra& m) {
  if (const Ada* ada = ada_of(m)) {
    write_calgebra(out, ada->base, &ada->down_table);
  } else {
    write_calgebra(out, c_algebra_of(m), nullptr);
  }
}

void write_boolalg(std::ostream& out, const BoolAlg& b) {
  out << "[boolalg]\n";
  put_names(out, "elements", b.elements);
  out << "T = " << b.elements[b.t] << "\nF = " << b.elements[b.f] << '\n';
  put_unary(out, "neg", b.neg_table, b.elements);
  put_table(out, "and", b.and_table, b.size(), b.elements);
  put_table(out, "or", b.or_table, b.size(), b.elements);
}

void write_cset_body(std::ostream& out, const CSet& cs, bool monoid) {
  const Names& S = cs.s.elements;
  put_names(out, "programs", S);
  out << "bot = " << S[cs.s.bot] << '\n';
  if (monoid) {
    out << "one = " << S[*cs.s.one] << '\n';
    put_table(out, "mul", *cs.s.mul, S.size(), S);
  }
  put_table(out, "act", cs.act, S.size(), S);
}

Model read_sections(const std::vector<Section>& sections) {
  if (sections.empty()) throw ParseError("no sections found", 1);
  std::optional<TestAlgebra> tests;
  std::optional<BoolAlg> boolean;
  std::optional<Model> model;
  for (const Section& s : sections) {
    const Reader r(s);
    if (model) throw ParseError("unexpected section [" + s.name + "] after the model", s.line);
    if (s.name == "ada" || s.name == "calgebra" || s.name == "boolalg") {
      if (tests || boolean) throw ParseError("second test-algebra section", s.line);
      if (s.name == "ada") {
        Ada a{read_calgebra(r), {}};
        a.down_table = r.unary("down", a.base.elements);
        tests = a;
      } else if (s.name == "calgebra") {
        tests = read_calgebra(r);
      } else {
        boolean = read_boolalg(r);
      }
    } else if (s.name == "cset" || s.name == "cmonoid") {
      if (!tests) throw ParseError("[" + s.name + "] needs a preceding [ada] or [calgebra]", s.line);
      const bool monoid = s.name == "cmonoid";
      CSet cs = read_cset(r, *tests, monoid);
      if (monoid) {
        const std::size_t n = cs.s.size();
        const Names& M = c_algebra_of(cs.m).elements;
        std::vector<ElemId> comp = r.table("comp", n, M.size(), M);
        model = CMonoid{std::move(cs), std::move(comp)};
      } else {
        model = std::move(cs);
      }
    } else if (s.name == "bmonoid") {
      if (!boolean) throw ParseError("[bmonoid] needs a preceding [boolalg]", s.line);
      BMonoid bm;
      bm.base.q = *boolean;
      bm.base.elements = r.names("programs");
      const Names& S = bm.base.elements;
      const Names& Q = boolean->elements;
      bm.one = r.element("one", S);
      bm.mul = r.table("mul", S.size(), S.size(), S);
      bm.base.act = r.table("act", Q.size() * S.size(), S.size(), S);
      bm.comp = r.table("comp", S.size(), Q.size(), Q);
      model = std::move(bm);
    } else {
      throw ParseError("unknown section [" + s.name + "]", s.line);
    }
    r.finish();
  }
  if (!model) {
    if (boolean) {
      model = *boolean;
    } else if (const Ada* ada = ada_of(*tests)) {
      model = *ada;
    } else {
      model = c_algebra_of(*tests);
    }
  }
  std::visit([](const auto& m) { m.validate(); }, *model);
  return *model;
}

}  // namespace

const char* model_kind(const Model& m) {
  static const char* const kinds[] = {"calgebra", "ada", "boolalg", "cset", "cmonoid", "bmonoid"};
  return kinds[m.index()];
}

Model read_model(std::istream& in) {
  try {
    return read_sections(split_sections(in));
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(e.position()) + ": " + e.what(), e.position());
  }
}

Model read_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_model(in);
}

void write_model(std::ostream& out, const Model& m) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, CAlgebra>) {
          write_calgebra(out, x, nullptr);
        } else if constexpr (std::is_same_v<T, Ada>) {
          write_calgebra(out, x.base, &x.down_table);
        } else if constexpr (std::is_same_v<T, BoolAlg>) {
          write_boolalg(out, x);
        } else if constexpr (std::is_same_v<T, CSet>) {
          write_tests(out, x.m);
          out << "\n[cset]\n";
          write_cset_body(out, x, false);
        } else if constexpr (std::is_same_v<T, CMonoid>) {
          write_tests(out, x.base.m);
          out << "\n[cmonoid]\n";
          write_cset_body(out, x.base, true);
          put_table(out, "comp", x.comp, x.tests().size(), x.tests().elements);
        } else {
          write_boolalg(out, x.base.q);
          out << "\n[bmonoid]\n";
          const Names& S = x.base.elements;
          put_names(out, "programs", S);
          out << "one = " << S[x.one] << '\n';
          put_table(out, "mul", x.mul, S.size(), S);
          put_table(out, "act", x.base.act, S.size(), S);
          put_table(out, "comp", x.comp, x.base.q.size(), x.base.q.elements);
        }
      },
      m);
}

void write_model_file(const std::string& path, const Model& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  write_model(out, m);
}

}  // namespace cmon::cli
