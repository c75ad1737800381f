#include "frobsyz/spec_file.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "frobsyz/cache.hpp"
#include "frobsyz/errors.hpp"
#include "frobsyz/parse_polynomial.hpp"
#include "frobsyz/tor.hpp"

namespace frobsyz {

std::string_view to_string(ModuleKind kind) noexcept {
  switch (kind) {
    case ModuleKind::Coker: return "coker";
    case ModuleKind::Quotient: return "quotient";
    case ModuleKind::Residue: return "residue";
    case ModuleKind::H0: return "h0";
    case ModuleKind::Socle: return "socle";
    case ModuleKind::Ideal: return "ideal";
  }
  return "residue";
}

const JobDecl* SpecFile::find_job(std::string_view name) const {
  for (const auto& j : jobs) {
    if (j.name == name) return &j;
  }
  return nullptr;
}

const ModuleDecl* SpecFile::find_module(std::string_view name) const {
  for (const auto& m : modules) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

const IdealDecl* SpecFile::find_ideal(std::string_view name) const {
  for (const auto& i : ideals) {
    if (i.name == name) return &i;
  }
  return nullptr;
}

namespace {

// ------------------------------------------------------------ job schema

enum class ArgKind { Module, Ideal };
enum class OptKind { Int, Range, Poly, Word, IdealName };

struct OptSpec {
  std::string_view key;
  OptKind kind;
  std::vector<std::string_view> words = {};
  bool required = false;
};

struct OpSpec {
  std::string_view name;  // op, or "verify <check>"
  std::vector<ArgKind> args;
  std::vector<OptSpec> options;
};

const std::vector<OpSpec>& op_table() {
  using A = ArgKind;
  using O = OptKind;
  static const std::vector<OpSpec> table = {
      {"resolve", {A::Module}, {{"steps", O::Int}}},
      {"syzlen", {A::Module}, {{"i", O::Range}}},
      {"fbetti", {A::Module}, {{"i", O::Range}, {"emax", O::Int}}},
      {"vanishing", {A::Module}, {{"i", O::Range}, {"emax", O::Int}}},
      {"tor", {A::Module, A::Module}, {{"i", O::Int}}},
      {"sigma", {A::Module, A::Module}, {{"i", O::Int}}},
      {"socle", {}, {}},
      {"parameters", {}, {{"n", O::Int}}},
      {"search", {}, {{"family", O::Word, {"dim1", "dim2"}}, {"imax", O::Int}, {"max", O::Int}}},
      {"verify big-socle", {A::Module}, {{"i", O::Range}}},
      {"verify dim2", {A::Module}, {}},
      {"verify bad-to-good",
       {A::Module},
       {{"mode", O::Word, {"quotient", "h0"}}, {"i", O::Int}, {"ideal", O::IdealName}}},
      {"verify even-index", {A::Module}, {{"x", O::Poly, {}, true}, {"i", O::Int}}},
      {"verify syz5", {A::Ideal}, {}},
      {"verify lemma-add", {A::Module}, {{"y", O::Poly, {}, true}, {"j", O::Int}}},
      {"verify divide", {A::Module}, {{"i", O::Int}}},
      {"verify colength", {A::Module}, {{"i", O::Int}, {"ncap", O::Int}}},
      {"verify dim2-sigma", {A::Module}, {{"i", O::Int}}},
      {"verify euler", {A::Module, A::Module}, {{"last", O::Int}}},
      {"verify nilpotent", {A::Module}, {{"i", O::Int}, {"emax", O::Int}}},
      {"verify minimal-prime", {A::Module}, {{"i", O::Int}, {"emax", O::Int}}},
  };
  return table;
}

const OpSpec* find_op(std::string_view name) {
  for (const auto& op : op_table()) {
    if (op.name == name) return &op;
  }
  return nullptr;
}

const OpSpec* schema_of(const JobDecl& job) {
  if (job.op == "verify" && !job.args.empty()) return find_op("verify " + job.args.front());
  return find_op(job.op);
}

// ------------------------------------------------------------ lexing

struct Piece {
  std::string_view text;
  std::size_t offset = 0;  // into the source
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

Piece trim(Piece p) {
  std::size_t a = 0;
  std::size_t b = p.text.size();
  while (a < b && is_space(p.text[a])) ++a;
  while (b > a && is_space(p.text[b - 1])) --b;
  return {p.text.substr(a, b - a), p.offset + a};
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::optional<std::uint64_t> parse_unsigned(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

std::optional<int> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  int v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {
    line_starts_.push_back(0);
    for (std::size_t i = 0; i < text_.size(); ++i) {
      if (text_[i] == '\n') line_starts_.push_back(i + 1);
    }
  }

  Parser(std::string_view text, SpecFile spec) : Parser(text) {
    spec_ = std::move(spec);
    p_seen_ = vars_seen_ = true;
  }

  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    const auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    throw ParseError(line, offset - line_starts_[line - 1] + 1, message);
  }

  SpecFile parse_all() {
    for (const Piece& st : statements()) statement(st);
    if (!p_seen_) fail(text_.size(), "missing 'p = ...' declaration");
    if (!vars_seen_) fail(text_.size(), "missing 'vars = ...' declaration");
    return std::move(spec_);
  }

  JobDecl job_body(const std::string& name, Piece body) { return job(name, body); }

 private:
  /// Comments blanked out, split on ';' and newlines outside brackets.
  std::vector<Piece> statements() {
    clean_.assign(text_.begin(), text_.end());
    for (std::size_t i = 0; i < clean_.size(); ++i) {
      if (clean_[i] != '#') continue;
      while (i < clean_.size() && clean_[i] != '\n') clean_[i++] = ' ';
    }
    const std::string_view view(clean_);
    std::vector<Piece> out;
    std::vector<std::size_t> open;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= view.size(); ++i) {
      const char c = i < view.size() ? view[i] : ';';
      if (c == '[' || c == '(') {
        open.push_back(i);
      } else if (c == ']' || c == ')') {
        if (open.empty()) fail(i, std::string("unbalanced '") + c + "'");
        const char o = view[open.back()];
        if ((o == '[') != (c == ']')) fail(i, std::string("mismatched '") + c + "'");
        open.pop_back();
      } else if ((c == ';' || c == '\n') && (open.empty() || i == view.size())) {
        if (!open.empty()) fail(open.back(), "unclosed bracket");
        const Piece st = trim({view.substr(start, i - start), start});
        if (!st.text.empty()) out.push_back(st);
        start = i + 1;
      }
    }
    return out;
  }

  std::vector<Piece> split(Piece p, char sep) const {
    std::vector<Piece> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= p.text.size(); ++i) {
      const char c = i < p.text.size() ? p.text[i] : sep;
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      const bool cut = sep == ' ' ? is_space(c) || i == p.text.size() : c == sep;
      if (cut && depth == 0) {
        const Piece item = trim({p.text.substr(start, i - start), p.offset + start});
        if (sep == ' ') {
          if (!item.text.empty()) out.push_back(item);
        } else {
          if (item.text.empty()) fail(p.offset + start, "empty item");
          out.push_back(item);
        }
        start = i + 1;
      }
    }
    return out;
  }

  /// First word and the rest.
  std::pair<Piece, Piece> head_word(Piece p) const {
    std::size_t i = 0;
    while (i < p.text.size() && !is_space(p.text[i])) ++i;
    return {Piece{p.text.substr(0, i), p.offset}, trim({p.text.substr(i), p.offset + i})};
  }

  void statement(Piece st) {
    std::size_t eq = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i < st.text.size(); ++i) {
      const char c = st.text[i];
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (c == '=' && depth == 0) {
        eq = i;
        break;
      }
    }
    if (eq == std::string_view::npos) fail(st.offset, "expected '=' in statement");
    const Piece head = trim({st.text.substr(0, eq), st.offset});
    const Piece body = trim({st.text.substr(eq + 1), st.offset + eq + 1});
    const auto words = split(head, ' ');
    if (words.empty()) fail(st.offset, "missing statement keyword");
    const std::string_view kw = words[0].text;
    if (kw == "p" || kw == "vars" || kw == "order") {
      if (words.size() != 1) fail(words[1].offset, "unexpected name after '" + std::string(kw) + "'");
      if (kw == "p") return characteristic(body);
      if (kw == "vars") return variables(body);
      return term_order(body);
    }
    if (kw != "ideal" && kw != "module" && kw != "job") {
      fail(words[0].offset, "unknown statement '" + std::string(kw) + "'");
    }
    if (words.size() != 2) fail(head.offset, "expected '" + std::string(kw) + " NAME = ...'");
    const Piece name = words[1];
    if (!is_identifier(name.text)) fail(name.offset, "invalid name '" + std::string(name.text) + "'");
    if (body.text.empty()) fail(body.offset, "empty right-hand side");
    const std::string n(name.text);
    if (kw == "ideal") return ideal(name, body);
    if (kw == "module") return module(name, body);
    if (spec_.find_job(n)) fail(name.offset, "duplicate job '" + n + "'");
    spec_.jobs.push_back(job(n, body));
  }

  void characteristic(Piece body) {
    if (p_seen_) fail(body.offset, "characteristic already declared");
    const auto v = parse_unsigned(body.text);
    if (!v) fail(body.offset, "expected an integer characteristic");
    if (!is_prime(*v)) fail(body.offset, "characteristic " + std::string(body.text) + " is not prime");
    if (*v > PrimeField::kMaxCharacteristic) fail(body.offset, "characteristic too large");
    spec_.p = static_cast<std::uint32_t>(*v);
    p_seen_ = true;
  }

  void variables(Piece body) {
    if (vars_seen_) fail(body.offset, "variables already declared");
    if (body.text.empty()) fail(body.offset, "empty variable list");
    for (const Piece& v : split(body, ',')) {
      const std::string name(v.text);
      if (!is_identifier(v.text)) fail(v.offset, "invalid variable name '" + name + "'");
      if (name == "m" || name == "I") fail(v.offset, "'" + name + "' is reserved");
      if (std::find(spec_.variables.begin(), spec_.variables.end(), name) != spec_.variables.end()) {
        fail(v.offset, "duplicate variable '" + name + "'");
      }
      spec_.variables.push_back(name);
    }
    if (spec_.variables.size() > kMaxVariables) {
      fail(body.offset, "at most " + std::to_string(kMaxVariables) + " variables are supported");
    }
    vars_seen_ = true;
  }

  void term_order(Piece body) {
    if (ambient_) fail(body.offset, "order must be declared before any polynomial");
    if (body.text == "grevlex") {
      spec_.order = TermOrder::GRevLex;
    } else if (body.text == "lex") {
      spec_.order = TermOrder::Lex;
    } else {
      fail(body.offset, "unknown term order '" + std::string(body.text) + "'");
    }
  }

  const RingPtr& ring(std::size_t offset) {
    if (!ambient_) {
      if (!p_seen_ || !vars_seen_) fail(offset, "p and vars must be declared before polynomials");
      ambient_ = PolyRing::make(spec_.p, spec_.variables, spec_.order);
    }
    return ambient_;
  }

  Polynomial polynomial(Piece item) {
    const auto& r = ring(item.offset);
    const auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), item.offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    const Polynomial f =
        parse_polynomial(r, item.text, line, item.offset - line_starts_[line - 1] + 1);
    if (const auto bad = f.inhomogeneous_term()) {
      const Polynomial term = Polynomial::monomial(r, bad->monomial, bad->coeff);
      fail(item.offset, "non-homogeneous generator '" + std::string(item.text) + "': term '" +
                            term.to_string() + "' has degree " +
                            std::to_string(bad->monomial.degree()) + ", expected " +
                            std::to_string(f.leading_term().monomial.degree()));
    }
    return f;
  }

  std::vector<std::string> ideal_items(Piece body) {
    std::vector<std::string> out;
    for (const Piece& item : split(body, ',')) {
      const std::string_view t = item.text;
      if (t == "m") {
        out.emplace_back("m");
      } else if (t.size() > 2 && t.substr(0, 2) == "m^" && parse_unsigned(t.substr(2))) {
        const auto k = *parse_unsigned(t.substr(2));
        if (k > 64) fail(item.offset, "power of m too large");
        out.push_back("m^" + std::to_string(k));
      } else if (is_identifier(t) &&
                 std::find(spec_.variables.begin(), spec_.variables.end(), t) ==
                     spec_.variables.end()) {
        if (!spec_.find_ideal(t)) fail(item.offset, "unknown ideal '" + std::string(t) + "'");
        out.emplace_back(t);
      } else {
        out.push_back(polynomial(item).to_string());
      }
    }
    return out;
  }

  void check_fresh(Piece name) {
    const std::string n(name.text);
    if (n == "m") fail(name.offset, "'m' is reserved for the maximal ideal");
    if (std::find(spec_.variables.begin(), spec_.variables.end(), n) != spec_.variables.end()) {
      fail(name.offset, "name '" + n + "' is a variable");
    }
    if (spec_.find_ideal(n) || spec_.find_module(n)) fail(name.offset, "duplicate name '" + n + "'");
  }

  void ideal(Piece name, Piece body) {
    check_fresh(name);
    IdealDecl d{std::string(name.text), ideal_items(body)};
    spec_.ideals.push_back(std::move(d));
  }

  void module(Piece name, Piece body) {
    check_fresh(name);
    ModuleDecl d;
    d.name = std::string(name.text);
    const auto [kind, rest] = head_word(body);
    const std::string_view k = kind.text;
    if (k == "coker") {
      d.kind = ModuleKind::Coker;
      coker(d, rest);
    } else if (k == "quotient" || k == "ideal") {
      d.kind = k == "quotient" ? ModuleKind::Quotient : ModuleKind::Ideal;
      if (rest.text.empty()) fail(rest.offset, "expected an ideal expression");
      d.items = ideal_items(rest);
    } else if (k == "residue" || k == "h0" || k == "socle") {
      d.kind = k == "residue" ? ModuleKind::Residue : k == "h0" ? ModuleKind::H0 : ModuleKind::Socle;
      if (!rest.text.empty()) fail(rest.offset, "'" + std::string(k) + "' takes no arguments");
    } else {
      fail(kind.offset, "unknown module kind '" + std::string(k) + "'");
    }
    spec_.modules.push_back(std::move(d));
  }

  void coker(ModuleDecl& d, Piece rest) {
    if (rest.text.empty() || rest.text.front() != '[') fail(rest.offset, "expected '[' after coker");
    int depth = 0;
    std::size_t close = 0;
    for (std::size_t i = 0; i < rest.text.size(); ++i) {
      if (rest.text[i] == '[') ++depth;
      if (rest.text[i] == ']' && --depth == 0) {
        close = i;
        break;
      }
    }
    const Piece inner = trim({rest.text.substr(1, close - 1), rest.offset + 1});
    if (inner.text.empty()) fail(inner.offset, "empty matrix");
    std::vector<Piece> rows;
    if (inner.text.front() == '[') {
      for (const Piece& r : split(inner, ',')) {
        if (r.text.front() != '[' || r.text.back() != ']') fail(r.offset, "expected a row '[...]'");
        rows.push_back(trim({r.text.substr(1, r.text.size() - 2), r.offset + 1}));
      }
    } else {
      rows.push_back(inner);
    }
    std::vector<std::vector<Polynomial>> entries;
    std::vector<std::vector<std::size_t>> offsets;
    for (const Piece& r : rows) {
      if (r.text.empty()) fail(r.offset, "empty row");
      entries.emplace_back();
      offsets.emplace_back();
      for (const Piece& e : split(r, ',')) {
        entries.back().push_back(polynomial(e));
        offsets.back().push_back(e.offset);
      }
      if (entries.back().size() != entries.front().size()) fail(r.offset, "ragged matrix rows");
    }
    d.twists.assign(rows.size(), 0);
    const Piece tail = trim({rest.text.substr(close + 1), rest.offset + close + 1});
    if (!tail.text.empty()) {
      const auto [kw, list] = head_word(tail);
      if (kw.text != "twists") fail(kw.offset, "expected 'twists' after the matrix");
      const auto items = split(list, ',');
      if (items.size() != rows.size()) fail(list.offset, "need one twist per matrix row");
      for (std::size_t r = 0; r < items.size(); ++r) {
        const auto v = parse_int(items[r].text);
        if (!v) fail(items[r].offset, "expected an integer twist");
        d.twists[r] = *v;
      }
    }
    // Every nonzero entry of a column must land in one degree.
    for (std::size_t c = 0; c < entries.front().size(); ++c) {
      std::optional<long long> degree;
      for (std::size_t r = 0; r < entries.size(); ++r) {
        const auto& f = entries[r][c];
        if (f.is_zero()) continue;
        const long long deg = static_cast<long long>(*f.homogeneous_degree()) + d.twists[r];
        if (degree && *degree != deg) {
          fail(offsets[r][c], "entry degree inconsistent with column " + std::to_string(c + 1));
        }
        degree = deg;
      }
    }
    for (const auto& row : entries) {
      d.matrix.emplace_back();
      for (const auto& f : row) d.matrix.back().push_back(f.to_string());
    }
  }

  JobDecl job(const std::string& name, Piece body) {
    JobDecl j;
    j.name = name;
    auto tokens = split(body, ' ');
    if (tokens.empty()) fail(body.offset, "missing job operation");
    j.op = std::string(tokens[0].text);
    std::size_t next = 1;
    std::string schema_name = j.op;
    if (j.op == "verify") {
      if (tokens.size() < 2) fail(tokens[0].offset, "verify needs a check name");
      j.args.emplace_back(tokens[1].text);
      schema_name += " " + j.args.front();
      next = 2;
      if (!find_op(schema_name)) {
        fail(tokens[1].offset, "unknown check '" + j.args.front() + "'");
      }
    }
    const OpSpec* op = find_op(schema_name);
    if (!op) fail(tokens[0].offset, "unknown operation '" + j.op + "'");
    std::size_t positional = 0;
    for (; next < tokens.size(); ++next) {
      const Piece& t = tokens[next];
      const auto eq = t.text.find('=');
      if (eq == std::string_view::npos) {
        if (positional >= op->args.size()) fail(t.offset, "too many arguments for " + schema_name);
        const std::string ref(t.text);
        if (op->args[positional] == ArgKind::Module) {
          if (!spec_.find_module(ref)) fail(t.offset, "unknown module '" + ref + "'");
        } else if (!spec_.find_ideal(ref)) {
          fail(t.offset, "unknown ideal '" + ref + "'");
        }
        j.args.push_back(ref);
        ++positional;
        continue;
      }
      const std::string key(t.text.substr(0, eq));
      const Piece value{t.text.substr(eq + 1), t.offset + eq + 1};
      const auto spec_it = std::find_if(op->options.begin(), op->options.end(),
                                        [&](const OptSpec& o) { return o.key == key; });
      if (spec_it == op->options.end()) fail(t.offset, "unknown option '" + key + "' for " + schema_name);
      if (j.options.count(key)) fail(t.offset, "duplicate option '" + key + "'");
      j.options[key] = option_value(*spec_it, value);
    }
    if (positional != op->args.size()) {
      fail(body.offset, schema_name + " expects " + std::to_string(op->args.size()) + " argument(s)");
    }
    for (const auto& o : op->options) {
      if (o.required && !j.options.count(std::string(o.key))) {
        fail(body.offset, schema_name + " requires option '" + std::string(o.key) + "'");
      }
    }
    return j;
  }

  std::string option_value(const OptSpec& o, Piece v) {
    if (v.text.empty()) fail(v.offset, "empty option value");
    switch (o.kind) {
      case OptKind::Int: {
        const auto n = parse_unsigned(v.text);
        if (!n || *n > 1000000) fail(v.offset, "expected a non-negative integer");
        return std::to_string(*n);
      }
      case OptKind::Range: {
        const auto dots = v.text.find("..");
        const auto a = parse_unsigned(v.text.substr(0, dots));
        const auto b = dots == std::string_view::npos ? a : parse_unsigned(v.text.substr(dots + 2));
        if (!a || !b || *a > *b || *b > 1000) fail(v.offset, "expected a range 'a..b' with a <= b");
        return *a == *b ? std::to_string(*a) : std::to_string(*a) + ".." + std::to_string(*b);
      }
      case OptKind::Poly: {
        Piece inner = v;
        if (v.text.front() == '(' && v.text.back() == ')') {
          inner = trim({v.text.substr(1, v.text.size() - 2), v.offset + 1});
        }
        return polynomial(inner).to_string();
      }
      case OptKind::Word: {
        if (std::find(o.words.begin(), o.words.end(), v.text) == o.words.end()) {
          fail(v.offset, "invalid value '" + std::string(v.text) + "' for " + std::string(o.key));
        }
        return std::string(v.text);
      }
      case OptKind::IdealName: {
        if (!spec_.find_ideal(v.text)) fail(v.offset, "unknown ideal '" + std::string(v.text) + "'");
        return std::string(v.text);
      }
    }
    return std::string(v.text);
  }

  std::string_view text_;
  std::string clean_;
  std::vector<std::size_t> line_starts_;
  SpecFile spec_;
  RingPtr ambient_;
  bool p_seen_ = false;
  bool vars_seen_ = false;
};

std::string join(const std::vector<std::string>& items, const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) s += sep;
    s += items[i];
  }
  return s;
}

}  // namespace

SpecFile parse_spec(std::string_view text) { return Parser(text).parse_all(); }

JobDecl parse_job(const SpecFile& spec, const std::string& name, std::string_view body) {
  Parser parser(body, spec);
  return parser.job_body(name, Piece{body, 0});
}

std::string print_job(const JobDecl& job) {
  std::string s = "job " + job.name + " = " + job.op;
  for (const auto& a : job.args) s += " " + a;
  const OpSpec* op = schema_of(job);
  for (const auto& [key, value] : job.options) {
    bool poly = false;
    if (op) {
      for (const auto& o : op->options) poly = poly || (o.key == key && o.kind == OptKind::Poly);
    }
    s += " " + key + "=" + (poly ? "(" + value + ")" : value);
  }
  return s;
}

std::string print_spec(const SpecFile& spec) {
  std::string s = "p = " + std::to_string(spec.p) + "\n";
  s += "vars = " + join(spec.variables) + "\n";
  s += "order = " + std::string(to_string(spec.order)) + "\n";
  for (const auto& i : spec.ideals) s += "ideal " + i.name + " = " + join(i.items) + "\n";
  for (const auto& m : spec.modules) {
    s += "module " + m.name + " = " + std::string(to_string(m.kind));
    if (m.kind == ModuleKind::Coker) {
      std::vector<std::string> rows;
      for (const auto& r : m.matrix) rows.push_back("[" + join(r) + "]");
      std::vector<std::string> tw;
      for (const int t : m.twists) tw.push_back(std::to_string(t));
      s += " [" + join(rows) + "] twists " + join(tw);
    } else if (m.kind == ModuleKind::Quotient || m.kind == ModuleKind::Ideal) {
      s += " " + join(m.items);
    }
    s += "\n";
  }
  for (const auto& j : spec.jobs) s += print_job(j) + "\n";
  return s;
}

// ------------------------------------------------------------ instances

const HomogeneousIdeal& SpecInstance::ideal(const std::string& name) const {
  const auto it = ideals.find(name);
  if (it == ideals.end()) throw Error(ErrorKind::InvalidArgument, "unknown ideal '" + name + "'");
  return it->second;
}

const ModulePresentation& SpecInstance::module(const std::string& name) const {
  const auto it = modules.find(name);
  if (it == modules.end()) throw Error(ErrorKind::InvalidArgument, "unknown module '" + name + "'");
  return it->second;
}

Polynomial SpecInstance::polynomial(const std::string& text) const {
  return parse_polynomial(ambient, text);
}

std::vector<Polynomial> SpecInstance::expand(const std::vector<std::string>& items) const {
  std::vector<Polynomial> out;
  for (const auto& item : items) {
    if (item == "m" || item.rfind("m^", 0) == 0) {
      const unsigned k = item == "m" ? 1U : static_cast<unsigned>(std::stoul(item.substr(2)));
      for (const auto& mono : ambient->monomials_of_degree(k)) {
        out.push_back(Polynomial::monomial(ambient, mono));
      }
    } else if (const auto it = ideals.find(item); it != ideals.end()) {
      const auto& g = it->second.generators();
      out.insert(out.end(), g.begin(), g.end());
    } else {
      out.push_back(polynomial(item));
    }
  }
  return out;
}

SpecInstance instantiate(const SpecFile& spec, Cache* cache) {
  SpecInstance inst;
  inst.ambient = PolyRing::make(spec.p, spec.variables, spec.order);
  for (const auto& decl : spec.ideals) {
    auto gens = inst.expand(decl.items);
    if (decl.name == "I" && cache) {
      inst.ideals.emplace(decl.name, cache->ideal(inst.ambient, std::move(gens)));
    } else {
      inst.ideals.emplace(decl.name, HomogeneousIdeal(inst.ambient, std::move(gens)));
    }
  }
  const auto defining = inst.ideals.find("I");
  if (defining == inst.ideals.end()) {
    inst.ideals.emplace("I", HomogeneousIdeal::zero(inst.ambient));
  }
  if (inst.ideals.at("I").is_unit()) {
    throw Error(ErrorKind::InvalidArgument, "the defining ideal I is the unit ideal");
  }
  inst.ring = QuotientRing::make(inst.ideals.at("I"));
  const auto& ring = inst.ring;
  for (const auto& decl : spec.modules) {
    ModulePresentation m = ModulePresentation::zero(ring);
    switch (decl.kind) {
      case ModuleKind::Coker: {
        std::vector<std::vector<Polynomial>> rows;
        for (const auto& r : decl.matrix) {
          rows.emplace_back();
          for (const auto& e : r) rows.back().push_back(inst.polynomial(e));
        }
        std::vector<int> source(rows.front().size(), 0);
        for (std::size_t c = 0; c < source.size(); ++c) {
          for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r][c].is_zero()) continue;
            source[c] = static_cast<int>(*rows[r][c].homogeneous_degree()) + decl.twists[r];
            break;
          }
        }
        m = ModulePresentation(GradedMatrix::from_entries(GradedFreeModule{ring, source},
                                                          GradedFreeModule{ring, decl.twists}, rows));
        break;
      }
      case ModuleKind::Quotient: m = ModulePresentation::quotient(ring, inst.expand(decl.items)); break;
      case ModuleKind::Residue: m = ModulePresentation::quotient(ring, ring->maximal().basis()); break;
      case ModuleKind::H0: m = local_cohomology_h0(ring); break;
      case ModuleKind::Socle: m = socle(ring).soc; break;
      case ModuleKind::Ideal: m = ideal_module(ring, inst.expand(decl.items)); break;
    }
    inst.modules.emplace(decl.name, std::move(m));
  }
  return inst;
}

}  // namespace frobsyz
