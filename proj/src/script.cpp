#include "ssc/script.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "ssc/laws.hpp"
#include "ssc/subscheme.hpp"

namespace ssc {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// A '#' opens a comment at the start of a line or when it is not glued to a
// word; `#inv(...)` inside expressions survives. Comments become blanks so
// byte offsets still map to the original lines.
std::string blank_comments(std::string_view text) {
  std::string out(text);
  bool line_start = true;
  std::size_t k = 0;
  while (k < out.size()) {
    const char c = out[k];
    if (c == '\n') {
      line_start = true;
    } else if (c == '#' && (line_start || k + 1 == out.size() || !ident_char(out[k + 1]))) {
      while (k < out.size() && out[k] != '\n') out[k++] = ' ';
      continue;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      line_start = false;
    }
    ++k;
  }
  return out;
}

enum class NameKind { Ring, Ideal, Scheme, Morphism, Subscheme };

const char* kind_name(NameKind k) {
  switch (k) {
    case NameKind::Ring:
      return "ring";
    case NameKind::Ideal:
      return "ideal";
    case NameKind::Scheme:
      return "scheme";
    case NameKind::Morphism:
      return "morphism";
    case NameKind::Subscheme:
      return "subscheme";
  }
  return "?";
}

struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class Parser {
 public:
  Parser(std::string_view text, const ScriptOptions& options)
      : text_(blank_comments(text)), options_(options) {
    line_starts_.push_back(0);
    for (std::size_t k = 0; k < text_.size(); ++k)
      if (text_[k] == '\n') line_starts_.push_back(k + 1);
  }

  Script run() {
    Script script;
    for (skip_ws(); pos_ < text_.size(); skip_ws()) script.statements.push_back(statement());
    return script;
  }

 private:
  // ---------------------------------------------------------------- lexing

  SourceLoc loc_at(std::size_t offset) const {
    const auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const std::size_t line = static_cast<std::size_t>(it - line_starts_.begin());
    return {line, offset - line_starts_[line - 1] + 1};
  }

  [[noreturn]] void fail_at(std::size_t offset, const std::string& message) const {
    throw ScriptError(loc_at(offset), message);
  }
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept(char c) {
    if (!at(c)) return false;
    ++pos_;
    return true;
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.compare(pos_, token.size(), token) != 0) return false;
    pos_ += token.size();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'" + found());
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'" + found());
  }

  std::string found() {
    skip_ws();
    if (pos_ >= text_.size()) return " at end of input";
    std::size_t end = pos_ + 1;
    if (ident_char(text_[pos_]))
      while (end < text_.size() && ident_char(text_[end])) ++end;
    return ", found '" + text_.substr(pos_, end - pos_) + "'";
  }

  std::string identifier(const char* what) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '#')
      fail(std::string(what) + " uses the reserved '#' prefix");
    if (pos_ >= text_.size() || !ident_start(text_[pos_])) fail(std::string("expected ") + what + found());
    const std::size_t start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  bool accept_keyword(std::string_view word) {
    skip_ws();
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    const std::size_t end = pos_ + word.size();
    if (end < text_.size() && ident_char(text_[end])) return false;
    pos_ = end;
    return true;
  }

  std::uint64_t number(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what + found());
    if (pos_ - start > 18) fail_at(start, std::string(what) + " is too large");
    return std::stoull(text_.substr(start, pos_ - start));
  }

  // Raw expression text up to a depth-0 character from `stops`.
  Span raw(std::string_view stops) {
    skip_ws();
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';' || c == '{' || c == '}' || c == '[' || c == ']') break;
      if (depth == 0 && stops.find(c) != std::string_view::npos) break;
      if (c == '(') ++depth;
      if (c == ')') --depth;
      ++pos_;
    }
    std::size_t end = pos_;
    while (end > start && std::isspace(static_cast<unsigned char>(text_[end - 1]))) --end;
    return {start, end};
  }

  Polynomial poly(Span s, const Algebra& algebra, const ParseHooks& hooks = {}) {
    if (s.begin == s.end) fail_at(s.begin, "expected a polynomial" + found());
    try {
      return algebra->parse(std::string_view(text_).substr(s.begin, s.end - s.begin), hooks);
    } catch (const SyntaxError& e) {
      fail_at(s.begin + e.offset(), e.reason());
    } catch (const UnknownVariable& e) {
      fail_at(s.begin + e.offset(), "unknown variable '" + e.name() + "' in " + algebra->describe());
    } catch (const ReservedName& e) {
      fail_at(s.begin + e.offset().value_or(0), "reserved name '" + e.name() + "'");
    }
  }

  // `( g1, g2, ... )`, possibly empty.
  std::vector<Polynomial> generator_list(const Algebra& algebra) {
    expect('(');
    std::vector<Polynomial> gens;
    if (accept(')')) return gens;
    do gens.push_back(poly(raw(",)"), algebra));
    while (accept(','));
    expect(')');
    return gens;
  }

  // ------------------------------------------------------------- names

  void declare(const std::string& name, NameKind kind, std::size_t offset) {
    if (!kinds_.emplace(name, kind).second)
      fail_at(offset, "redeclaration of '" + name + "' (already a " + kind_name(kinds_[name]) + ")");
  }

  std::string declared_name(const char* what) {
    skip_ws();
    const std::size_t offset = pos_;
    std::string name = identifier(what);
    if (kinds_.count(name))
      fail_at(offset, "redeclaration of '" + name + "' (already a " + kind_name(kinds_[name]) + ")");
    return name;
  }

  std::string reference(NameKind kind) {
    skip_ws();
    const std::size_t offset = pos_;
    std::string name = identifier(kind_name(kind));
    const auto it = kinds_.find(name);
    if (it == kinds_.end()) fail_at(offset, "unknown name '" + name + "'");
    if (it->second != kind)
      fail_at(offset, "'" + name + "' is a " + kind_name(it->second) + ", expected a " + kind_name(kind));
    return name;
  }

  std::size_t patch_index(const SchemeDecl& scheme) {
    skip_ws();
    const std::size_t offset = pos_;
    const std::uint64_t k = number("patch index");
    if (k >= scheme.patches.size())
      fail_at(offset, "patch index " + std::to_string(k) + " out of range for scheme '" + scheme.name +
                          "' with " + std::to_string(scheme.patches.size()) + " patches");
    return static_cast<std::size_t>(k);
  }

  // --------------------------------------------------------- statements

  Statement statement() {
    skip_ws();
    const std::size_t start = pos_;
    const SourceLoc loc = loc_at(start);
    if (accept_keyword("ring")) return {ring(), loc};
    if (accept_keyword("ideal")) return {ideal(), loc};
    if (accept_keyword("scheme")) return {scheme(), loc};
    if (accept_keyword("morphism")) return {morphism(), loc};
    if (accept_keyword("subscheme")) return {subscheme(), loc};
    if (accept_keyword("eval")) return {eval(), loc};
    if (accept_keyword("check")) return {check(), loc};
    if (accept_keyword("laws")) return {laws(), loc};
    fail("expected a statement" + found());
  }

  RingDecl ring() {
    skip_ws();
    const std::size_t offset = pos_;
    RingDecl decl{declared_name("ring name"), nullptr};
    expect('=');
    expect("QQ");
    expect('[');
    std::vector<std::string> vars;
    if (!accept(']')) {
      do {
        skip_ws();
        const std::size_t at_var = pos_;
        std::string v = identifier("variable name");
        if (std::find(vars.begin(), vars.end(), v) != vars.end())
          fail_at(at_var, "duplicate variable '" + v + "'");
        vars.push_back(std::move(v));
      } while (accept(','));
      expect(']');
    }
    Algebra free = AffineAlgebra::make(vars, {}, options_.order);
    std::vector<Polynomial> rels;
    if (accept('/')) rels = generator_list(free);
    expect(';');
    decl.algebra = rels.empty() ? free : AffineAlgebra::make(vars, rels, options_.order);
    declare(decl.name, NameKind::Ring, offset);
    rings_[decl.name] = decl.algebra;
    return decl;
  }

  IdealDecl ideal() {
    skip_ws();
    const std::size_t offset = pos_;
    std::string name = declared_name("ideal name");
    if (!accept_keyword("in")) fail("expected 'in'" + found());
    std::string ring = reference(NameKind::Ring);
    expect('=');
    const Algebra& a = rings_.at(ring);
    Ideal value(a, generator_list(a));
    expect(';');
    declare(name, NameKind::Ideal, offset);
    ideals_.emplace(name, IdealDecl{name, ring, value});
    return ideals_.at(name);
  }

  SchemeDecl scheme() {
    skip_ws();
    const std::size_t offset = pos_;
    SchemeDecl decl;
    decl.name = declared_name("scheme name");
    expect('{');
    while (!accept('}')) {
      if (accept_keyword("patch")) {
        std::string r = reference(NameKind::Ring);
        decl.patches.push_back(rings_.at(r));
        decl.rings.push_back(std::move(r));
        expect(';');
      } else if (accept_keyword("glue")) {
        decl.glue.push_back(glue(decl));
      } else {
        fail("expected 'patch', 'glue' or '}'" + found());
      }
    }
    accept(';');
    if (decl.patches.empty()) fail_at(offset, "scheme '" + decl.name + "' has no patches");
    declare(decl.name, NameKind::Scheme, offset);
    schemes_.emplace(decl.name, decl);
    return decl;
  }

  GlueDecl glue(const SchemeDecl& scheme) {
    skip_ws();
    GlueDecl g;
    g.loc = loc_at(pos_);
    const std::size_t start = pos_;
    g.i = patch_index(scheme);
    expect(':');
    const Algebra& pi = scheme.patches[g.i];
    g.f_ij = poly(raw("~"), pi);
    expect('~');
    g.j = patch_index(scheme);
    if (g.i == g.j) fail_at(start, "glue joins patch " + std::to_string(g.i) + " to itself");
    expect(':');
    const Algebra& pj = scheme.patches[g.j];
    Span fj = raw("");
    if (fj.end - fj.begin < 3 || text_.compare(fj.end - 3, 3, "via") != 0)
      fail("expected 'via'" + found());
    const std::size_t via = fj.end - 3;
    fj.end = via;
    while (fj.end > fj.begin && std::isspace(static_cast<unsigned char>(text_[fj.end - 1]))) --fj.end;
    if (fj.end == via) fail_at(via, "expected whitespace before 'via'");
    g.f_ji = poly(fj, pj);
    const Localization loc = localize(pj, g.f_ji);
    ParseHooks hooks;
    hooks.inverse = [&](const Polynomial& arg, std::size_t offset) {
      auto inv = inverse_of(loc.algebra, arg);
      if (!inv) throw SyntaxError(offset, "#inv argument is not invertible on this overlap");
      return *inv;
    };
    std::vector<std::optional<Polynomial>> images(pi->nvars());
    expect('{');
    if (!accept('}')) {
      do {
        skip_ws();
        const std::size_t key = pos_;
        if (accept("#inv")) {
          expect('(');
          const Polynomial arg = poly(raw(")"), pi);
          expect(')');
          if (!(pi->reduce(arg) == pi->reduce(g.f_ij)))
            fail_at(key, "#inv key must invert the glue element " + pi->format(g.f_ij));
          if (g.inverse_image) fail_at(key, "duplicate image for #inv(" + pi->format(g.f_ij) + ")");
          expect("->");
          g.inverse_image = poly(raw(",}"), loc.algebra, hooks);
        } else {
          const std::string v = identifier("variable name");
          const auto k = pi->index_of(v);
          if (!k) fail_at(key, "'" + v + "' is not a variable of patch " + std::to_string(g.i));
          if (images[*k]) fail_at(key, "duplicate image for '" + v + "'");
          expect("->");
          images[*k] = poly(raw(",}"), loc.algebra, hooks);
        }
      } while (accept(','));
      expect('}');
    }
    accept(';');
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (!images[k])
        fail_at(start, "glue " + std::to_string(g.i) + "->" + std::to_string(g.j) + " has no image for '" +
                           pi->variables()[k] + "'");
      g.images.push_back(*images[k]);
    }
    return g;
  }

  MorphismDecl morphism() {
    skip_ws();
    const std::size_t offset = pos_;
    MorphismDecl decl;
    decl.name = declared_name("morphism name");
    expect(':');
    decl.source = reference(NameKind::Scheme);
    expect("->");
    decl.target = reference(NameKind::Scheme);
    const SchemeDecl& src = schemes_.at(decl.source);
    const SchemeDecl& tgt = schemes_.at(decl.target);
    std::vector<std::optional<PatchMap>> maps(src.patches.size());
    expect('{');
    while (!accept('}')) {
      if (!accept_keyword("patch")) fail("expected 'patch' or '}'" + found());
      skip_ws();
      const std::size_t at_patch = pos_;
      const std::size_t i = patch_index(src);
      if (maps[i]) fail_at(at_patch, "duplicate map for source patch " + std::to_string(i));
      expect("->");
      const std::size_t j = patch_index(tgt);
      if (!accept_keyword("via")) fail("expected 'via'" + found());
      const Algebra& from = tgt.patches[j];
      const Algebra& to = src.patches[i];
      std::vector<std::optional<Polynomial>> images(from->nvars());
      expect('{');
      if (!accept('}')) {
        do {
          skip_ws();
          const std::size_t key = pos_;
          const std::string v = identifier("variable name");
          const auto k = from->index_of(v);
          if (!k) fail_at(key, "'" + v + "' is not a variable of target patch " + std::to_string(j));
          if (images[*k]) fail_at(key, "duplicate image for '" + v + "'");
          expect("->");
          images[*k] = poly(raw(",}"), to);
        } while (accept(','));
        expect('}');
      }
      accept(';');
      std::vector<Polynomial> imgs;
      for (std::size_t k = 0; k < images.size(); ++k) {
        if (!images[k]) fail_at(at_patch, "no image for '" + from->variables()[k] + "'");
        imgs.push_back(*images[k]);
      }
      maps[i] = PatchMap{j, RingMap(from, to, std::move(imgs))};
    }
    accept(';');
    for (std::size_t i = 0; i < maps.size(); ++i) {
      if (!maps[i]) fail_at(offset, "morphism '" + decl.name + "' has no map for source patch " + std::to_string(i));
      decl.patches.push_back(*maps[i]);
    }
    declare(decl.name, NameKind::Morphism, offset);
    morphisms_.emplace(decl.name, decl);
    return decl;
  }

  SubschemeDecl subscheme() {
    skip_ws();
    const std::size_t offset = pos_;
    SubschemeDecl decl;
    decl.name = declared_name("subscheme name");
    if (!accept_keyword("of")) fail("expected 'of'" + found());
    decl.scheme = reference(NameKind::Scheme);
    const SchemeDecl& x = schemes_.at(decl.scheme);
    expect('=');
    skip_ws();
    const std::size_t bracket = pos_;
    expect('[');
    if (!at(']')) {
      do {
        skip_ws();
        const std::size_t slot = pos_;
        if (decl.ideals.size() >= x.patches.size())
          fail_at(slot, "scheme '" + x.name + "' has only " + std::to_string(x.patches.size()) + " patches");
        const Algebra& a = x.patches[decl.ideals.size()];
        if (at('(')) {
          decl.ideals.emplace_back(a, generator_list(a));
        } else {
          const std::string name = reference(NameKind::Ideal);
          const IdealDecl& i = ideals_.at(name);
          if (!same_algebra(i.ideal.algebra(), a))
            fail_at(slot, "ideal '" + name + "' lives in ring '" + i.ring + "', not in patch " +
                              std::to_string(decl.ideals.size()) + " (" + x.rings[decl.ideals.size()] + ")");
          decl.ideals.push_back(i.ideal);
        }
      } while (accept(';'));
    }
    expect(']');
    expect(';');
    if (decl.ideals.size() != x.patches.size())
      fail_at(bracket, "subscheme '" + decl.name + "' lists " + std::to_string(decl.ideals.size()) +
                           " ideals but scheme '" + x.name + "' has " + std::to_string(x.patches.size()) +
                           " patches");
    declare(decl.name, NameKind::Subscheme, offset);
    subschemes_[decl.name] = decl.scheme;
    return decl;
  }

  Expr expr() {
    skip_ws();
    Expr e;
    e.loc = loc_at(pos_);
    const std::size_t start = pos_;
    const std::string word = identifier("expression");
    if (!at('(')) {
      const auto it = kinds_.find(word);
      if (it == kinds_.end()) fail_at(start, "unknown name '" + word + "'");
      if (it->second != NameKind::Subscheme)
        fail_at(start, "'" + word + "' is a " + kind_name(it->second) + ", expected a subscheme");
      e.name = word;
      e.scheme = subschemes_.at(word);
      return e;
    }
    expect('(');
    if (word == "mul" || word == "add" || word == "eq") {
      e.kind = word == "mul" ? Expr::Kind::Mul : word == "add" ? Expr::Kind::Add : Expr::Kind::Eq;
      e.args.push_back(value_expr());
      expect(',');
      e.args.push_back(value_expr());
      if (e.args[0].scheme != e.args[1].scheme)
        fail_at(start, word + " needs operands on one scheme, got '" + e.args[0].scheme + "' and '" +
                           e.args[1].scheme + "'");
      if (e.kind != Expr::Kind::Eq) e.scheme = e.args[0].scheme;
    } else if (word == "canon") {
      e.kind = Expr::Kind::Canon;
      e.args.push_back(value_expr());
      e.scheme = e.args[0].scheme;
    } else if (word == "whole" || word == "empty") {
      e.kind = word == "whole" ? Expr::Kind::Whole : Expr::Kind::Empty;
      e.name = e.scheme = reference(NameKind::Scheme);
    } else if (word == "pullback") {
      e.kind = Expr::Kind::Pullback;
      e.name = reference(NameKind::Morphism);
      expect(',');
      e.args.push_back(value_expr());
      const MorphismDecl& f = morphisms_.at(e.name);
      if (e.args[0].scheme != f.target)
        fail_at(start, "pullback along '" + f.name + "' needs a subscheme of '" + f.target + "', got one of '" +
                           e.args[0].scheme + "'");
      e.scheme = f.source;
    } else {
      fail_at(start, "unknown operation '" + word + "'");
    }
    expect(')');
    return e;
  }

  Expr value_expr() {
    skip_ws();
    const std::size_t start = pos_;
    Expr e = expr();
    if (e.kind == Expr::Kind::Eq) fail_at(start, "eq(...) is boolean and cannot be an operand");
    return e;
  }

  EvalCmd eval() {
    EvalCmd cmd{expr()};
    expect(';');
    return cmd;
  }

  CheckCmd check() {
    skip_ws();
    const std::size_t start = pos_;
    CheckCmd cmd;
    const std::size_t save = pos_;
    const std::string word = identifier("name or expression");
    if (accept(';')) {
      const auto it = kinds_.find(word);
      if (it == kinds_.end()) fail_at(start, "unknown name '" + word + "'");
      if (it->second == NameKind::Ring || it->second == NameKind::Ideal)
        fail_at(start, "check needs a scheme, morphism or subscheme; '" + word + "' is a " +
                           kind_name(it->second));
      cmd.name = word;
      return cmd;
    }
    pos_ = save;
    cmd.expr = expr();
    if (cmd.expr->kind != Expr::Kind::Eq) fail_at(start, "check needs a name or an eq(...) assertion");
    expect(';');
    return cmd;
  }

  LawsCmd laws() {
    skip_ws();
    const std::size_t start = pos_;
    LawsCmd cmd{identifier("law module"), std::nullopt, std::nullopt};
    const auto& mods = law_modules();
    if (cmd.module != "all" && std::find(mods.begin(), mods.end(), cmd.module) == mods.end())
      fail_at(start, "unknown law module '" + cmd.module + "'");
    while (!accept(';')) {
      skip_ws();
      const std::size_t key = pos_;
      const std::string name = identifier("'seed' or 'max_n'");
      expect('=');
      if (name != "seed" && name != "max_n") fail_at(key, "unknown laws option '" + name + "'");
      std::optional<std::uint64_t>& slot = name == "seed" ? cmd.seed : cmd.max_n;
      if (slot) fail_at(key, "duplicate laws option '" + name + "'");
      slot = number(name.c_str());
    }
    return cmd;
  }

  std::string text_;
  ScriptOptions options_;
  std::vector<std::size_t> line_starts_;
  std::size_t pos_ = 0;
  std::map<std::string, NameKind> kinds_;
  std::map<std::string, Algebra> rings_;
  std::map<std::string, IdealDecl> ideals_;
  std::map<std::string, SchemeDecl> schemes_;
  std::map<std::string, MorphismDecl> morphisms_;
  std::map<std::string, std::string> subschemes_;
};

// ---------------------------------------------------------------- execution

std::string where(SourceLoc loc) { return std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": "; }

std::string failures_only(const Report& r) {
  Report bad;
  for (const auto& l : r.lines())
    if (l.status == Status::Fail) bad.add(l.status, l.subject, l.detail);
  return bad.to_string();
}

class Executor {
 public:
  explicit Executor(const ScriptOptions& options) : options_(options) {}

  ExecResult run(const Script& script) {
    for (const auto& st : script.statements) {
      try {
        if (!std::visit([&](const auto& body) { return step(body, st.loc); }, st.body)) break;
      } catch (const Error& e) {
        result_.err += where(st.loc) + "error: " + e.what() + "\n";
        result_.exit_code = 1;
        break;
      }
    }
    return std::move(result_);
  }

 private:
  using Value = std::variant<bool, ClosedSubscheme>;

  bool declaration_failed(SourceLoc loc, const std::string& what, const Report& r) {
    if (r.ok()) return false;
    result_.err += where(loc) + what + " failed validation\n" + failures_only(r);
    result_.exit_code = 1;
    return true;
  }

  bool step(const RingDecl&, SourceLoc) { return true; }
  bool step(const IdealDecl&, SourceLoc) { return true; }

  bool step(const SchemeDecl& d, SourceLoc loc) {
    std::vector<GlueRecord> glue;
    for (const auto& g : d.glue)
      glue.push_back(make_glue(d.patches[g.i], g.i, g.f_ij, d.patches[g.j], g.j, g.f_ji, g.images,
                               g.inverse_image));
    Scheme x = GluedScheme::make(d.patches, std::move(glue));
    if (declaration_failed(loc, "scheme " + d.name, validate_scheme(*x, options_.cocycle_check))) return false;
    schemes_.emplace(d.name, std::move(x));
    return true;
  }

  bool step(const MorphismDecl& d, SourceLoc loc) {
    SchemeMorphism f(schemes_.at(d.source), schemes_.at(d.target), d.patches);
    if (declaration_failed(loc, "morphism " + d.name, validate_morphism(f))) return false;
    morphisms_.emplace(d.name, std::move(f));
    return true;
  }

  bool step(const SubschemeDecl& d, SourceLoc loc) {
    ClosedSubscheme z(schemes_.at(d.scheme), d.ideals);
    if (declaration_failed(loc, "subscheme " + d.name, validate(z))) return false;
    subschemes_.emplace(d.name, std::move(z));
    return true;
  }

  bool step(const EvalCmd& c, SourceLoc) {
    const Value v = eval(c.expr);
    result_.out += to_string(c.expr) + " = ";
    if (const bool* b = std::get_if<bool>(&v))
      result_.out += *b ? "true\n" : "false\n";
    else
      result_.out += canon(std::get<ClosedSubscheme>(v)).to_string() + "\n";
    return true;
  }

  bool step(const CheckCmd& c, SourceLoc) {
    Report r;
    if (c.expr) {
      r.check(std::get<bool>(eval(*c.expr)), to_string(*c.expr), "assertion does not hold");
    } else if (auto s = schemes_.find(*c.name); s != schemes_.end()) {
      r = validate_scheme(*s->second, options_.cocycle_check);
    } else if (auto m = morphisms_.find(*c.name); m != morphisms_.end()) {
      r = validate_morphism(m->second);
      r.check(r.ok(), "morphism " + *c.name, "validation failed");
    } else {
      r = validate(subschemes_.at(*c.name));
      r.check(r.ok(), "subscheme " + *c.name, "validation failed");
    }
    emit(r);
    return true;
  }

  bool step(const LawsCmd& c, SourceLoc) {
    LawOptions opts;
    opts.seed = c.seed.value_or(options_.default_seed);
    if (c.max_n) opts.max_n = *c.max_n;
    emit(run_laws(c.module, opts));
    return true;
  }

  void emit(const Report& r) {
    result_.out += r.to_string();
    if (!r.ok()) result_.exit_code = 1;
  }

  ClosedSubscheme subscheme(const Expr& e) { return std::get<ClosedSubscheme>(eval(e)); }

  Value eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Name:
        return subschemes_.at(e.name);
      case Expr::Kind::Mul:
        return mul(subscheme(e.args[0]), subscheme(e.args[1]));
      case Expr::Kind::Add:
        return add(subscheme(e.args[0]), subscheme(e.args[1]));
      case Expr::Kind::Eq:
        return eq(subscheme(e.args[0]), subscheme(e.args[1]));
      case Expr::Kind::Canon:
        return canon(subscheme(e.args[0]));
      case Expr::Kind::Whole:
        return whole(schemes_.at(e.name));
      case Expr::Kind::Empty:
        return empty(schemes_.at(e.name));
      case Expr::Kind::Pullback:
        return pullback(morphisms_.at(e.name), subscheme(e.args[0]));
    }
    throw Error("unreachable expression kind");
  }

  ScriptOptions options_;
  ExecResult result_;
  std::map<std::string, Scheme> schemes_;
  std::map<std::string, SchemeMorphism> morphisms_;
  std::map<std::string, ClosedSubscheme> subschemes_;
};

}  // namespace

std::string to_string(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Name:
      return e.name;
    case Expr::Kind::Mul:
      return "mul(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ")";
    case Expr::Kind::Add:
      return "add(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ")";
    case Expr::Kind::Eq:
      return "eq(" + to_string(e.args[0]) + ", " + to_string(e.args[1]) + ")";
    case Expr::Kind::Canon:
      return "canon(" + to_string(e.args[0]) + ")";
    case Expr::Kind::Whole:
      return "whole(" + e.name + ")";
    case Expr::Kind::Empty:
      return "empty(" + e.name + ")";
    case Expr::Kind::Pullback:
      return "pullback(" + e.name + ", " + to_string(e.args[0]) + ")";
  }
  return "?";
}

Script parse_script(std::string_view text, const ScriptOptions& options) {
  return Parser(text, options).run();
}

ExecResult execute(const Script& script, const ScriptOptions& options) {
  return Executor(options).run(script);
}

}  // namespace ssc
