#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ssc/algebra.hpp"
#include "ssc/errors.hpp"
#include "ssc/scheme.hpp"

namespace ssc {

struct SourceLoc {
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parse-time error: bad syntax, redeclaration, unknown name, reserved prefix
/// or a type mismatch between declared objects.
class ScriptError : public Error {
 public:
  ScriptError(SourceLoc loc, const std::string& message)
      : Error(std::to_string(loc.line) + ":" + std::to_string(loc.column) + ": " + message),
        loc_(loc), message_(message) {}
  SourceLoc loc() const noexcept { return loc_; }
  const std::string& message() const noexcept { return message_; }

 private:
  SourceLoc loc_;
  std::string message_;
};

struct Expr {
  enum class Kind { Name, Mul, Add, Pullback, Eq, Canon, Whole, Empty };
  Kind kind = Kind::Name;
  /// Subscheme name for Name, morphism for Pullback, scheme for Whole/Empty.
  std::string name;
  std::vector<Expr> args;
  SourceLoc loc;
  /// Name of the scheme the value lives on; empty for Eq, which is boolean.
  std::string scheme;
};

/// Canonical spelling, e.g. `pullback(diag, add(Vx, Vy))`.
std::string to_string(const Expr& e);

struct RingDecl {
  std::string name;
  Algebra algebra;
};

struct IdealDecl {
  std::string name;
  std::string ring;
  Ideal ideal;
};

struct GlueDecl {
  std::size_t i = 0;
  std::size_t j = 0;
  Polynomial f_ij;
  Polynomial f_ji;
  /// Images of the patch-i variables in the localized patch-j algebra.
  std::vector<Polynomial> images;
  std::optional<Polynomial> inverse_image;
  SourceLoc loc;
};

struct SchemeDecl {
  std::string name;
  std::vector<std::string> rings;
  std::vector<Algebra> patches;
  std::vector<GlueDecl> glue;
};

struct MorphismDecl {
  std::string name;
  std::string source;
  std::string target;
  /// Indexed by source patch.
  std::vector<PatchMap> patches;
};

struct SubschemeDecl {
  std::string name;
  std::string scheme;
  std::vector<Ideal> ideals;
};

struct EvalCmd {
  Expr expr;
};

/// `check NAME;` re-validates a declared object; `check EXPR;` asserts that
/// a boolean expression holds.
struct CheckCmd {
  std::optional<std::string> name;
  std::optional<Expr> expr;
};

struct LawsCmd {
  std::string module;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> max_n;
};

using StatementBody = std::variant<RingDecl, IdealDecl, SchemeDecl, MorphismDecl, SubschemeDecl,
                                   EvalCmd, CheckCmd, LawsCmd>;

struct Statement {
  StatementBody body;
  SourceLoc loc;
};

struct Script {
  std::vector<Statement> statements;
};

struct ScriptOptions {
  MonomialOrder order = MonomialOrder::grevlex();
  bool cocycle_check = false;
  std::uint64_t default_seed = 1;
};

/// Throws ScriptError at the first problem.
Script parse_script(std::string_view text, const ScriptOptions& options = {});

struct ExecResult {
  std::string out;
  std::string err;
  /// 0 ok, 1 validation or assertion failure.
  int exit_code = 0;
};

ExecResult execute(const Script& script, const ScriptOptions& options = {});

}  // namespace ssc
