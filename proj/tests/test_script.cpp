#include <gtest/gtest.h>

#include "ssc/script.hpp"

using namespace ssc;

namespace {

const char* kProjectiveLine = R"(# Points on the projective line, two affine charts.
ring A = QQ[u];
ring B = QQ[v];
scheme P1 { patch A; patch B; glue 0:u ~ 1:v via { u -> #inv(v) }; }
subscheme Z of P1 = [ (u - 2) ; (2*v - 1) ];
subscheme W of P1 = [ (u - 3) ; (3*v - 1) ];
eval add(Z, W);
check eq(mul(Z, W), empty(P1));
)";

const char* kDiagonal = R"(ring R = QQ[x, y];
ring T = QQ[t];
scheme Y { patch R; }
scheme D { patch T; }
morphism diag : D -> Y { patch 0 -> 0 via { x -> t, y -> t }; }
subscheme Vx of Y = [ (x) ];
subscheme Vy of Y = [ (y) ];
)";

SourceLoc error_at(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ScriptError& e) {
    return e.loc();
  }
  ADD_FAILURE() << "no error for:\n" << text;
  return {};
}

std::string message_of(const std::string& text) {
  try {
    parse_script(text);
  } catch (const ScriptError& e) {
    return e.message();
  }
  return {};
}

ExecResult run(const std::string& text, const ScriptOptions& options = {}) {
  return execute(parse_script(text, options), options);
}

}  // namespace

TEST(ParseScript, ProjectiveLineSample) {
  const Script s = parse_script(kProjectiveLine);
  ASSERT_EQ(s.statements.size(), 7u);
  EXPECT_TRUE(std::holds_alternative<RingDecl>(s.statements[0].body));
  EXPECT_TRUE(std::holds_alternative<SchemeDecl>(s.statements[2].body));
  EXPECT_TRUE(std::holds_alternative<CheckCmd>(s.statements[6].body));
  EXPECT_EQ(s.statements[2].loc.line, 4u);
  const auto& x = std::get<SchemeDecl>(s.statements[2].body);
  ASSERT_EQ(x.glue.size(), 1u);
  EXPECT_EQ(x.glue[0].i, 0u);
  EXPECT_EQ(x.glue[0].j, 1u);
}

TEST(ParseScript, Errors) {
  const SourceLoc eof = error_at("ring A = QQ[x, y];\nideal I in A = (x^2 -");
  EXPECT_EQ(eof.line, 2u);
  EXPECT_EQ(eof.column, 22u);
  const SourceLoc dup = error_at("ring A = QQ[x];\nring A = QQ[y];");
  EXPECT_EQ(dup.line, 2u);
  EXPECT_EQ(dup.column, 6u);
  EXPECT_NE(message_of("ring A = QQ[x];\nring A = QQ[y];").find("redeclaration"), std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x]; ideal I in B = (x);").find("unknown name 'B'"), std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x, #s];").find("reserved"), std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x]; ideal I in A = (x + #0);").find("reserved"), std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x]; ideal I in A = (2 x);").find("implicit multiplication"), std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x]; scheme X { patch A; } subscheme Z of X = [ (x) ; (x) ];")
                .find("only 1 patches"),
            std::string::npos);
  EXPECT_NE(message_of("ring A = QQ[x]; scheme X { patch A; glue 0:x ~ 1:x via { x -> x }; }").find("out of range"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(kDiagonal) + "eval mul(Vx, pullback(diag, Vx));").find("one scheme"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(kDiagonal) + "eval pullback(diag, pullback(diag, Vx));").find("needs a subscheme of 'Y'"),
            std::string::npos);
  EXPECT_NE(message_of(std::string(kDiagonal) + "eval mul(eq(Vx, Vy), Vx);").find("boolean"), std::string::npos);
  EXPECT_NE(message_of(std::string(kDiagonal) + "check R;").find("check needs"), std::string::npos);
  EXPECT_NE(message_of("laws nothing;").find("unknown law module"), std::string::npos);
}

TEST(ParseScript, Comments) {
  const Script s = parse_script("# heading\nring A = QQ[u]; # trailing\n#\nring B = QQ[v];# tail\n");
  EXPECT_EQ(s.statements.size(), 2u);
}

TEST(Execute, SpecExamples) {
  const ExecResult r = run(std::string(kProjectiveLine) +
                           "eval eq(mul(Z, W), mul(W, Z));\neval add(Z, empty(P1));\neval canon(Z);\n");
  EXPECT_EQ(r.exit_code, 0) << r.err;
  EXPECT_EQ(r.out,
            "add(Z, W) = [ (u^2 - 5*u + 6) ; (v^2 - 5/6*v + 1/6) ]\n"
            "PASS eq(mul(Z, W), empty(P1))\n"
            "eq(mul(Z, W), mul(W, Z)) = true\n"
            "add(Z, empty(P1)) = [ (u - 2) ; (v - 1/2) ]\n"
            "canon(Z) = [ (u - 2) ; (v - 1/2) ]\n");
  const ExecResult d = run(std::string(kDiagonal) + "eval pullback(diag, add(Vx, Vy));");
  EXPECT_EQ(d.out, "pullback(diag, add(Vx, Vy)) = [ (t^2) ]\n");
}

TEST(Execute, ExitCodes) {
  EXPECT_EQ(run(std::string(kDiagonal) + "check eq(Vx, Vy);").exit_code, 1);
  EXPECT_EQ(run(std::string(kDiagonal) + "check eq(Vx, Vx);").exit_code, 0);
  const ExecResult bad = run("ring A = QQ[u]; ring B = QQ[v];\n"
                             "scheme P1 { patch A; patch B; glue 0:u ~ 1:v via { u -> #inv(v) }; }\n"
                             "subscheme Z of P1 = [ (u - 2) ; (v - 1) ];\neval Z;\n");
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_TRUE(bad.out.empty());
  EXPECT_NE(bad.err.find("3:1: subscheme Z failed validation"), std::string::npos) << bad.err;
  const ExecResult not_invertible = run(
      "ring A = QQ[u]; ring B = QQ[v];\nscheme X { patch A; patch B; glue 0:u ~ 1:v via { u -> v - 1 }; }\n");
  EXPECT_EQ(not_invertible.exit_code, 1);
  EXPECT_NE(not_invertible.err.find("not invertible"), std::string::npos) << not_invertible.err;
}

TEST(Execute, OrderOptionChangesCanonicalForm) {
  const std::string text = "ring R = QQ[x, y]; scheme A2 { patch R; } subscheme Z of A2 = [ (x - y^2) ];\neval Z;\n";
  ScriptOptions lex;
  lex.order = MonomialOrder::lex();
  EXPECT_EQ(run(text).out, "Z = [ (y^2 - x) ]\n");
  EXPECT_EQ(run(text, lex).out, "Z = [ (x - y^2) ]\n");
}

TEST(Execute, Deterministic) {
  const std::string text = std::string(kProjectiveLine) + "laws subscheme seed=4;\n";
  const ExecResult a = run(text), b = run(text);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.exit_code, 0);
  EXPECT_NE(a.out.find("VIOLATED additive homomorphism"), std::string::npos);
}
