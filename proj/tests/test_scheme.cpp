#include <gtest/gtest.h>

#include "ssc/samples.hpp"
#include "ssc/scheme.hpp"

using namespace ssc;

namespace {

Ideal I(const Algebra& a, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> g;
  for (const char* s : gens) g.push_back(a->parse(s));
  return Ideal(a, g);
}

}  // namespace

TEST(Localize, Examples) {
  const Algebra u = AffineAlgebra::make({"u"});
  const Localization lu = localize(u, u->parse("u"));
  EXPECT_EQ(lu.algebra->describe(), "QQ[u, #0] / (u*#0 - 1)");
  EXPECT_EQ(lu.inverse_index, 1u);
  const Localization l1 = localize(u, u->one());
  EXPECT_EQ(l1.algebra->describe(), "QQ[u, #0] / (#0 - 1)");
  const Localization l0 = localize(u, u->zero());
  EXPECT_TRUE(l0.algebra->is_zero_ring());
  // a second localization picks the next auxiliary name
  EXPECT_EQ(localize(lu.algebra, lu.algebra->var(0)).algebra->variables().back(), "#1");
}

TEST(Transport, ProjectiveLinePoint) {
  const Scheme p1 = samples::projective_line();
  const Ideal moved = transport(*p1, 0, 1, I(p1->patch(0), {"u - 2"}));
  EXPECT_EQ(moved, I(p1->patch(1), {"2*v - 1"}));
  EXPECT_TRUE(transport(*p1, 0, 1, Ideal::zero(p1->patch(0))).is_zero());
  EXPECT_TRUE(transport(*p1, 0, 1, Ideal::unit(p1->patch(0))).is_unit());
  // the origin u = 0 lies outside the overlap
  EXPECT_TRUE(transport(*p1, 0, 1, I(p1->patch(0), {"u^3"})).is_unit());
  EXPECT_THROW(transport(*samples::twisted_triple_line(), 0, 0, Ideal::zero(p1->patch(0))),
               MissingGlue);
}

TEST(ValidateScheme, ProjectiveLine) {
  const Scheme p1 = samples::projective_line();
  ASSERT_EQ(p1->glue().size(), 2u);  // mirror derived
  EXPECT_EQ(p1->glue_between(1, 0).theta.images()[0], p1->glue_between(1, 0).theta.target()->var(1));
  const Report r = validate_scheme(*p1);
  EXPECT_TRUE(r.ok()) << r.to_string();
  EXPECT_NE(r.to_string().find("pairwise-checked"), std::string::npos);
  EXPECT_TRUE(validate_scheme(*p1, true).ok());
}

TEST(ValidateScheme, BrokenMirror) {
  // 0 -> 1 by u -> 1/v, but the supplied mirror sends v -> u instead of 1/u
  const Algebra a = AffineAlgebra::make({"u"});
  const Algebra b = AffineAlgebra::make({"v"});
  const Localization la = localize(a, a->parse("u"));
  const Localization lb = localize(b, b->parse("v"));
  GlueRecord forward = make_glue(a, 0, a->parse("u"), b, 1, b->parse("v"), {lb.algebra->var(1)});
  GlueRecord backward = make_glue(b, 1, b->parse("v"), a, 0, a->parse("u"), {la.algebra->var(0)});
  const Scheme x = GluedScheme::make({a, b}, {forward, backward});
  const Report r = validate_scheme(*x);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_string().find("FAIL glue 0->1 inverse"), std::string::npos) << r.to_string();
}

TEST(ValidateScheme, MissingMirrorIsReported) {
  const Algebra a = AffineAlgebra::make({"u"});
  const Algebra b = AffineAlgebra::make({"v"});
  const Localization lb = localize(b, b->parse("v"));
  // u -> v^2 is not invertible, so no mirror can be derived
  GlueRecord g = make_glue(a, 0, a->parse("u"), b, 1, b->parse("v"),
                           {lb.algebra->var(0) * lb.algebra->var(0)});
  const Scheme x = GluedScheme::make({a, b}, {g});
  const Report r = validate_scheme(*x);
  EXPECT_FALSE(r.ok());
  EXPECT_NE(r.to_string().find("FAIL glue 0->1 mirror"), std::string::npos) << r.to_string();
}

TEST(ValidateScheme, SinglePatchAndDoubledOrigin) {
  EXPECT_TRUE(validate_scheme(*GluedScheme::affine(AffineAlgebra::make({"x", "y"}))).ok());
  EXPECT_TRUE(validate_scheme(*samples::doubled_origin_line()).ok());
  EXPECT_TRUE(validate_scheme(*samples::doubled_origin_line(), true).ok());
}

TEST(ValidateScheme, Cocycle) {
  const Scheme p2 = samples::projective_plane();
  EXPECT_EQ(p2->glue().size(), 6u);
  const Report pairwise = validate_scheme(*p2);
  EXPECT_TRUE(pairwise.ok()) << pairwise.to_string();
  const Report full = validate_scheme(*p2, true);
  EXPECT_TRUE(full.ok()) << full.to_string();
  EXPECT_NE(full.to_string().find("PASS cocycle 0,1,2"), std::string::npos);

  const Scheme twisted = samples::twisted_triple_line();
  EXPECT_TRUE(validate_scheme(*twisted).ok());
  const Report broken = validate_scheme(*twisted, true);
  EXPECT_FALSE(broken.ok());
  EXPECT_NE(broken.to_string().find("FAIL cocycle"), std::string::npos);
}

TEST(ValidateMorphism, Examples) {
  const Scheme p1 = samples::projective_line();
  EXPECT_TRUE(validate_morphism(samples::squaring(p1)).ok());
  EXPECT_TRUE(validate_morphism(SchemeMorphism::identity(p1)).ok());
  const Algebra& a = p1->patch(0);
  const Algebra& b = p1->patch(1);
  const SchemeMorphism mismatched(
      p1, p1, {{0, RingMap(a, a, {a->parse("u^2")})}, {1, RingMap(b, b, {b->parse("v^3")})}});
  EXPECT_FALSE(validate_morphism(mismatched).ok());
  EXPECT_TRUE(validate_morphism(samples::diagonal()).ok());
}

TEST(ValidateMorphism, AcrossTargetPatches) {
  // the inversion u -> 1/u swaps the two charts of P^1
  const Scheme p1 = samples::projective_line();
  const Algebra& a = p1->patch(0);
  const Algebra& b = p1->patch(1);
  const SchemeMorphism swap(p1, p1, {{1, RingMap(b, a, {a->parse("u")})}, {0, RingMap(a, b, {b->parse("v")})}});
  EXPECT_TRUE(validate_morphism(swap).ok()) << validate_morphism(swap).to_string();
  const SchemeMorphism bad(p1, p1, {{1, RingMap(b, a, {a->parse("u")})}, {0, RingMap(a, b, {b->parse("2*v")})}});
  EXPECT_FALSE(validate_morphism(bad).ok());
  EXPECT_TRUE(validate_morphism(compose(swap, swap)).ok());
}

TEST(Transport, RoundTripIsSaturation) {
  const Scheme p1 = samples::projective_line();
  const Algebra& a = p1->patch(0);
  for (const char* text : {"u^2*(u - 1)", "u*(u + 2)^2", "u^4", "u - 5", "3"}) {
    const Ideal i = I(a, {text});
    const Ideal back = transport(*p1, 1, 0, transport(*p1, 0, 1, i));
    EXPECT_EQ(back, saturate(i, a->parse("u"))) << text;
  }
}

TEST(Transport, PreservesLatticeOperationsOfSaturatedIdeals) {
  const Scheme p2 = samples::projective_plane();
  const Algebra& a = p2->patch(0);
  const Polynomial f = a->parse("a");
  const std::vector<Ideal> ideals = {saturate(I(a, {"a - 1", "b^2"}), f), saturate(I(a, {"a*b - 2"}), f),
                                     saturate(I(a, {"b - a^2"}), f)};
  for (const auto& x : ideals)
    for (const auto& y : ideals) {
      EXPECT_EQ(transport(*p2, 0, 1, ideal_sum(x, y)),
                ideal_sum(transport(*p2, 0, 1, x), transport(*p2, 0, 1, y)));
      EXPECT_EQ(transport(*p2, 0, 1, ideal_intersect(x, y)),
                ideal_intersect(transport(*p2, 0, 1, x), transport(*p2, 0, 1, y)));
    }
}
