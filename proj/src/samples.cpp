#include "ssc/samples.hpp"

namespace ssc::samples {

namespace {

Algebra ring(std::vector<std::string> vars) { return AffineAlgebra::make(std::move(vars)); }

// Glue along D(f_ij) ~ D(f_ji) where images are written over the localized
// patch j, whose inverse variable is its last variable.
GlueRecord glue(const std::vector<Algebra>& p, std::size_t i, const char* f_ij, std::size_t j,
                const char* f_ji, std::initializer_list<const char*> images) {
  const Localization loc_j = localize(p[j], p[j]->parse(f_ji));
  std::vector<Polynomial> im;
  for (const char* text : images) {
    // "S" stands for the inverse variable of the localized patch j
    std::vector<std::string> names = loc_j.algebra->variables();
    names.back() = "S";
    im.push_back(parse_poly(text, names, loc_j.algebra->order()));
  }
  return make_glue(p[i], i, p[i]->parse(f_ij), p[j], j, p[j]->parse(f_ji), std::move(im));
}

}  // namespace

Scheme projective_line() {
  std::vector<Algebra> p = {ring({"u"}), ring({"v"})};
  std::vector<GlueRecord> g = {glue(p, 0, "u", 1, "v", {"S"})};
  return GluedScheme::make(p, std::move(g));
}

Scheme doubled_origin_line() {
  std::vector<Algebra> p = {ring({"x"}), ring({"y"})};
  std::vector<GlueRecord> g = {glue(p, 0, "x", 1, "y", {"y"})};
  return GluedScheme::make(p, std::move(g));
}

Scheme projective_plane() {
  // patch 0: a = X1/X0, b = X2/X0; patch 1: c = X0/X1, d = X2/X1;
  // patch 2: e = X0/X2, g = X1/X2
  std::vector<Algebra> p = {ring({"a", "b"}), ring({"c", "d"}), ring({"e", "g"})};
  std::vector<GlueRecord> g = {
      glue(p, 0, "a", 1, "c", {"S", "d*S"}),
      glue(p, 0, "b", 2, "e", {"g*S", "S"}),
      glue(p, 1, "d", 2, "g", {"e*S", "S"}),
  };
  return GluedScheme::make(p, std::move(g));
}

Scheme twisted_triple_line() {
  std::vector<Algebra> p = {ring({"x"}), ring({"y"}), ring({"z"})};
  std::vector<GlueRecord> g = {
      glue(p, 0, "x", 1, "y", {"y"}),
      glue(p, 1, "y", 2, "z", {"z"}),
      glue(p, 0, "x", 2, "z", {"-z"}),
  };
  return GluedScheme::make(p, std::move(g));
}

SchemeMorphism squaring(const Scheme& p1) {
  const Algebra& a = p1->patch(0);
  const Algebra& b = p1->patch(1);
  return SchemeMorphism(p1, p1,
                        {{0, RingMap(a, a, {a->parse("u^2")})}, {1, RingMap(b, b, {b->parse("v^2")})}});
}

SchemeMorphism diagonal() {
  const Algebra t = ring({"t"});
  const Algebra xy = ring({"x", "y"});
  return SchemeMorphism(GluedScheme::affine(t), GluedScheme::affine(xy),
                        {{0, RingMap(xy, t, {t->parse("t"), t->parse("t")})}});
}

ClosedSubscheme projective_line_form(const Scheme& p1, const Polynomial& f_of_u, unsigned degree) {
  const Algebra& a = p1->patch(0);
  const Algebra& b = p1->patch(1);
  // F(X0, X1) = X0^degree f(X1/X0); on patch 1, F(v, 1) = v^degree f(1/v)
  Polynomial on_b = b->zero();
  for (const auto& t : f_of_u.terms()) {
    const std::uint32_t e = t.mono[0];
    if (e > degree) throw Error("form degree is smaller than the degree of f");
    on_b = on_b + Polynomial::monomial(t.coeff, Monomial::variable(1, 0, degree - e), b->order());
  }
  return ClosedSubscheme(p1, {Ideal(a, {f_of_u}), Ideal(b, {on_b})});
}

ClosedSubscheme random_projective_line_subscheme(Rng& rng, const Scheme& p1) {
  const Algebra& a = p1->patch(0);
  std::uniform_int_distribution<int> roots(-3, 3);
  std::uniform_int_distribution<unsigned> factors(0, 3);
  std::uniform_int_distribution<unsigned> at_infinity(0, 1);
  Polynomial f = a->one();
  const unsigned n = factors(rng);
  for (unsigned k = 0; k < n; ++k) f = f * (a->var(0) - a->constant(roots(rng)));
  const unsigned degree = n + at_infinity(rng);
  if (degree == 0) return std::uniform_int_distribution<int>(0, 1)(rng) ? empty(p1) : whole(p1);
  return projective_line_form(p1, f, degree);
}

ClosedSubscheme random_affine_subscheme(Rng& rng, const Scheme& affine, std::size_t max_gens,
                                        const RandomShape& shape) {
  const Algebra& a = affine->patch(0);
  return ClosedSubscheme(affine, {Ideal(a, random_generators(rng, a->nvars(), a->order(), max_gens, shape))});
}

SchemeMorphism random_substitution(Rng& rng, const Scheme& source, const Scheme& target,
                                   const RandomShape& shape) {
  const Algebra& from = target->patch(0);
  const Algebra& to = source->patch(0);
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < from->nvars(); ++k)
    images.push_back(random_poly(rng, to->nvars(), to->order(), shape));
  return SchemeMorphism(source, target, {{0, RingMap(from, to, std::move(images))}});
}

}  // namespace ssc::samples
