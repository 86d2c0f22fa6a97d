#include "ssc/laws.hpp"

#include <algorithm>

#include "ssc/oracle.hpp"
#include "ssc/samples.hpp"

namespace ssc {

namespace {

const std::vector<std::string> kNames = {"x", "y", "z"};

std::string show(const Polynomial& f) { return format_poly(f, kNames); }

std::string show(std::initializer_list<Polynomial> fs) {
  std::string s;
  for (const auto& f : fs) s += (s.empty() ? "" : " ; ") + show(f);
  return s;
}

Report polyring_laws(Rng& rng) {
  Report report;
  LawTally tally(report, "polyring ");
  const RandomShape shape;
  for (int k = 0; k < 50; ++k) {
    const Polynomial f = random_poly(rng, 3, MonomialOrder::grevlex(), shape);
    const Polynomial g = random_poly(rng, 3, MonomialOrder::grevlex(), shape);
    const Polynomial h = random_poly(rng, 3, MonomialOrder::grevlex(), shape);
    auto w = [&] { return show({f, g, h}); };
    tally.expect(f + g == g + f, "add commutative", w);
    tally.expect((f + g) + h == f + (g + h), "add associative", w);
    tally.expect(f * g == g * f, "mul commutative", w);
    tally.expect((f * g) * h == f * (g * h), "mul associative", w);
    tally.expect(f * (g + h) == f * g + f * h, "distributive", w);
    tally.expect((f - f).is_zero(), "additive inverse", w);
    tally.expect(parse_poly(show(f), kNames) == f, "format/parse round trip", w);
  }
  for (const MonomialOrder order : {MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(1)}) {
    for (int k = 0; k < 100; ++k) {
      const Monomial a = random_monomial(rng, 3, 4), b = random_monomial(rng, 3, 4), c = random_monomial(rng, 3, 4);
      auto w = [&] { return order.name(); };
      const bool ab = order.less(a, b), ba = order.less(b, a);
      tally.expect((a == b) == (!ab && !ba) && !(ab && ba), "order total", w);
      tally.expect(!ab || order.less(a * c, b * c), "order multiplicative", w);
      tally.expect(!order.less(a * c, a), "order well-founded step", w);
    }
  }
  tally.flush();
  return report;
}

bool is_groebner(const GrobnerBasis& gb) {
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
      if (!normal_form(s_polynomial(gb.generators[i], gb.generators[j], gb.order), gb.generators, gb.order)
               .is_zero())
        return false;
  return true;
}

bool is_reduced(const GrobnerBasis& gb) {
  for (const auto& g : gb.generators) {
    if (leading_term(g, gb.order).coeff != 1) return false;
    for (const auto& h : gb.generators) {
      if (&g == &h) continue;
      for (const Term& t : g.terms())
        if (leading_term(h, gb.order).mono.divides(t.mono)) return false;
    }
  }
  return true;
}

Report groebner_laws(Rng& rng) {
  Report report;
  LawTally tally(report, "groebner ");
  const RandomShape shape;
  for (const MonomialOrder order : {MonomialOrder::lex(), MonomialOrder::grevlex()}) {
    for (int k = 0; k < 20; ++k) {
      auto gens = random_generators(rng, 3, order, 3, shape);
      const GrobnerBasis gb = reduced_groebner(gens, order);
      auto w = [&] {
        std::string s;
        for (const auto& g : gens) s += (s.empty() ? "" : ", ") + show(g);
        return order.name() + " (" + s + ")";
      };
      tally.expect(is_groebner(gb), "S-pairs reduce to zero", w);
      tally.expect(is_reduced(gb), "basis is reduced", w);
      tally.expect(std::all_of(gens.begin(), gens.end(), [&](const Polynomial& g) { return contains(gb, g); }),
                   "generators are members", w);
      std::shuffle(gens.begin(), gens.end(), rng);
      gens.push_back(gens.front() * random_poly(rng, 3, order, shape) + gens.back());
      tally.expect(reduced_groebner(gens, order) == gb, "presentation invariance", w);
    }
  }
  tally.flush();
  return report;
}

Report algebra_laws(Rng& rng) {
  Report report;
  LawTally tally(report, "algebra ");
  const Algebra a = AffineAlgebra::make({"x", "y", "z"});
  const RandomShape shape{.max_terms = 2, .max_degree = 2, .coeff_range = 3, .min_degree = 1};
  for (int k = 0; k < 15; ++k) {
    const Ideal i(a, random_generators(rng, 3, a->order(), 2, shape));
    const Ideal j(a, random_generators(rng, 3, a->order(), 2, shape));
    auto w = [&] { return i.to_string() + " ; " + j.to_string(); };
    const Ideal meet = ideal_intersect(i, j);
    const Ideal join = ideal_sum(i, j);
    tally.expect(meet == ideal_intersect(j, i), "intersection commutative", w);
    tally.expect(join == ideal_sum(j, i), "sum commutative", w);
    tally.expect(std::all_of(meet.basis().begin(), meet.basis().end(),
                             [&](const Polynomial& f) { return i.contains(f) && j.contains(f); }),
                 "intersection inside both", w);
    tally.expect(std::all_of(i.basis().begin(), i.basis().end(), [&](const Polynomial& f) { return join.contains(f); }),
                 "sum contains operands", w);
    const Polynomial x = a->var(0);
    const Ideal sat = saturate(i, x);
    tally.expect(saturate(sat, x) == sat, "saturation idempotent", w);
    std::vector<Polynomial> rel = i.basis();
    const Algebra q = AffineAlgebra::make({"x", "y", "z"}, rel);
    const RingMap proj(a, q, {q->var(0), q->var(1), q->var(2)});
    tally.expect(map_kernel(proj) == i, "kernel of quotient map", w);
    tally.expect(contract(proj, extend(proj, j)) == ideal_sum(i, j), "contraction of extension", w);
  }
  tally.flush();
  return report;
}

Report scheme_laws(Rng& rng) {
  Report report;
  const Scheme p1 = samples::projective_line();
  const Scheme p2 = samples::projective_plane();
  report.check(validate_scheme(*p1).ok() && validate_scheme(*p1, true).ok(), "scheme P^1 validates");
  report.check(validate_scheme(*p2, true).ok(), "scheme P^2 validates with cocycle check");
  report.check(validate_scheme(*samples::doubled_origin_line(), true).ok(), "scheme doubled origin validates");
  report.check(!validate_scheme(*samples::twisted_triple_line(), true).ok(),
               "scheme twisted triple line fails cocycle check");
  report.check(validate_morphism(samples::squaring(p1)).ok(), "scheme squaring morphism validates");
  LawTally tally(report, "scheme ");
  for (int k = 0; k < 20; ++k) {
    const ClosedSubscheme z = samples::random_projective_line_subscheme(rng, p1);
    auto w = [&] { return z.to_string(); };
    const Ideal there = transport(*p1, 0, 1, z.ideal(0));
    tally.expect(there == saturate(z.ideal(1), p1->patch(1)->var(0)), "transport matches saturation", w);
    tally.expect(transport(*p1, 1, 0, there) == saturate(z.ideal(0), p1->patch(0)->var(0)),
                 "transport round trip", w);
  }
  tally.flush();
  return report;
}

Report subscheme_laws(Rng& rng) {
  Report report;
  LawTally tally(report, "subscheme ");
  const Scheme p1 = samples::projective_line();
  const Scheme a3 = GluedScheme::affine(AffineAlgebra::make({"x", "y", "z"}));
  const RandomShape shape{.max_terms = 2, .max_degree = 2, .coeff_range = 3, .min_degree = 1};
  for (int k = 0; k < 30; ++k) {
    const bool projective = k % 2 == 0;
    auto draw = [&] {
      return projective ? samples::random_projective_line_subscheme(rng, p1)
                        : samples::random_affine_subscheme(rng, a3, 2, shape);
    };
    const ClosedSubscheme z = draw(), w = draw(), v = draw();
    const Scheme& x = z.scheme();
    auto wit = [&] { return z.to_string() + " , " + w.to_string() + " , " + v.to_string(); };
    tally.expect(eq(mul(z, w), mul(w, z)), "mul commutative", wit);
    tally.expect(eq(add(z, w), add(w, z)), "add commutative", wit);
    tally.expect(eq(mul(mul(z, w), v), mul(z, mul(w, v))), "mul associative", wit);
    tally.expect(eq(add(add(z, w), v), add(z, add(w, v))), "add associative", wit);
    tally.expect(eq(mul(z, z), z) && eq(add(z, z), z), "idempotent", wit);
    tally.expect(eq(mul(z, whole(x)), z), "whole is the mul identity", wit);
    tally.expect(eq(add(z, empty(x)), z), "empty is the add identity", wit);
    tally.expect(eq(add(z, mul(z, w)), z) && eq(mul(z, add(z, w)), z), "absorption", wit);
    tally.expect(validate(mul(z, w)).ok() && validate(add(z, w)).ok(), "closure under validate", wit);
  }
  const SchemeMorphism sq = samples::squaring(p1);
  const SchemeMorphism sq2 = compose(sq, sq);
  const SchemeMorphism id = SchemeMorphism::identity(p1);
  for (int k = 0; k < 10; ++k) {
    const ClosedSubscheme z = samples::random_projective_line_subscheme(rng, p1);
    const ClosedSubscheme w = samples::random_projective_line_subscheme(rng, p1);
    auto wit = [&] { return z.to_string() + " , " + w.to_string(); };
    const ClosedSubscheme pz = pullback(sq, z);
    tally.expect(eq(pullback(id, z), z), "pullback along identity", wit);
    tally.expect(eq(pullback(sq2, z), pullback(sq, pz)), "pullback along composite", wit);
    tally.expect(eq(pullback(sq, mul(z, w)), mul(pz, pullback(sq, w))), "pullback multiplicative", wit);
    tally.expect(validate(pz).ok(), "pullback validates", wit);
  }
  tally.flush();
  const SchemeMorphism diag = samples::diagonal();
  const Algebra& xy = diag.target()->patch(0);
  report.append(check_additive_law(diag, ClosedSubscheme(diag.target(), {Ideal(xy, {xy->var(0)})}),
                                   ClosedSubscheme(diag.target(), {Ideal(xy, {xy->var(1)})})));
  return report;
}

Report oracle_laws(Rng& rng, std::uint64_t max_n) {
  Report report;
  Report first_failure;
  std::size_t checked = 0;
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    const Report r = oracle::cyc_laws(n);
    checked += r.lines().size();
    if (!r.ok() && first_failure.lines().empty()) first_failure = r;
  }
  if (first_failure.lines().empty())
    report.add(Status::Pass, "oracle Z/n laws for n <= " + std::to_string(max_n),
               std::to_string(checked) + " law lines");
  else
    report.append(first_failure);
  report.append(oracle::int_laws(max_n, std::min<std::uint64_t>(max_n, 100)));

  LawTally tally(report, "oracle ");
  for (std::uint64_t p : {2, 3, 5, 7}) {
    std::vector<std::uint64_t> powers;
    std::uint64_t q = 1;
    for (int a = 1; a <= 20; ++a) powers.push_back(q *= p);
    const bool distinct = std::adjacent_find(powers.begin(), powers.end()) == powers.end();
    const bool same_support = std::all_of(powers.begin(), powers.end(), [&](std::uint64_t m) {
      return oracle::prime_support(m) == std::vector<std::uint64_t>{p};
    });
    tally.expect(distinct && same_support, "prime powers distinct with equal support",
                 [&] { return std::to_string(p); });
  }
  const Algebra a = AffineAlgebra::make({"x"});
  for (int k = 0; k < 100; ++k) {
    const Polynomial f = random_root_product(rng, 4, 3, a->order());
    const Polynomial g = random_root_product(rng, 4, 3, a->order());
    const Ideal i(a, {f}), j(a, {g});
    auto w = [&] { return a->format(f) + " ; " + a->format(g); };
    tally.expect(ideal_intersect(i, j) == Ideal(a, {oracle::uni_intersect_oracle(f, g)}),
                 "intersection equals Euclidean lcm", w);
    tally.expect(ideal_sum(i, j) == Ideal(a, {oracle::uni_gcd_oracle(f, g)}), "sum equals Euclidean gcd", w);
  }
  tally.flush();
  return report;
}

}  // namespace

const std::vector<std::string>& law_modules() {
  static const std::vector<std::string> modules = {"polyring", "groebner", "algebra",
                                                   "scheme",   "subscheme", "oracle"};
  return modules;
}

Report run_laws(std::string_view module, const LawOptions& options) {
  if (module == "all") {
    Report all;
    for (const auto& m : law_modules()) all.append(run_laws(m, options));
    return all;
  }
  Rng rng(options.seed);
  if (module == "polyring") return polyring_laws(rng);
  if (module == "groebner") return groebner_laws(rng);
  if (module == "algebra") return algebra_laws(rng);
  if (module == "scheme") return scheme_laws(rng);
  if (module == "subscheme") return subscheme_laws(rng);
  if (module == "oracle") return oracle_laws(rng, options.max_n);
  throw Error("unknown law module '" + std::string(module) + "'");
}

}  // namespace ssc
