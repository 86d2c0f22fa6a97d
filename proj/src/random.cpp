#include "ssc/random.hpp"

#include <algorithm>

namespace ssc {

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree, unsigned min_degree) {
  std::uniform_int_distribution<unsigned> total(std::min(min_degree, max_degree), max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, nvars == 0 ? 0 : nvars - 1);
  std::vector<std::uint32_t> e(nvars, 0);
  if (nvars == 0) return Monomial(std::move(e));
  const unsigned d = total(rng);
  for (unsigned i = 0; i < d; ++i) ++e[pick(rng)];
  return Monomial(std::move(e));
}

Polynomial random_poly(Rng& rng, std::size_t nvars, MonomialOrder order, const RandomShape& shape) {
  std::uniform_int_distribution<std::size_t> count(1, shape.max_terms);
  std::uniform_int_distribution<int> coeff(-shape.coeff_range, shape.coeff_range - 1);
  std::vector<Term> terms;
  const std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) {
    int c = coeff(rng);
    if (c >= 0) ++c;  // skip zero
    terms.push_back({Rational(c), random_monomial(rng, nvars, shape.max_degree, shape.min_degree)});
  }
  return Polynomial::from_terms(nvars, std::move(terms), order);
}

std::vector<Polynomial> random_generators(Rng& rng, std::size_t nvars, MonomialOrder order,
                                          std::size_t max_gens, const RandomShape& shape) {
  std::uniform_int_distribution<std::size_t> count(1, max_gens);
  std::vector<Polynomial> gens;
  const std::size_t n = count(rng);
  while (gens.size() < n) {
    Polynomial p = random_poly(rng, nvars, order, shape);
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return gens;
}

Polynomial random_root_product(Rng& rng, std::size_t max_factors, int root_range,
                               MonomialOrder order) {
  std::uniform_int_distribution<std::size_t> count(0, max_factors);
  std::uniform_int_distribution<int> root(-root_range, root_range);
  std::uniform_int_distribution<int> scalar(-3, 3);
  const Polynomial x = Polynomial::variable(1, 0, order);
  int c = 0;
  while (c == 0) c = scalar(rng);
  Polynomial f = Polynomial::constant(1, Rational(c), order);
  for (std::size_t k = count(rng); k > 0; --k)
    f = f * (x - Polynomial::constant(1, Rational(root(rng)), order));
  return f;
}

}  // namespace ssc
