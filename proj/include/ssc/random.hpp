#pragma once

#include <random>
#include <vector>

#include "ssc/polynomial.hpp"

namespace ssc {

/// Shape of randomly generated polynomials: at most `max_terms` terms of
/// total degree at most `max_degree`, integer coefficients in
/// [-coeff_range, coeff_range] \ {0}. Term degrees are drawn from
/// [min_degree, max_degree].
struct RandomShape {
  std::size_t max_terms = 3;
  unsigned max_degree = 3;
  int coeff_range = 3;
  unsigned min_degree = 0;
};

using Rng = std::mt19937_64;

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_degree,
                         unsigned min_degree = 0);
Polynomial random_poly(Rng& rng, std::size_t nvars, MonomialOrder order, const RandomShape& shape);
/// Between 1 and `max_gens` nonzero polynomials.
std::vector<Polynomial> random_generators(Rng& rng, std::size_t nvars, MonomialOrder order,
                                          std::size_t max_gens, const RandomShape& shape);

/// Product of 0 to `max_factors` factors (x - r) in one variable, integer roots
/// in [-root_range, root_range], times a random nonzero integer scalar.
Polynomial random_root_product(Rng& rng, std::size_t max_factors, int root_range,
                               MonomialOrder order);

}  // namespace ssc
