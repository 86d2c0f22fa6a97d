#pragma once

#include <span>
#include <vector>

#include "ssc/polynomial.hpp"

namespace ssc {

/// A generating set that is a Gröbner basis under `order`. When `reduced` is
/// set the generators are monic, inter-reduced and sorted by descending
/// leading monomial, which makes the basis unique for its ideal.
struct GrobnerBasis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;

  bool is_unit() const { return generators.size() == 1 && generators.front().is_constant() &&
                                !generators.front().is_zero(); }
  friend bool operator==(const GrobnerBasis&, const GrobnerBasis&) = default;
};

/// Multivariate division remainder. Divisors are tried in sequence order
/// against the largest not-yet-irreducible term.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       MonomialOrder order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

/// Buchberger's algorithm with sugar pair selection, the coprime and chain
/// criteria, and leading-term-only reduction of S-polynomials. The result is
/// a Groebner basis but not reduced.
GrobnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order);

GrobnerBasis reduced_basis(const GrobnerBasis& basis);

/// reduced_basis(buchberger(gens, order)).
GrobnerBasis reduced_groebner(std::span<const Polynomial> gens, MonomialOrder order);

bool contains(const GrobnerBasis& basis, const Polynomial& f);

}  // namespace ssc
