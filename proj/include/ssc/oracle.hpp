#pragma once

#include <cstdint>
#include <vector>

#include "ssc/polynomial.hpp"
#include "ssc/report.hpp"

namespace ssc::oracle {

/// Closed subscheme of Spec Z cut out by (m). m = 0 is the whole scheme and
/// m = 1 the empty one.
struct IntegerSubscheme {
  std::uint64_t m = 0;
  friend bool operator==(IntegerSubscheme, IntegerSubscheme) = default;
};

IntegerSubscheme int_mul(IntegerSubscheme a, IntegerSubscheme b);
/// Throws std::overflow_error when the lcm does not fit.
IntegerSubscheme int_add(IntegerSubscheme a, IntegerSubscheme b);

/// Primes dividing m, ascending. Requires m >= 1.
std::vector<std::uint64_t> prime_support(std::uint64_t m);

/// Ideal (d) of Z/n; d = n is the zero ideal.
struct CyclicRingSubscheme {
  std::uint64_t n = 1;
  std::uint64_t d = 1;
  friend bool operator==(CyclicRingSubscheme, CyclicRingSubscheme) = default;
};

std::vector<std::uint64_t> divisors(std::uint64_t n);
CyclicRingSubscheme cyc_mul(CyclicRingSubscheme a, CyclicRingSubscheme b);
CyclicRingSubscheme cyc_add(CyclicRingSubscheme a, CyclicRingSubscheme b);
/// Extension along Z/n -> Z/m for m | n.
CyclicRingSubscheme cyc_extend(CyclicRingSubscheme a, std::uint64_t m);

/// Exhaustive law check over the ideal lattice of Z/n.
Report cyc_laws(std::uint64_t n);

/// Laws of int_mul / int_add over all pairs in [0, max_m], associativity over
/// triples in [0, max_triple].
Report int_laws(std::uint64_t max_m, std::uint64_t max_triple);

/// Monic gcd and lcm of univariate polynomials by the Euclidean algorithm on
/// dense coefficient vectors. Both throw ZeroInput on a zero argument and
/// RingMismatch unless the inputs have exactly one variable.
Polynomial uni_gcd_oracle(const Polynomial& f, const Polynomial& g);
Polynomial uni_intersect_oracle(const Polynomial& f, const Polynomial& g);

}  // namespace ssc::oracle
