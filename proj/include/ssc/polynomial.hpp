#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ssc/errors.hpp"

namespace ssc {

/// Exact rational coefficient. GMP keeps numerator and denominator coprime
/// with a positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Exponent vector of a fixed arity. The total degree is cached.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t nvars() const noexcept { return exps_.size(); }
  std::uint32_t degree() const noexcept { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }
  bool is_one() const noexcept { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// `*this / other`; requires other.divides(*this).
  Monomial quotient(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// Shift into a ring with `new_nvars` variables; variable k becomes k + offset.
  Monomial embed(std::size_t new_nvars, std::size_t offset) const;
  /// Drop the first `k` variables (which must carry exponent 0).
  Monomial drop_first(std::size_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

/// Total monomial order. `Block` is lex on the first `block` variables,
/// refined by grevlex on the remaining ones.
class MonomialOrder {
 public:
  enum class Kind : std::uint8_t { Lex, Grevlex, Block };

  constexpr MonomialOrder() = default;
  static constexpr MonomialOrder lex() { return MonomialOrder(Kind::Lex, 0); }
  static constexpr MonomialOrder grevlex() { return MonomialOrder(Kind::Grevlex, 0); }
  static constexpr MonomialOrder block(std::size_t k) { return MonomialOrder(Kind::Block, k); }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  constexpr MonomialOrder(Kind kind, std::size_t block) : kind_(kind), block_(block) {}

  Kind kind_ = Kind::Grevlex;
  std::size_t block_ = 0;
};

struct Term {
  Rational coeff;
  Monomial mono;
};

/// Sparse multivariate polynomial over the rationals. Terms are kept strictly
/// descending under the polynomial's order, with no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, MonomialOrder order = MonomialOrder::grevlex())
      : nvars_(nvars), order_(order) {}

  static Polynomial constant(std::size_t nvars, const Rational& c,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial variable(std::size_t nvars, std::size_t index,
                             MonomialOrder order = MonomialOrder::grevlex());
  static Polynomial monomial(const Rational& c, Monomial m,
                             MonomialOrder order = MonomialOrder::grevlex());
  /// Combines like terms, drops zeros and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms,
                               MonomialOrder order = MonomialOrder::grevlex());

  std::size_t nvars() const noexcept { return nvars_; }
  MonomialOrder order() const noexcept { return order_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  std::uint32_t total_degree() const;

  /// Leading term under the polynomial's own order.
  const Term& leading() const;
  const Monomial& leading_monomial() const { return leading().mono; }
  const Rational& leading_coeff() const { return leading().coeff; }

  Polynomial with_order(MonomialOrder order) const;
  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  Polynomial pow(unsigned n) const;

  Polynomial embed(std::size_t new_nvars, std::size_t offset) const;
  /// Reorders variables: variable k moves to position perm[k].
  Polynomial permute(std::span<const std::size_t> perm) const;
  bool free_of_first(std::size_t k) const;
  Polynomial drop_first(std::size_t k) const;
  bool uses_variable(std::size_t index) const;

  /// Ring homomorphism: substitute images[k] for variable k. The images live
  /// in a ring with `target_nvars` variables.
  Polynomial substitute(std::span<const Polynomial> images, std::size_t target_nvars,
                        MonomialOrder target_order) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
  friend Polynomial operator*(const Polynomial& f, const Polynomial& g);

  /// Removes the leading term in place.
  void pop_leading();

  /// `*this - c * m * g`, the elementary reduction step. `c` must be
  /// canonical; the factories and `scaled` canonicalize their input.
  Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const;

  /// Equal when the term sets coincide; the storage order is irrelevant.
  friend bool operator==(const Polynomial& f, const Polynomial& g);

 private:
  void sort_terms();

  std::size_t nvars_ = 0;
  MonomialOrder order_ = MonomialOrder::grevlex();
  std::vector<Term> terms_;
};

/// Throws RingMismatch when the arities differ.
void require_same_ring(const Polynomial& f, const Polynomial& g);

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Term leading_term(const Polynomial& f, MonomialOrder order);

/// Deterministic text: terms descending under `order`, `a/b` coefficients,
/// `*` between factors, `^` for powers.
std::string format_poly(const Polynomial& f, std::span<const std::string> names,
                        MonomialOrder order);
std::string format_poly(const Polynomial& f, std::span<const std::string> names);

}  // namespace ssc
