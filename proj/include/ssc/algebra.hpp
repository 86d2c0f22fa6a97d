#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ssc/groebner.hpp"
#include "ssc/parse.hpp"
#include "ssc/polynomial.hpp"

namespace ssc {

class AffineAlgebra;
using Algebra = std::shared_ptr<const AffineAlgebra>;

/// A finitely presented algebra QQ[vars] / (relations). The relations are
/// stored as their reduced Gröbner basis under the canonical order, so two
/// presentations of the same quotient compare equal.
class AffineAlgebra {
 public:
  /// Variable names must be distinct identifiers without the '#' prefix.
  static Algebra make(std::vector<std::string> vars, std::span<const Polynomial> relations = {},
                      MonomialOrder order = MonomialOrder::grevlex());
  /// As make(), but accepts '#'-prefixed auxiliary names.
  static Algebra make_internal(std::vector<std::string> vars,
                               std::span<const Polynomial> relations = {},
                               MonomialOrder order = MonomialOrder::grevlex());

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return vars_.size(); }
  const std::vector<Polynomial>& relations() const noexcept { return relations_.generators; }
  const GrobnerBasis& relation_basis() const noexcept { return relations_; }
  MonomialOrder order() const noexcept { return order_; }
  /// Relations contain 1.
  bool is_zero_ring() const { return relations_.is_unit(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  Polynomial zero() const { return Polynomial(nvars(), order_); }
  Polynomial one() const { return constant(1); }
  Polynomial constant(const Rational& c) const { return Polynomial::constant(nvars(), c, order_); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(nvars(), i, order_); }

  /// Normal form modulo the relations, in the canonical order.
  Polynomial reduce(const Polynomial& f) const;
  Polynomial parse(std::string_view text, const ParseHooks& hooks = {}) const;
  std::string format(const Polynomial& f) const;

  /// Text like `QQ[x, y] / (x^2 - y)`.
  std::string describe() const;

  /// Content equality: same names, order and relation basis.
  friend bool operator==(const AffineAlgebra& a, const AffineAlgebra& b);

 private:
  AffineAlgebra(std::vector<std::string> vars, GrobnerBasis relations, MonomialOrder order)
      : vars_(std::move(vars)), relations_(std::move(relations)), order_(order) {}
  static Algebra build(std::vector<std::string> vars, std::span<const Polynomial> relations,
                       MonomialOrder order, bool allow_reserved);

  std::vector<std::string> vars_;
  GrobnerBasis relations_;
  MonomialOrder order_;
};

bool same_algebra(const Algebra& a, const Algebra& b);
/// Throws RingMismatch unless the algebras have equal content.
void require_same_algebra(const Algebra& a, const Algebra& b, std::string_view what);

/// Ideal of an affine algebra, held in canonical form: the reduced Gröbner
/// basis of generators + relations in the ambient polynomial ring.
class Ideal {
 public:
  Ideal(Algebra algebra, std::span<const Polynomial> gens);
  Ideal(Algebra algebra, std::initializer_list<Polynomial> gens)
      : Ideal(std::move(algebra), std::span<const Polynomial>(gens.begin(), gens.size())) {}

  static Ideal zero(Algebra algebra);
  static Ideal unit(Algebra algebra);

  const Algebra& algebra() const noexcept { return algebra_; }
  const std::vector<Polynomial>& basis() const noexcept { return basis_.generators; }
  const GrobnerBasis& groebner() const noexcept { return basis_; }

  bool contains(const Polynomial& f) const;
  bool is_unit() const { return basis_.is_unit(); }
  /// Equal to the zero ideal of the algebra (i.e. to its relations).
  bool is_zero() const;

  /// `(g1, g2, ...)` with generators in canonical order; `(0)` when empty.
  std::string to_string() const;

  friend bool operator==(const Ideal& a, const Ideal& b);

 private:
  Ideal(Algebra algebra, GrobnerBasis basis) : algebra_(std::move(algebra)), basis_(std::move(basis)) {}

  Algebra algebra_;
  GrobnerBasis basis_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Intersection by eliminating t from t*I + (1 - t)*J.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// (I : f^inf), computed as the contraction of I + (1 - s*f).
Ideal saturate(const Ideal& ideal, const Polynomial& f);
bool ideal_eq(const Ideal& a, const Ideal& b);
bool is_unit(const Ideal& ideal);

/// Reduced basis of (gens) ∩ QQ[x_k, ..., x_{n-1}]: a Gröbner basis under
/// block(k), filtered to the elements free of the first k variables, which
/// are then dropped. The returned polynomials use grevlex.
std::vector<Polynomial> eliminate_polys(std::span<const Polynomial> gens, std::size_t k);

/// Eliminates the first k variables of the ideal's algebra. The result lives
/// in the free algebra on the remaining variables.
Ideal eliminate(const Ideal& ideal, std::size_t k);

/// Homomorphism source -> target given by the images of the source variables.
class RingMap {
 public:
  RingMap(Algebra source, Algebra target, std::vector<Polynomial> images);
  static RingMap identity(const Algebra& algebra);

  const Algebra& source() const noexcept { return source_; }
  const Algebra& target() const noexcept { return target_; }
  const std::vector<Polynomial>& images() const noexcept { return images_; }

  Polynomial operator()(const Polynomial& f) const;

 private:
  Algebra source_;
  Algebra target_;
  std::vector<Polynomial> images_;
};

/// Every source relation maps to zero in the target.
bool map_validate(const RingMap& phi);
Polynomial map_apply(const RingMap& phi, const Polynomial& f);
/// psi ∘ phi.
RingMap map_compose(const RingMap& psi, const RingMap& phi);
/// Kernel via graph elimination. Throws IllDefinedMap.
Ideal map_kernel(const RingMap& phi);
/// For each target variable, a source element mapping onto it, if any exists.
std::optional<std::vector<Polynomial>> map_preimages(const RingMap& phi);
bool map_surjective(const RingMap& phi);
/// Ideal of the target generated by the images of the ideal's generators.
Ideal extend(const RingMap& phi, const Ideal& ideal);
/// Preimage of a target ideal.
Ideal contract(const RingMap& phi, const Ideal& ideal);

/// Inverse of f in the algebra, if f is a unit.
std::optional<Polynomial> inverse_of(const Algebra& algebra, const Polynomial& f);

}  // namespace ssc
