#pragma once

#include <string>
#include <vector>

#include "ssc/algebra.hpp"
#include "ssc/report.hpp"
#include "ssc/scheme.hpp"

namespace ssc {

/// A closed subscheme of a glued scheme, stored as its family of patch
/// ideals. Each ideal is held in canonical form, so two subschemes are equal
/// exactly when the families agree term for term.
class ClosedSubscheme {
 public:
  ClosedSubscheme(Scheme scheme, std::vector<Ideal> ideals);

  const Scheme& scheme() const noexcept { return scheme_; }
  const std::vector<Ideal>& ideals() const noexcept { return ideals_; }
  const Ideal& ideal(std::size_t patch) const { return ideals_.at(patch); }

  /// `[ (g, ...) ; (h, ...) ]` in patch order.
  std::string to_string() const;

 private:
  Scheme scheme_;
  std::vector<Ideal> ideals_;
};

/// Overlap compatibility: transport(i -> j, I_i) = saturate(I_j, f_ji) for
/// every glue record.
Report validate(const ClosedSubscheme& z);
ClosedSubscheme canon(const ClosedSubscheme& z);
/// Throws RingMismatch when the schemes differ.
bool eq(const ClosedSubscheme& z, const ClosedSubscheme& w);

/// Zero ideal on every patch.
ClosedSubscheme whole(const Scheme& x);
/// Unit ideal on every patch.
ClosedSubscheme empty(const Scheme& x);

/// Scheme-theoretic intersection: patchwise ideal sum.
ClosedSubscheme mul(const ClosedSubscheme& z, const ClosedSubscheme& w);
/// Scheme-theoretic union: patchwise ideal intersection.
ClosedSubscheme add(const ClosedSubscheme& z, const ClosedSubscheme& w);

/// Base change of a closed subscheme of f's target along f: on each source
/// patch the extension of the assigned target patch ideal. Throws
/// InvalidMorphism if f fails validate_morphism.
ClosedSubscheme pullback(const SchemeMorphism& f, const ClosedSubscheme& z);

/// The closed subscheme of Spec(source) cut out by a surjection
/// source -> target. Throws NotClosedImmersion if phi is not surjective.
ClosedSubscheme from_surjection(const RingMap& phi);

/// Compares pullback(f, add(z, w)) with add(pullback(f, z), pullback(f, w)).
/// Pullback does not preserve unions in general, so a mismatch is reported
/// as VIOLATED together with both sides.
Report check_additive_law(const SchemeMorphism& f, const ClosedSubscheme& z,
                          const ClosedSubscheme& w);

}  // namespace ssc
