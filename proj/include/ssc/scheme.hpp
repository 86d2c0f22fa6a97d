#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "ssc/algebra.hpp"
#include "ssc/report.hpp"

namespace ssc {

/// A_f presented as A[s] / (relations, s*f - 1). The inverse variable is
/// appended last and named `#k` for the first unused k.
struct Localization {
  Algebra algebra;
  RingMap inclusion;
  std::size_t inverse_index;
};

Localization localize(const Algebra& algebra, const Polynomial& f);

/// Transition data between patches i and j: theta maps (A_i)_{f_ij}
/// isomorphically onto (A_j)_{f_ji}.
struct GlueRecord {
  std::size_t i;
  std::size_t j;
  Polynomial f_ij;
  Polynomial f_ji;
  RingMap theta;
};

/// Builds a glue record from the images of patch i's variables in
/// (A_j)_{f_ji}. When `inverse_image` is empty the image of 1/f_ij is solved
/// for; IllDefinedMap is thrown if theta(f_ij) is not a unit there.
GlueRecord make_glue(const Algebra& patch_i, std::size_t i, const Polynomial& f_ij,
                     const Algebra& patch_j, std::size_t j, const Polynomial& f_ji,
                     std::vector<Polynomial> var_images,
                     std::optional<Polynomial> inverse_image = std::nullopt);

class GluedScheme;
using Scheme = std::shared_ptr<const GluedScheme>;

/// Affine patches glued along principal opens.
class GluedScheme {
 public:
  /// When `complete_mirrors` is set, a record (i, j) without a mirror gets
  /// one whose theta is the inverse of the given theta, if that inverse
  /// exists. At most one record per ordered pair is accepted.
  static Scheme make(std::vector<Algebra> patches, std::vector<GlueRecord> glue,
                     bool complete_mirrors = true);
  static Scheme affine(Algebra algebra);

  std::size_t npatches() const noexcept { return patches_.size(); }
  const std::vector<Algebra>& patches() const noexcept { return patches_; }
  const Algebra& patch(std::size_t i) const { return patches_.at(i); }
  const std::vector<GlueRecord>& glue() const noexcept { return glue_; }
  const GlueRecord* find_glue(std::size_t i, std::size_t j) const;
  /// Throws MissingGlue.
  const GlueRecord& glue_between(std::size_t i, std::size_t j) const;

  friend bool operator==(const GluedScheme& a, const GluedScheme& b);

 private:
  GluedScheme(std::vector<Algebra> patches, std::vector<GlueRecord> glue)
      : patches_(std::move(patches)), glue_(std::move(glue)) {}

  std::vector<Algebra> patches_;
  std::vector<GlueRecord> glue_;
};

bool same_scheme(const Scheme& a, const Scheme& b);

/// Carries an ideal of patch i across the overlap to patch j. The result is
/// f_ji-saturated.
Ideal transport(const GluedScheme& scheme, std::size_t i, std::size_t j, const Ideal& ideal);

/// Mirror records, theta well-definedness and the two-sided inverse property
/// for every record; with `cocycle` also the triple-overlap condition.
Report validate_scheme(const GluedScheme& scheme, bool cocycle = false);

struct PatchMap {
  std::size_t target_patch;
  RingMap map;  // target patch algebra -> source patch algebra
};

/// Morphism X -> Y sending each patch of X into a single patch of Y.
class SchemeMorphism {
 public:
  SchemeMorphism(Scheme source, Scheme target, std::vector<PatchMap> patches);
  static SchemeMorphism identity(const Scheme& scheme);

  const Scheme& source() const noexcept { return source_; }
  const Scheme& target() const noexcept { return target_; }
  const std::vector<PatchMap>& patches() const noexcept { return patches_; }

 private:
  Scheme source_;
  Scheme target_;
  std::vector<PatchMap> patches_;
};

/// g ∘ f.
SchemeMorphism compose(const SchemeMorphism& g, const SchemeMorphism& f);

/// Ring maps well-defined and agreeing on every glued overlap of the source.
Report validate_morphism(const SchemeMorphism& morphism);

}  // namespace ssc
