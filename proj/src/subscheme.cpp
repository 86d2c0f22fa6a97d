#include "ssc/subscheme.hpp"

namespace ssc {

ClosedSubscheme::ClosedSubscheme(Scheme scheme, std::vector<Ideal> ideals)
    : scheme_(std::move(scheme)), ideals_(std::move(ideals)) {
  if (ideals_.size() != scheme_->npatches())
    throw RingMismatch("subscheme needs " + std::to_string(scheme_->npatches()) +
                       " patch ideals, got " + std::to_string(ideals_.size()));
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    require_same_algebra(ideals_[i].algebra(), scheme_->patch(i),
                         "subscheme patch " + std::to_string(i));
}

std::string ClosedSubscheme::to_string() const {
  std::string out = "[ ";
  for (std::size_t i = 0; i < ideals_.size(); ++i) out += (i ? " ; " : "") + ideals_[i].to_string();
  return out + " ]";
}

Report validate(const ClosedSubscheme& z) {
  Report report;
  const GluedScheme& x = *z.scheme();
  for (const auto& g : x.glue()) {
    const std::string subject =
        "compatibility " + std::to_string(g.i) + "->" + std::to_string(g.j);
    const Ideal moved = transport(x, g.i, g.j, z.ideal(g.i));
    const Ideal local = saturate(z.ideal(g.j), g.f_ji);
    report.check(moved == local, subject,
                 "transport gives " + moved.to_string() + " but the saturation on patch " +
                     std::to_string(g.j) + " is " + local.to_string());
  }
  return report;
}

ClosedSubscheme canon(const ClosedSubscheme& z) {
  // patch ideals are canonical from construction; rebuild from the bases
  std::vector<Ideal> ideals;
  for (const auto& i : z.ideals()) ideals.emplace_back(i.algebra(), i.basis());
  return ClosedSubscheme(z.scheme(), std::move(ideals));
}

namespace {

void require_same_scheme(const ClosedSubscheme& z, const ClosedSubscheme& w, const char* what) {
  if (!same_scheme(z.scheme(), w.scheme()))
    throw RingMismatch(std::string(what) + ": subschemes of different schemes");
}

template <typename Op>
ClosedSubscheme patchwise(const ClosedSubscheme& z, const ClosedSubscheme& w, Op op) {
  std::vector<Ideal> ideals;
  ideals.reserve(z.ideals().size());
  for (std::size_t i = 0; i < z.ideals().size(); ++i) ideals.push_back(op(z.ideal(i), w.ideal(i)));
  return ClosedSubscheme(z.scheme(), std::move(ideals));
}

}  // namespace

bool eq(const ClosedSubscheme& z, const ClosedSubscheme& w) {
  require_same_scheme(z, w, "eq");
  for (std::size_t i = 0; i < z.ideals().size(); ++i)
    if (!(z.ideal(i).basis() == w.ideal(i).basis())) return false;
  return true;
}

ClosedSubscheme whole(const Scheme& x) {
  std::vector<Ideal> ideals;
  for (const auto& p : x->patches()) ideals.push_back(Ideal::zero(p));
  return ClosedSubscheme(x, std::move(ideals));
}

ClosedSubscheme empty(const Scheme& x) {
  std::vector<Ideal> ideals;
  for (const auto& p : x->patches()) ideals.push_back(Ideal::unit(p));
  return ClosedSubscheme(x, std::move(ideals));
}

ClosedSubscheme mul(const ClosedSubscheme& z, const ClosedSubscheme& w) {
  require_same_scheme(z, w, "mul");
  return patchwise(z, w, ideal_sum);
}

ClosedSubscheme add(const ClosedSubscheme& z, const ClosedSubscheme& w) {
  require_same_scheme(z, w, "add");
  return patchwise(z, w, ideal_intersect);
}

ClosedSubscheme pullback(const SchemeMorphism& f, const ClosedSubscheme& z) {
  if (!same_scheme(f.target(), z.scheme()))
    throw RingMismatch("pullback: subscheme does not live on the morphism's target");
  const Report report = validate_morphism(f);
  if (!report.ok()) throw InvalidMorphism("pullback along an invalid morphism:\n" + report.to_string());
  std::vector<Ideal> ideals;
  for (const auto& p : f.patches()) ideals.push_back(extend(p.map, z.ideal(p.target_patch)));
  return ClosedSubscheme(f.source(), std::move(ideals));
}

ClosedSubscheme from_surjection(const RingMap& phi) {
  if (!map_validate(phi)) throw IllDefinedMap("ring map does not respect the source relations");
  if (!map_surjective(phi))
    throw NotClosedImmersion("ring map is not surjective, so Spec of it is not a closed immersion");
  return ClosedSubscheme(GluedScheme::affine(phi.source()), {map_kernel(phi)});
}

Report check_additive_law(const SchemeMorphism& f, const ClosedSubscheme& z,
                          const ClosedSubscheme& w) {
  Report report;
  const ClosedSubscheme lhs = pullback(f, add(z, w));
  const ClosedSubscheme rhs = add(pullback(f, z), pullback(f, w));
  const std::string subject = "additive homomorphism pullback(add(Z,W)) = add(pullback Z, pullback W)";
  if (eq(lhs, rhs))
    report.add(Status::Pass, subject);
  else
    report.add(Status::Violated, subject,
               "Z = " + z.to_string() + ", W = " + w.to_string() + ": pullback(add) = " +
                   lhs.to_string() + " but add(pullbacks) = " + rhs.to_string());
  return report;
}

}  // namespace ssc
