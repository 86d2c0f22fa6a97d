#include "ssc/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ssc {

namespace {

std::string fresh_name(const std::vector<std::string>& vars) {
  for (std::size_t k = 0;; ++k) {
    std::string name = "#" + std::to_string(k);
    if (std::find(vars.begin(), vars.end(), name) == vars.end()) return name;
  }
}

std::string edge(std::size_t i, std::size_t j) {
  return std::to_string(i) + "->" + std::to_string(j);
}

bool same_map(const RingMap& a, const RingMap& b) {
  return same_algebra(a.source(), b.source()) && same_algebra(a.target(), b.target()) &&
         a.images() == b.images();
}

// Eliminates the trailing inverse variable of a localization, giving the
// contraction of `ideal` to the base algebra.
Ideal contract_localization(const Localization& loc, const Ideal& ideal) {
  const std::size_t n = loc.algebra->nvars();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{1});
  perm[loc.inverse_index] = 0;
  std::vector<Polynomial> moved;
  for (const auto& g : ideal.basis()) moved.push_back(g.permute(perm));
  return Ideal(loc.inclusion.source(), eliminate_polys(moved, 1));
}

}  // namespace

Localization localize(const Algebra& algebra, const Polynomial& f) {
  const std::size_t n = algebra->nvars();
  if (f.nvars() != n) throw RingMismatch("localizing element does not belong to " + algebra->describe());
  std::vector<std::string> vars = algebra->variables();
  vars.push_back(fresh_name(vars));
  const MonomialOrder order = algebra->order();
  std::vector<Polynomial> rels;
  for (const auto& r : algebra->relations()) rels.push_back(r.embed(n + 1, 0));
  rels.push_back(Polynomial::variable(n + 1, n, order) * f.with_order(order).embed(n + 1, 0) -
                 Polynomial::constant(n + 1, 1, order));
  Algebra loc = AffineAlgebra::make_internal(std::move(vars), rels, order);
  std::vector<Polynomial> images;
  for (std::size_t k = 0; k < n; ++k) images.push_back(loc->var(k));
  RingMap inclusion(algebra, loc, std::move(images));
  return {std::move(loc), std::move(inclusion), n};
}

GlueRecord make_glue(const Algebra& patch_i, std::size_t i, const Polynomial& f_ij,
                     const Algebra& patch_j, std::size_t j, const Polynomial& f_ji,
                     std::vector<Polynomial> var_images, std::optional<Polynomial> inverse_image) {
  const Localization loc_i = localize(patch_i, f_ij);
  const Localization loc_j = localize(patch_j, f_ji);
  if (var_images.size() != patch_i->nvars())
    throw RingMismatch("glue " + edge(i, j) + " needs an image for every variable of patch " +
                       std::to_string(i));
  for (auto& img : var_images) img = loc_j.algebra->reduce(img);
  if (!inverse_image) {
    const Polynomial image_of_f =
        loc_j.algebra->reduce(f_ij.substitute(var_images, loc_j.algebra->nvars(), loc_j.algebra->order()));
    inverse_image = inverse_of(loc_j.algebra, image_of_f);
    if (!inverse_image)
      throw IllDefinedMap("glue " + edge(i, j) + ": the image of " + patch_i->format(f_ij) +
                          " is not invertible on the overlap");
  }
  var_images.push_back(*inverse_image);
  return {i, j, f_ij.with_order(patch_i->order()), f_ji.with_order(patch_j->order()),
          RingMap(loc_i.algebra, loc_j.algebra, std::move(var_images))};
}

// ------------------------------------------------------------ GluedScheme

Scheme GluedScheme::make(std::vector<Algebra> patches, std::vector<GlueRecord> glue,
                         bool complete_mirrors) {
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& g : glue) {
    if (g.i >= patches.size() || g.j >= patches.size())
      throw Error("glue " + edge(g.i, g.j) + " refers to a patch out of range");
    if (g.i == g.j) throw Error("glue " + edge(g.i, g.j) + " joins a patch to itself");
    if (!seen.emplace(g.i, g.j).second) throw Error("duplicate glue record " + edge(g.i, g.j));
  }
  if (complete_mirrors) {
    std::vector<GlueRecord> mirrors;
    for (const auto& g : glue) {
      if (seen.count({g.j, g.i})) continue;
      std::optional<std::vector<Polynomial>> pre;
      try {
        pre = map_preimages(g.theta);
      } catch (const IllDefinedMap&) {
        continue;  // reported by validate_scheme
      }
      if (!pre) continue;
      mirrors.push_back({g.j, g.i, g.f_ji, g.f_ij,
                         RingMap(g.theta.target(), g.theta.source(), std::move(*pre))});
    }
    glue.insert(glue.end(), std::make_move_iterator(mirrors.begin()),
                std::make_move_iterator(mirrors.end()));
  }
  std::sort(glue.begin(), glue.end(), [](const GlueRecord& a, const GlueRecord& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });
  return Scheme(new GluedScheme(std::move(patches), std::move(glue)));
}

Scheme GluedScheme::affine(Algebra algebra) { return make({std::move(algebra)}, {}); }

const GlueRecord* GluedScheme::find_glue(std::size_t i, std::size_t j) const {
  for (const auto& g : glue_)
    if (g.i == i && g.j == j) return &g;
  return nullptr;
}

const GlueRecord& GluedScheme::glue_between(std::size_t i, std::size_t j) const {
  if (const GlueRecord* g = find_glue(i, j)) return *g;
  throw MissingGlue("no glue record " + edge(i, j));
}

bool operator==(const GluedScheme& a, const GluedScheme& b) {
  if (a.patches_.size() != b.patches_.size() || a.glue_.size() != b.glue_.size()) return false;
  for (std::size_t k = 0; k < a.patches_.size(); ++k)
    if (!same_algebra(a.patches_[k], b.patches_[k])) return false;
  for (std::size_t k = 0; k < a.glue_.size(); ++k) {
    const GlueRecord &x = a.glue_[k], &y = b.glue_[k];
    if (x.i != y.i || x.j != y.j || !(x.f_ij == y.f_ij) || !(x.f_ji == y.f_ji) ||
        !same_map(x.theta, y.theta))
      return false;
  }
  return true;
}

bool same_scheme(const Scheme& a, const Scheme& b) { return a == b || *a == *b; }

Ideal transport(const GluedScheme& scheme, std::size_t i, std::size_t j, const Ideal& ideal) {
  const GlueRecord& g = scheme.glue_between(i, j);
  require_same_algebra(ideal.algebra(), scheme.patch(i), "transport");
  const Localization loc_i = localize(scheme.patch(i), g.f_ij);
  const Localization loc_j = localize(scheme.patch(j), g.f_ji);
  const Ideal local = extend(loc_i.inclusion, ideal);
  const Ideal moved = extend(g.theta, local);
  return contract_localization(loc_j, moved);
}

// -------------------------------------------------------------- validation

namespace {

bool is_identity_on(const RingMap& map) {
  const Algebra& a = map.source();
  for (std::size_t k = 0; k < a->nvars(); ++k)
    if (!(map.images()[k] == a->reduce(a->var(k)))) return false;
  return true;
}

void check_cocycle(const GluedScheme& x, std::size_t i, std::size_t j, std::size_t k,
                   Report& report) {
  const GlueRecord& ij = x.glue_between(i, j);
  const GlueRecord& jk = x.glue_between(j, k);
  const GlueRecord& ik = x.glue_between(i, k);
  const std::string subject = "cocycle " + std::to_string(i) + "," + std::to_string(j) + "," +
                              std::to_string(k);
  // triple overlap in patch k coordinates: (A_k)_{f_kj, f_ki}
  const Localization kj = localize(x.patch(k), jk.f_ji);
  const Localization triple = localize(kj.algebra, kj.inclusion(ik.f_ji));
  const Algebra& t = triple.algebra;
  const std::size_t nk = x.patch(k)->nvars();

  std::vector<Polynomial> via_kj;  // (A_k)_{f_kj} -> T
  for (std::size_t v = 0; v <= nk; ++v) via_kj.push_back(t->var(v));
  const RingMap from_kj(kj.algebra, t, via_kj);
  std::vector<Polynomial> via_ki;  // (A_k)_{f_ki} -> T
  for (std::size_t v = 0; v < nk; ++v) via_ki.push_back(t->var(v));
  via_ki.push_back(t->var(nk + 1));
  const RingMap from_ki(ik.theta.target(), t, via_ki);

  // (A_j)_{f_ji} -> T through theta_jk, inverting the image of f_ji
  const Algebra& loc_ji = ij.theta.target();
  const std::size_t nj = x.patch(j)->nvars();
  std::vector<Polynomial> images;
  for (std::size_t v = 0; v < nj; ++v) images.push_back(from_kj(jk.theta.images()[v]));
  const Polynomial f_image = t->reduce(ij.f_ji.substitute(images, t->nvars(), t->order()));
  const auto inv = inverse_of(t, f_image);
  if (!inv) {
    report.add(Status::Fail, subject, "the image of f_" + std::to_string(j) + std::to_string(i) +
                                          " is not a unit on the triple overlap");
    return;
  }
  images.push_back(*inv);
  const RingMap from_ji(loc_ji, t, images);

  const std::size_t ni = x.patch(i)->nvars();
  for (std::size_t v = 0; v < ni; ++v) {
    const Polynomial lhs = from_ji(ij.theta.images()[v]);
    const Polynomial rhs = from_ki(ik.theta.images()[v]);
    if (!(lhs == rhs)) {
      report.add(Status::Fail, subject,
                 "transition maps disagree on " + x.patch(i)->variables()[v]);
      return;
    }
  }
  report.add(Status::Pass, subject);
}

}  // namespace

Report validate_scheme(const GluedScheme& x, bool cocycle) {
  Report report;
  for (const auto& g : x.glue()) {
    const std::string subject = "glue " + edge(g.i, g.j);
    const Localization loc_i = localize(x.patch(g.i), g.f_ij);
    const Localization loc_j = localize(x.patch(g.j), g.f_ji);
    if (!same_algebra(g.theta.source(), loc_i.algebra) ||
        !same_algebra(g.theta.target(), loc_j.algebra)) {
      report.add(Status::Fail, subject, "theta is not a map between the localized patches");
      continue;
    }
    const bool well_defined = map_validate(g.theta);
    report.check(well_defined, subject + " well-defined", "theta does not respect the relations");
    const GlueRecord* mirror = x.find_glue(g.j, g.i);
    if (mirror == nullptr) {
      report.add(Status::Fail, subject + " mirror", "no record " + edge(g.j, g.i));
      continue;
    }
    const bool mirror_matches = mirror->f_ij == g.f_ji && mirror->f_ji == g.f_ij &&
                                same_algebra(mirror->theta.source(), loc_j.algebra);
    report.check(mirror_matches, subject + " mirror", "mirror record has different localizing elements");
    if (!mirror_matches || !well_defined || !map_validate(mirror->theta)) continue;
    report.check(is_identity_on(map_compose(mirror->theta, g.theta)), subject + " inverse",
                 "theta followed by its mirror is not the identity");
  }
  if (cocycle) {
    for (const auto& ij : x.glue())
      for (std::size_t k = 0; k < x.npatches(); ++k) {
        if (k == ij.i || k == ij.j) continue;
        if (x.find_glue(ij.j, k) && x.find_glue(ij.i, k)) check_cocycle(x, ij.i, ij.j, k, report);
      }
  }
  report.add(report.ok() ? Status::Pass : Status::Fail,
             "scheme with " + std::to_string(x.npatches()) + " patches",
             cocycle ? "pairwise- and cocycle-checked" : "pairwise-checked");
  return report;
}

// --------------------------------------------------------- SchemeMorphism

SchemeMorphism::SchemeMorphism(Scheme source, Scheme target, std::vector<PatchMap> patches)
    : source_(std::move(source)), target_(std::move(target)), patches_(std::move(patches)) {
  if (patches_.size() != source_->npatches())
    throw InvalidMorphism("morphism needs one patch assignment per source patch");
  for (std::size_t i = 0; i < patches_.size(); ++i) {
    const PatchMap& p = patches_[i];
    if (p.target_patch >= target_->npatches())
      throw InvalidMorphism("patch " + std::to_string(i) + " is sent to a target patch out of range");
    if (!same_algebra(p.map.source(), target_->patch(p.target_patch)) ||
        !same_algebra(p.map.target(), source_->patch(i)))
      throw InvalidMorphism("patch " + std::to_string(i) + ": ring map has the wrong algebras");
  }
}

SchemeMorphism SchemeMorphism::identity(const Scheme& scheme) {
  std::vector<PatchMap> patches;
  for (std::size_t i = 0; i < scheme->npatches(); ++i)
    patches.push_back({i, RingMap::identity(scheme->patch(i))});
  return SchemeMorphism(scheme, scheme, std::move(patches));
}

SchemeMorphism compose(const SchemeMorphism& g, const SchemeMorphism& f) {
  if (!same_scheme(f.target(), g.source()))
    throw RingMismatch("compose: target of the first morphism is not the source of the second");
  std::vector<PatchMap> patches;
  for (const auto& pf : f.patches()) {
    const PatchMap& pg = g.patches()[pf.target_patch];
    patches.push_back({pg.target_patch, map_compose(pf.map, pg.map)});
  }
  return SchemeMorphism(f.source(), g.target(), std::move(patches));
}

Report validate_morphism(const SchemeMorphism& f) {
  Report report;
  const GluedScheme& x = *f.source();
  const GluedScheme& y = *f.target();
  for (std::size_t i = 0; i < f.patches().size(); ++i)
    report.check(map_validate(f.patches()[i].map), "patch " + std::to_string(i) + " well-defined",
                 "ring map does not respect the relations");
  if (!report.ok()) return report;

  for (const auto& g : x.glue()) {
    const std::string subject = "overlap " + edge(g.i, g.j);
    const PatchMap& pi = f.patches()[g.i];
    const PatchMap& pj = f.patches()[g.j];
    const Localization loc_i = localize(x.patch(g.i), g.f_ij);
    const Localization loc_j = localize(x.patch(g.j), g.f_ji);
    // both routes from the target into (A_j)_{f_ji}
    const RingMap route_i = map_compose(g.theta, map_compose(loc_i.inclusion, pi.map));
    const RingMap route_j = map_compose(loc_j.inclusion, pj.map);
    if (pi.target_patch == pj.target_patch) {
      report.check(route_i.images() == route_j.images(), subject,
                   "the two patch maps disagree on the overlap");
      continue;
    }
    const GlueRecord* tg = y.find_glue(pj.target_patch, pi.target_patch);
    if (tg == nullptr) {
      report.add(Status::Fail, subject,
                 "target patches " + edge(pj.target_patch, pi.target_patch) + " are not glued");
      continue;
    }
    // (B_a)_{g_ab} -> (A_j)_{f_ji}, which needs the image of g_ab to be a unit
    const auto inv = inverse_of(loc_j.algebra, route_i(tg->f_ji));
    if (!inv) {
      report.add(Status::Fail, subject, "overlap does not map into the target overlap");
      continue;
    }
    std::vector<Polynomial> images = route_i.images();
    images.push_back(*inv);
    const RingMap extended(tg->theta.target(), loc_j.algebra, std::move(images));
    bool agree = true;
    for (std::size_t v = 0; v < y.patch(pj.target_patch)->nvars() && agree; ++v)
      agree = route_j.images()[v] == extended(tg->theta.images()[v]);
    report.check(agree, subject, "the two patch maps disagree on the overlap");
  }
  return report;
}

}  // namespace ssc
