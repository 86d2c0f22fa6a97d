#include "ssc/algebra.hpp"

#include <set>

namespace ssc {

// ---------------------------------------------------------- AffineAlgebra

Algebra AffineAlgebra::build(std::vector<std::string> vars, std::span<const Polynomial> relations,
                             MonomialOrder order, bool allow_reserved) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    const bool reserved = !v.empty() && v.front() == '#';
    if (reserved && !allow_reserved)
      throw ReservedName("variable name '" + v + "' uses the reserved '#' prefix");
    if (!reserved && !is_user_identifier(v)) throw Error("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw Error("duplicate variable name '" + v + "'");
  }
  for (const auto& r : relations)
    if (r.nvars() != vars.size()) throw RingMismatch("relation does not live in QQ[" +
                                                     std::to_string(vars.size()) + " vars]");
  GrobnerBasis gb = reduced_groebner(relations, order);
  return Algebra(new AffineAlgebra(std::move(vars), std::move(gb), order));
}

Algebra AffineAlgebra::make(std::vector<std::string> vars, std::span<const Polynomial> relations,
                            MonomialOrder order) {
  return build(std::move(vars), relations, order, false);
}

Algebra AffineAlgebra::make_internal(std::vector<std::string> vars,
                                     std::span<const Polynomial> relations, MonomialOrder order) {
  return build(std::move(vars), relations, order, true);
}

std::optional<std::size_t> AffineAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return i;
  return std::nullopt;
}

Polynomial AffineAlgebra::reduce(const Polynomial& f) const {
  if (f.nvars() != nvars()) throw RingMismatch("polynomial does not belong to " + describe());
  if (relations_.generators.empty()) return f.with_order(order_);
  return normal_form(f, relations_.generators, order_);
}

Polynomial AffineAlgebra::parse(std::string_view text, const ParseHooks& hooks) const {
  return parse_poly(text, vars_, order_, hooks);
}

std::string AffineAlgebra::format(const Polynomial& f) const { return format_poly(f, vars_, order_); }

std::string AffineAlgebra::describe() const {
  std::string out = "QQ[";
  for (std::size_t i = 0; i < vars_.size(); ++i) out += (i ? ", " : "") + vars_[i];
  out += "]";
  if (!relations_.generators.empty()) {
    out += " / (";
    for (std::size_t i = 0; i < relations_.generators.size(); ++i)
      out += (i ? ", " : "") + format(relations_.generators[i]);
    out += ")";
  }
  return out;
}

bool operator==(const AffineAlgebra& a, const AffineAlgebra& b) {
  return a.vars_ == b.vars_ && a.order_ == b.order_ &&
         a.relations_.generators == b.relations_.generators;
}

bool same_algebra(const Algebra& a, const Algebra& b) { return a == b || *a == *b; }

void require_same_algebra(const Algebra& a, const Algebra& b, std::string_view what) {
  if (!same_algebra(a, b))
    throw RingMismatch(std::string(what) + ": " + a->describe() + " vs " + b->describe());
}

// ------------------------------------------------------------------ Ideal

Ideal::Ideal(Algebra algebra, std::span<const Polynomial> gens) : algebra_(std::move(algebra)) {
  std::vector<Polynomial> all(algebra_->relations().begin(), algebra_->relations().end());
  for (const auto& g : gens) {
    if (g.nvars() != algebra_->nvars())
      throw RingMismatch("generator does not belong to " + algebra_->describe());
    all.push_back(g.with_order(algebra_->order()));
  }
  basis_ = reduced_groebner(all, algebra_->order());
}

Ideal Ideal::zero(Algebra algebra) {
  GrobnerBasis gb = algebra->relation_basis();
  return Ideal(std::move(algebra), std::move(gb));
}

Ideal Ideal::unit(Algebra algebra) {
  GrobnerBasis gb{{algebra->one()}, algebra->order(), true};
  return Ideal(std::move(algebra), std::move(gb));
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.nvars() != algebra_->nvars())
    throw RingMismatch("polynomial does not belong to " + algebra_->describe());
  return ssc::contains(basis_, f);
}

bool Ideal::is_zero() const { return basis_.generators == algebra_->relations(); }

std::string Ideal::to_string() const {
  if (basis_.generators.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < basis_.generators.size(); ++i)
    out += (i ? ", " : "") + algebra_->format(basis_.generators[i]);
  return out + ")";
}

bool operator==(const Ideal& a, const Ideal& b) { return ideal_eq(a, b); }

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_algebra(a.algebra(), b.algebra(), "ideal_sum");
  std::vector<Polynomial> gens = a.basis();
  gens.insert(gens.end(), b.basis().begin(), b.basis().end());
  return Ideal(a.algebra(), gens);
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  require_same_algebra(a.algebra(), b.algebra(), "ideal_intersect");
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const std::size_t n = a.algebra()->nvars();
  const MonomialOrder order = MonomialOrder::block(1);
  const Polynomial t = Polynomial::variable(n + 1, 0, order);
  const Polynomial one_minus_t = Polynomial::constant(n + 1, 1, order) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.basis()) gens.push_back(t * g.with_order(order).embed(n + 1, 1));
  for (const auto& h : b.basis()) gens.push_back(one_minus_t * h.with_order(order).embed(n + 1, 1));
  return Ideal(a.algebra(), eliminate_polys(gens, 1));
}

Ideal saturate(const Ideal& ideal, const Polynomial& f) {
  const Algebra& alg = ideal.algebra();
  if (f.nvars() != alg->nvars()) throw RingMismatch("saturating element does not belong to " +
                                                    alg->describe());
  if (ideal.is_unit()) return ideal;
  const std::size_t n = alg->nvars();
  const MonomialOrder order = MonomialOrder::block(1);
  const Polynomial s = Polynomial::variable(n + 1, 0, order);
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.basis()) gens.push_back(g.with_order(order).embed(n + 1, 1));
  gens.push_back(Polynomial::constant(n + 1, 1, order) - s * f.with_order(order).embed(n + 1, 1));
  return Ideal(alg, eliminate_polys(gens, 1));
}

bool ideal_eq(const Ideal& a, const Ideal& b) {
  require_same_algebra(a.algebra(), b.algebra(), "ideal_eq");
  return a.basis() == b.basis();
}

bool is_unit(const Ideal& ideal) { return ideal.is_unit(); }

std::vector<Polynomial> eliminate_polys(std::span<const Polynomial> gens, std::size_t k) {
  const MonomialOrder order = MonomialOrder::block(k);
  std::vector<Polynomial> in;
  in.reserve(gens.size());
  for (const auto& g : gens) in.push_back(g.with_order(order));
  GrobnerBasis gb = reduced_groebner(in, order);
  std::vector<Polynomial> out;
  for (const auto& g : gb.generators)
    if (g.free_of_first(k)) out.push_back(g.drop_first(k));
  return out;
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const auto& vars = ideal.algebra()->variables();
  if (k > vars.size()) throw RingMismatch("cannot eliminate more variables than the ring has");
  std::vector<std::string> rest(vars.begin() + static_cast<std::ptrdiff_t>(k), vars.end());
  MonomialOrder order = ideal.algebra()->order();
  if (order.kind() == MonomialOrder::Kind::Block) order = MonomialOrder::grevlex();
  Algebra sub = AffineAlgebra::make_internal(std::move(rest), {}, order);
  return Ideal(sub, eliminate_polys(ideal.basis(), k));
}

// ---------------------------------------------------------------- RingMap

RingMap::RingMap(Algebra source, Algebra target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)) {
  if (images.size() != source_->nvars())
    throw RingMismatch("ring map needs " + std::to_string(source_->nvars()) + " images, got " +
                       std::to_string(images.size()));
  images_.reserve(images.size());
  for (const auto& img : images) images_.push_back(target_->reduce(img));
}

RingMap RingMap::identity(const Algebra& algebra) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < algebra->nvars(); ++i) images.push_back(algebra->var(i));
  return RingMap(algebra, algebra, std::move(images));
}

Polynomial RingMap::operator()(const Polynomial& f) const { return map_apply(*this, f); }

bool map_validate(const RingMap& phi) {
  for (const auto& rel : phi.source()->relations())
    if (!map_apply(phi, rel).is_zero()) return false;
  return true;
}

Polynomial map_apply(const RingMap& phi, const Polynomial& f) {
  if (f.nvars() != phi.source()->nvars())
    throw RingMismatch("polynomial does not belong to the source " + phi.source()->describe());
  const Algebra& tgt = phi.target();
  return tgt->reduce(f.substitute(phi.images(), tgt->nvars(), tgt->order()));
}

RingMap map_compose(const RingMap& psi, const RingMap& phi) {
  require_same_algebra(phi.target(), psi.source(), "map_compose");
  std::vector<Polynomial> images;
  images.reserve(phi.images().size());
  for (const auto& img : phi.images()) images.push_back(map_apply(psi, img));
  return RingMap(phi.source(), psi.target(), std::move(images));
}

namespace {

// Graph ideal in QQ[target vars, source vars] under block(m): the given
// target-side generators plus x_k - phi(x_k).
std::vector<Polynomial> graph_generators(const RingMap& phi,
                                         std::span<const Polynomial> target_side) {
  const std::size_t m = phi.target()->nvars();
  const std::size_t n = phi.source()->nvars();
  const MonomialOrder order = MonomialOrder::block(m);
  std::vector<Polynomial> gens;
  for (const auto& g : target_side) gens.push_back(g.with_order(order).embed(m + n, 0));
  for (std::size_t k = 0; k < n; ++k)
    gens.push_back(Polynomial::variable(m + n, m + k, order) -
                   phi.images()[k].with_order(order).embed(m + n, 0));
  return gens;
}

}  // namespace

Ideal contract(const RingMap& phi, const Ideal& ideal) {
  require_same_algebra(ideal.algebra(), phi.target(), "contract");
  if (!map_validate(phi)) throw IllDefinedMap("ring map does not respect the source relations");
  const auto gens = graph_generators(phi, ideal.basis());
  return Ideal(phi.source(), eliminate_polys(gens, phi.target()->nvars()));
}

Ideal map_kernel(const RingMap& phi) { return contract(phi, Ideal::zero(phi.target())); }

std::optional<std::vector<Polynomial>> map_preimages(const RingMap& phi) {
  if (!map_validate(phi)) throw IllDefinedMap("ring map does not respect the source relations");
  const std::size_t m = phi.target()->nvars();
  const std::size_t n = phi.source()->nvars();
  const MonomialOrder order = MonomialOrder::block(m);
  const auto gens = graph_generators(phi, phi.target()->relations());
  const GrobnerBasis gb = reduced_groebner(gens, order);
  std::vector<Polynomial> pre;
  for (std::size_t j = 0; j < m; ++j) {
    Polynomial r = normal_form(Polynomial::variable(m + n, j, order), gb.generators, order);
    if (!r.free_of_first(m)) return std::nullopt;
    pre.push_back(phi.source()->reduce(r.drop_first(m).with_order(phi.source()->order())));
  }
  return pre;
}

bool map_surjective(const RingMap& phi) { return map_preimages(phi).has_value(); }

Ideal extend(const RingMap& phi, const Ideal& ideal) {
  require_same_algebra(ideal.algebra(), phi.source(), "extend");
  std::vector<Polynomial> gens;
  gens.reserve(ideal.basis().size());
  for (const auto& g : ideal.basis()) gens.push_back(map_apply(phi, g));
  return Ideal(phi.target(), gens);
}

std::optional<Polynomial> inverse_of(const Algebra& algebra, const Polynomial& f) {
  const std::size_t n = algebra->nvars();
  if (f.nvars() != n) throw RingMismatch("element does not belong to " + algebra->describe());
  const MonomialOrder order = MonomialOrder::block(1);
  std::vector<Polynomial> gens;
  for (const auto& r : algebra->relations()) gens.push_back(r.with_order(order).embed(n + 1, 1));
  const Polynomial z = Polynomial::variable(n + 1, 0, order);
  gens.push_back(z * f.with_order(order).embed(n + 1, 1) - Polynomial::constant(n + 1, 1, order));
  const GrobnerBasis gb = reduced_groebner(gens, order);
  Polynomial r = normal_form(z, gb.generators, order);
  if (!r.free_of_first(1)) return std::nullopt;
  return algebra->reduce(r.drop_first(1).with_order(algebra->order()));
}

}  // namespace ssc
