#include "ssc/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ssc {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  degree_ = std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::quotient(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - other.exps_[i];
  r.degree_ = degree_ - other.degree_;
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::embed(std::size_t new_nvars, std::size_t offset) const {
  Monomial r(new_nvars);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_.at(i + offset) = exps_[i];
  r.degree_ = degree_;
  return r;
}

Monomial Monomial::drop_first(std::size_t k) const {
  return Monomial(std::vector<std::uint32_t>(exps_.begin() + static_cast<std::ptrdiff_t>(k), exps_.end()));
}

// ----------------------------------------------------------- MonomialOrder

namespace {

// GMP leaves mpq_class(num, den) as given; arithmetic on it is only
// meaningful after canonicalize().
Rational canonical(const Rational& c) {
  Rational out(c);
  out.canonicalize();
  return out;
}

std::strong_ordering lex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                               std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo,
                                   std::size_t hi, std::uint32_t deg_a, std::uint32_t deg_b) {
  if (deg_a != deg_b) return deg_a <=> deg_b;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind_) {
    case Kind::Lex:
      return lex_range(a, b, 0, n);
    case Kind::Grevlex:
      return grevlex_range(a, b, 0, n, a.degree(), b.degree());
    case Kind::Block: {
      const std::size_t k = std::min(block_, n);
      std::uint32_t head_a = 0, head_b = 0;
      for (std::size_t i = 0; i < k; ++i) {
        head_a += a[i];
        head_b += b[i];
      }
      if (auto c = lex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n, a.degree() - head_a, b.degree() - head_b);
    }
  }
  return std::strong_ordering::equal;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::Grevlex:
      return "grevlex";
    case Kind::Block:
      return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

// -------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c, MonomialOrder order) {
  Polynomial p(nvars, order);
  if (c != 0) p.terms_.push_back({canonical(c), Monomial(nvars)});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index, MonomialOrder order) {
  Polynomial p(nvars, order);
  p.terms_.push_back({Rational(1), Monomial::variable(nvars, index)});
  return p;
}

Polynomial Polynomial::monomial(const Rational& c, Monomial m, MonomialOrder order) {
  Polynomial p(m.nvars(), order);
  if (c != 0) p.terms_.push_back({canonical(c), std::move(m)});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms,
                                  MonomialOrder order) {
  Polynomial p(nvars, order);
  for (auto& t : terms) {
    if (t.mono.nvars() != nvars) throw RingMismatch("monomial arity does not match ring");
    t.coeff.canonicalize();
  }
  p.terms_ = std::move(terms);
  p.sort_terms();
  return p;
}

void Polynomial::sort_terms() {
  std::sort(terms_.begin(), terms_.end(), [this](const Term& a, const Term& b) {
    return order_.compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms_ = std::move(out);
}

std::uint32_t Polynomial::total_degree() const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

const Term& Polynomial::leading() const {
  if (terms_.empty()) throw NoLeadingTerm();
  return terms_.front();
}

Polynomial Polynomial::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  Polynomial p(nvars_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) {
    return order.compare(a.mono, b.mono) > 0;
  });
  return p;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty() || terms_.front().coeff == 1) return *this;
  Rational inv = 1 / terms_.front().coeff;
  return scaled(inv);
}

Polynomial Polynomial::scaled(const Rational& scalar) const {
  Polynomial p(nvars_, order_);
  const Rational c = canonical(scalar);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono});
  return p;
}

Polynomial Polynomial::mul_term(const Rational& scalar, const Monomial& m) const {
  if (m.nvars() != nvars_) throw RingMismatch("monomial arity does not match ring");
  Polynomial p(nvars_, order_);
  const Rational c = canonical(scalar);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff * c, t.mono * m});
  return p;
}

Polynomial Polynomial::pow(unsigned n) const {
  Polynomial result = constant(nvars_, 1, order_);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::embed(std::size_t new_nvars, std::size_t offset) const {
  if (offset + nvars_ > new_nvars) throw RingMismatch("embedding does not fit the target ring");
  Polynomial p(new_nvars, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff, t.mono.embed(new_nvars, offset)});
  p.sort_terms();
  return p;
}

Polynomial Polynomial::permute(std::span<const std::size_t> perm) const {
  if (perm.size() != nvars_) throw RingMismatch("permutation size does not match ring");
  Polynomial p(nvars_, order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(nvars_, 0);
    for (std::size_t k = 0; k < nvars_; ++k) e[perm[k]] = t.mono[k];
    p.terms_.push_back({t.coeff, Monomial(std::move(e))});
  }
  p.sort_terms();
  return p;
}

bool Polynomial::free_of_first(std::size_t k) const {
  for (const auto& t : terms_)
    for (std::size_t i = 0; i < k && i < nvars_; ++i)
      if (t.mono[i] != 0) return false;
  return true;
}

Polynomial Polynomial::drop_first(std::size_t k) const {
  if (!free_of_first(k)) throw RingMismatch("polynomial involves eliminated variables");
  Polynomial p(nvars_ - k, order_.kind() == MonomialOrder::Kind::Block ? MonomialOrder::grevlex() : order_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.coeff, t.mono.drop_first(k)});
  p.sort_terms();
  return p;
}

bool Polynomial::uses_variable(std::size_t index) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono[index] != 0; });
}

Polynomial Polynomial::substitute(std::span<const Polynomial> images, std::size_t target_nvars,
                                  MonomialOrder target_order) const {
  if (images.size() != nvars_) throw RingMismatch("substitution needs one image per variable");
  for (const auto& img : images)
    if (img.nvars() != target_nvars) throw RingMismatch("image lives in a different ring");
  // powers[k][e] = images[k]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power = [&](std::size_t k, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(constant(target_nvars, 1, target_order));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k].with_order(target_order));
    return cache[e];
  };
  std::vector<Term> acc;
  for (const auto& t : terms_) {
    Polynomial prod = constant(target_nvars, t.coeff, target_order);
    for (std::size_t k = 0; k < nvars_; ++k)
      if (t.mono[k] != 0) prod = prod * power(k, t.mono[k]);
    for (const auto& pt : prod.terms_) acc.push_back(pt);
  }
  return from_terms(target_nvars, std::move(acc), target_order);
}

void Polynomial::pop_leading() {
  if (terms_.empty()) throw NoLeadingTerm();
  terms_.erase(terms_.begin());
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(*this, g);
  if (g.order_ != order_) return sub_mul(c, m, g.with_order(order_));
  Polynomial out(nvars_, order_);
  out.terms_.reserve(terms_.size() + g.terms_.size());
  auto a = terms_.begin();
  auto b = g.terms_.begin();
  // multiplication by a monomial preserves the order of g's terms
  while (a != terms_.end() || b != g.terms_.end()) {
    if (b == g.terms_.end()) {
      out.terms_.push_back(*a++);
      continue;
    }
    Monomial bm = b->mono * m;
    if (a == terms_.end()) {
      out.terms_.push_back({-c * b->coeff, std::move(bm)});
      ++b;
      continue;
    }
    auto cmp = order_.compare(a->mono, bm);
    if (cmp > 0) {
      out.terms_.push_back(*a++);
    } else if (cmp < 0) {
      out.terms_.push_back({-c * b->coeff, std::move(bm)});
      ++b;
    } else {
      Rational coeff = a->coeff - c * b->coeff;
      if (coeff != 0) out.terms_.push_back({std::move(coeff), std::move(bm)});
      ++a;
      ++b;
    }
  }
  return out;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  return f.sub_mul(-1, Monomial(f.nvars()), g);
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) {
  return f.sub_mul(1, Monomial(f.nvars()), g);
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_ring(f, g);
  std::vector<Term> acc;
  acc.reserve(f.size() * g.size());
  for (const auto& a : f.terms_)
    for (const auto& b : g.terms_) acc.push_back({a.coeff * b.coeff, a.mono * b.mono});
  return Polynomial::from_terms(f.nvars(), std::move(acc), f.order());
}

bool operator==(const Polynomial& f, const Polynomial& g) {
  if (f.nvars_ != g.nvars_ || f.terms_.size() != g.terms_.size()) return false;
  if (f.order_ != g.order_) return f == g.with_order(f.order_);
  for (std::size_t i = 0; i < f.terms_.size(); ++i)
    if (f.terms_[i].coeff != g.terms_[i].coeff || !(f.terms_[i].mono == g.terms_[i].mono))
      return false;
  return true;
}

void require_same_ring(const Polynomial& f, const Polynomial& g) {
  if (f.nvars() != g.nvars())
    throw RingMismatch("polynomials live in rings of arity " + std::to_string(f.nvars()) +
                       " and " + std::to_string(g.nvars()));
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Term leading_term(const Polynomial& f, MonomialOrder order) {
  return f.with_order(order).leading();
}

// -------------------------------------------------------------- formatting

std::string format_poly(const Polynomial& f, std::span<const std::string> names,
                        MonomialOrder order) {
  if (names.size() != f.nvars()) throw RingMismatch("variable names do not match ring arity");
  if (f.is_zero()) return "0";
  const Polynomial g = f.with_order(order);
  std::ostringstream out;
  bool first = true;
  for (const auto& t : g.terms()) {
    const bool negative = sgn(t.coeff) < 0;
    if (first)
      out << (negative ? "-" : "");
    else
      out << (negative ? " - " : " + ");
    first = false;
    Rational mag = abs(t.coeff);
    std::string mono;
    for (std::size_t i = 0; i < t.mono.nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += names[i];
      if (t.mono[i] > 1) mono += '^' + std::to_string(t.mono[i]);
    }
    if (mono.empty())
      out << mag.get_str();
    else if (mag == 1)
      out << mono;
    else
      out << mag.get_str() << '*' << mono;
  }
  return out.str();
}

std::string format_poly(const Polynomial& f, std::span<const std::string> names) {
  return format_poly(f, names, f.order());
}

}  // namespace ssc
