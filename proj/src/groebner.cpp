#include "ssc/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace ssc {

namespace {

void require_uniform(std::span<const Polynomial> polys, const Polynomial* probe = nullptr) {
  const Polynomial* first = probe;
  for (const auto& p : polys) {
    if (first == nullptr)
      first = &p;
    else
      require_same_ring(*first, p);
  }
}

std::vector<Polynomial> in_order(std::span<const Polynomial> polys, MonomialOrder order) {
  std::vector<Polynomial> out;
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(p.with_order(order));
  return out;
}

// Remainder of p; the divisors are already sorted under p's order.
Polynomial reduce_sorted(Polynomial p, std::span<const Polynomial> divisors) {
  std::vector<Term> remainder;
  while (!p.is_zero()) {
    const Term& lead = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.push_back(lead);
      p.pop_leading();
      continue;
    }
    const Rational c = lead.coeff / divisor->leading_coeff();
    const Monomial m = lead.mono.quotient(divisor->leading_monomial());
    p = p.sub_mul(c, m, *divisor);
  }
  // remainder terms were emitted in descending order
  return Polynomial::from_terms(p.nvars(), std::move(remainder), p.order());
}

// Reduces only the leading term, until it is irreducible.
Polynomial top_reduce(Polynomial p, std::span<const Polynomial> divisors) {
  while (!p.is_zero()) {
    const Term& lead = p.leading();
    const Polynomial* divisor = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(lead.mono)) {
        divisor = &g;
        break;
      }
    }
    if (divisor == nullptr) break;
    const Rational c = lead.coeff / divisor->leading_coeff();
    p = p.sub_mul(c, lead.mono.quotient(divisor->leading_monomial()), *divisor);
  }
  return p;
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  std::uint32_t sugar;
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       MonomialOrder order) {
  require_uniform(divisors, &f);
  const auto sorted = in_order(divisors, order);
  return reduce_sorted(f.with_order(order), sorted);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  require_same_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw ZeroInput("S-polynomial of a zero polynomial");
  const Polynomial a = f.with_order(order);
  const Polynomial b = g.with_order(order);
  const Monomial l = a.leading_monomial().lcm(b.leading_monomial());
  const Polynomial left = a.mul_term(1 / a.leading_coeff(), l.quotient(a.leading_monomial()));
  return left.sub_mul(1 / b.leading_coeff(), l.quotient(b.leading_monomial()), b);
}

GrobnerBasis buchberger(std::span<const Polynomial> gens, MonomialOrder order) {
  require_uniform(gens);
  std::vector<Polynomial> basis;
  std::vector<std::uint32_t> sugar;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial p = g.with_order(order).monic();
    if (p.is_constant()) return {{p}, order, false};
    sugar.push_back(p.total_degree());
    basis.push_back(std::move(p));
  }

  std::vector<CriticalPair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  auto add_pairs_for = [&](std::size_t j) {
    const Monomial& lm_j = basis[j].leading_monomial();
    for (std::size_t i = 0; i < j; ++i) {
      const Monomial& lm_i = basis[i].leading_monomial();
      Monomial l = lm_i.lcm(lm_j);
      const std::uint32_t s = std::max(sugar[i] + l.degree() - lm_i.degree(), sugar[j] + l.degree() - lm_j.degree());
      queue.push_back({i, j, std::move(l), s});
      pending.emplace(i, j);
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  auto is_pending = [&](std::size_t a, std::size_t b) {
    return pending.count({std::min(a, b), std::max(a, b)}) != 0;
  };

  while (!queue.empty()) {
    // sugar strategy: smallest sugar, then smallest lcm under the order, then indices
    auto best = queue.begin();
    for (auto it = std::next(queue.begin()); it != queue.end(); ++it) {
      if (it->sugar != best->sugar) {
        if (it->sugar < best->sugar) best = it;
        continue;
      }
      auto c = order.compare(it->lcm, best->lcm);
      if (c < 0 || (c == 0 && std::pair(it->j, it->i) < std::pair(best->j, best->i))) best = it;
    }
    const CriticalPair pair = *best;
    queue.erase(best);
    pending.erase({pair.i, pair.j});

    const Monomial& lm_i = basis[pair.i].leading_monomial();
    const Monomial& lm_j = basis[pair.j].leading_monomial();
    if (lm_i.coprime(lm_j)) continue;

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = basis[k].leading_monomial().divides(pair.lcm) && !is_pending(pair.i, k) &&
              !is_pending(pair.j, k);
    }
    if (chain) continue;

    Polynomial r = top_reduce(s_polynomial(basis[pair.i], basis[pair.j], order), basis);
    if (r.is_zero()) continue;
    r = r.monic();
    if (r.is_constant()) return {{r}, order, false};
    basis.push_back(std::move(r));
    sugar.push_back(pair.sugar);
    add_pairs_for(basis.size() - 1);
  }
  return {std::move(basis), order, false};
}

GrobnerBasis reduced_basis(const GrobnerBasis& basis) {
  const MonomialOrder order = basis.order;
  std::vector<Polynomial> gens;
  for (const auto& g : basis.generators)
    if (!g.is_zero()) gens.push_back(g.with_order(order).monic());

  std::vector<Polynomial> minimal;
  for (std::size_t a = 0; a < gens.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < gens.size() && !redundant; ++b) {
      if (a == b) continue;
      const Monomial& la = gens[a].leading_monomial();
      const Monomial& lb = gens[b].leading_monomial();
      if (lb.divides(la) && (!(la == lb) || b < a)) redundant = true;
    }
    if (!redundant) minimal.push_back(gens[a]);
  }

  std::vector<Polynomial> reduced;
  reduced.reserve(minimal.size());
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    std::vector<Polynomial> others;
    for (std::size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    reduced.push_back(reduce_sorted(minimal[a], others).monic());
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& x, const Polynomial& y) {
    return order.compare(x.leading_monomial(), y.leading_monomial()) > 0;
  });
  return {std::move(reduced), order, true};
}

GrobnerBasis reduced_groebner(std::span<const Polynomial> gens, MonomialOrder order) {
  return reduced_basis(buchberger(gens, order));
}

bool contains(const GrobnerBasis& basis, const Polynomial& f) {
  if (f.is_zero()) return true;
  return normal_form(f, basis.generators, basis.order).is_zero();
}

}  // namespace ssc
