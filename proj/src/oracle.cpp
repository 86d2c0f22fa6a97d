#include "ssc/oracle.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ssc::oracle {

IntegerSubscheme int_mul(IntegerSubscheme a, IntegerSubscheme b) { return {std::gcd(a.m, b.m)}; }

IntegerSubscheme int_add(IntegerSubscheme a, IntegerSubscheme b) {
  if (a.m == 0 || b.m == 0) return {0};
  const std::uint64_t q = a.m / std::gcd(a.m, b.m);
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(q, b.m, &out)) throw std::overflow_error("lcm overflow");
  return {out};
}

std::vector<std::uint64_t> prime_support(std::uint64_t m) {
  if (m == 0) throw Error("prime_support: m must be positive");
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    primes.push_back(p);
    while (m % p == 0) m /= p;
  }
  if (m > 1) primes.push_back(m);
  return primes;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

CyclicRingSubscheme cyc_mul(CyclicRingSubscheme a, CyclicRingSubscheme b) {
  return {a.n, std::gcd(a.d, b.d)};
}

CyclicRingSubscheme cyc_add(CyclicRingSubscheme a, CyclicRingSubscheme b) {
  return {a.n, std::lcm(a.d, b.d)};
}

CyclicRingSubscheme cyc_extend(CyclicRingSubscheme a, std::uint64_t m) { return {m, std::gcd(a.d, m)}; }

namespace {

std::string ids(std::initializer_list<std::uint64_t> xs) {
  std::string s = "(";
  for (auto x : xs) s += (s.size() > 1 ? ", " : "") + std::to_string(x);
  return s + ")";
}

}  // namespace

Report cyc_laws(std::uint64_t n) {
  if (n == 0) throw Error("cyc_laws: n must be positive");
  Report report;
  LawTally tally(report, "Z/" + std::to_string(n) + " ");
  auto law = [&](bool ok, std::string_view name, std::initializer_list<std::uint64_t> w) {
    tally.expect(ok, name, [&] { return ids(w); });
  };
  const auto ds = divisors(n);
  const CyclicRingSubscheme whole{n, n}, empty{n, 1};
  for (auto a : ds) {
    const CyclicRingSubscheme z{n, a};
    law(n % a == 0, "ideal is a divisor", {a});
    law(cyc_mul(z, z) == z, "mul idempotent", {a});
    law(cyc_add(z, z) == z, "add idempotent", {a});
    law(cyc_mul(z, whole) == z, "mul identity whole", {a});
    law(cyc_add(z, empty) == z, "add identity empty", {a});
    for (auto b : ds) {
      const CyclicRingSubscheme w{n, b};
      law(n % cyc_mul(z, w).d == 0 && n % cyc_add(z, w).d == 0, "closure", {a, b});
      law(cyc_mul(z, w) == cyc_mul(w, z), "mul commutative", {a, b});
      law(cyc_add(z, w) == cyc_add(w, z), "add commutative", {a, b});
      law(cyc_add(z, cyc_mul(z, w)) == z, "absorption add(z, mul(z, w))", {a, b});
      law(cyc_mul(z, cyc_add(z, w)) == z, "absorption mul(z, add(z, w))", {a, b});
      for (auto c : ds) {
        const CyclicRingSubscheme v{n, c};
        law(cyc_mul(cyc_mul(z, w), v) == cyc_mul(z, cyc_mul(w, v)), "mul associative",
                     {a, b, c});
        law(cyc_add(cyc_add(z, w), v) == cyc_add(z, cyc_add(w, v)), "add associative",
                     {a, b, c});
      }
    }
  }
  for (auto m : ds) {
    law(cyc_extend(whole, m) == CyclicRingSubscheme{m, m}, "extension keeps whole", {m});
    law(cyc_extend(empty, m) == CyclicRingSubscheme{m, 1}, "extension keeps empty", {m});
    for (auto a : ds)
      for (auto b : ds) {
        const CyclicRingSubscheme z{n, a}, w{n, b};
        law(cyc_extend(cyc_mul(z, w), m) == cyc_mul(cyc_extend(z, m), cyc_extend(w, m)),
                     "extension multiplicative", {m, a, b});
        law(cyc_extend(cyc_add(z, w), m) == cyc_add(cyc_extend(z, m), cyc_extend(w, m)),
                     "extension additive", {m, a, b});
      }
  }
  tally.flush();
  return report;
}

Report int_laws(std::uint64_t max_m, std::uint64_t max_triple) {
  Report report;
  LawTally tally(report, "Spec Z ");
  auto law = [&](bool ok, std::string_view name, std::initializer_list<std::uint64_t> w) {
    tally.expect(ok, name, [&] { return ids(w); });
  };
  const IntegerSubscheme whole{0}, empty{1};
  for (std::uint64_t a = 0; a <= max_m; ++a) {
    const IntegerSubscheme z{a};
    law(int_mul(z, z) == z, "mul idempotent", {a});
    law(int_add(z, z) == z, "add idempotent", {a});
    law(int_mul(z, whole) == z, "mul identity whole", {a});
    law(int_add(z, empty) == z, "add identity empty", {a});
    for (std::uint64_t b = 0; b <= max_m; ++b) {
      const IntegerSubscheme w{b};
      law(int_mul(z, w) == int_mul(w, z), "mul commutative", {a, b});
      law(int_add(z, w) == int_add(w, z), "add commutative", {a, b});
      law(int_add(z, int_mul(z, w)) == z, "absorption add(z, mul(z, w))", {a, b});
      law(int_mul(z, int_add(z, w)) == z, "absorption mul(z, add(z, w))", {a, b});
    }
  }
  for (std::uint64_t a = 0; a <= max_triple; ++a)
    for (std::uint64_t b = 0; b <= max_triple; ++b)
      for (std::uint64_t c = 0; c <= max_triple; ++c) {
        const IntegerSubscheme z{a}, w{b}, v{c};
        law(int_mul(int_mul(z, w), v) == int_mul(z, int_mul(w, v)), "mul associative",
                     {a, b, c});
        law(int_add(int_add(z, w), v) == int_add(z, int_add(w, v)), "add associative",
                     {a, b, c});
      }
  tally.flush();
  return report;
}

namespace {

// Coefficients by ascending degree, no trailing zeros.
using Dense = std::vector<Rational>;

void trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Dense to_dense(const Polynomial& f) {
  if (f.nvars() != 1) throw RingMismatch("univariate oracle needs exactly one variable");
  if (f.is_zero()) throw ZeroInput("univariate oracle: zero input");
  Dense out(f.total_degree() + 1);
  for (const Term& t : f.terms()) out[t.mono[0]] = t.coeff;
  return out;
}

Polynomial from_dense(const Dense& f, MonomialOrder order) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < f.size(); ++k)
    if (f[k] != 0) terms.push_back({f[k], Monomial::variable(1, 0, static_cast<std::uint32_t>(k))});
  return Polynomial::from_terms(1, std::move(terms), order);
}

void make_monic(Dense& f) {
  const Rational lead = f.back();
  for (auto& c : f) c /= lead;
}

Dense remainder(Dense a, const Dense& b) {
  while (a.size() >= b.size()) {
    const Rational q = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q * b[k];
    trim(a);
  }
  return a;
}

Dense quotient(Dense a, const Dense& b) {
  Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    q[shift] = a.back() / b.back();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= q[shift] * b[k];
    trim(a);
  }
  return q;
}

Dense product(const Dense& a, const Dense& b) {
  Dense out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Dense euclid(Dense a, Dense b) {
  while (!b.empty()) {
    Dense r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

}  // namespace

Polynomial uni_gcd_oracle(const Polynomial& f, const Polynomial& g) {
  return from_dense(euclid(to_dense(f), to_dense(g)), f.order());
}

Polynomial uni_intersect_oracle(const Polynomial& f, const Polynomial& g) {
  const Dense a = to_dense(f), b = to_dense(g);
  Dense l = quotient(product(a, b), euclid(a, b));
  make_monic(l);
  return from_dense(l, f.order());
}

}  // namespace ssc::oracle
