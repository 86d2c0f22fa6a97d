#include <gtest/gtest.h>

#include <chrono>

#include "ssc/algebra.hpp"
#include "ssc/oracle.hpp"
#include "ssc/random.hpp"

using namespace ssc;
using namespace ssc::oracle;

TEST(IntegerSubscheme, Examples) {
  EXPECT_EQ(int_mul({4}, {6}).m, 2u);
  EXPECT_EQ(int_add({4}, {6}).m, 12u);
  for (std::uint64_t m : {0u, 1u, 7u, 12u}) {
    EXPECT_EQ(int_mul({m}, {0}).m, m);
    EXPECT_EQ(int_mul({m}, {m}).m, m);
    EXPECT_EQ(int_add({m}, {1}).m, m);
  }
  EXPECT_EQ(int_add({5}, {0}).m, 0u);
  EXPECT_THROW(int_add({1ull << 40}, {(1ull << 40) - 1}), std::overflow_error);
}

TEST(IntegerSubscheme, PrimePowersDistinctWithSameSupport) {
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    std::vector<std::uint64_t> seen;
    std::uint64_t q = 1;
    for (int a = 1; a <= 20; ++a) {
      q *= p;
      EXPECT_EQ(prime_support(q), std::vector<std::uint64_t>{p});
      for (auto s : seen) EXPECT_FALSE(IntegerSubscheme{s} == IntegerSubscheme{q});
      seen.push_back(q);
    }
  }
}

TEST(IntegerSubscheme, ExhaustiveLaws) {
  const Report r = int_laws(1000, 100);
  EXPECT_TRUE(r.ok()) << r.to_string();
  EXPECT_EQ(r.lines().size(), 10u);
}

TEST(CyclicRing, Divisors) {
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(36).size(), 9u);
}

TEST(CyclicRing, LawsSmall) {
  const Report r12 = cyc_laws(12);
  EXPECT_TRUE(r12.ok()) << r12.to_string();
  EXPECT_NE(r12.to_string().find("PASS Z/12 mul associative: 216 cases"), std::string::npos)
      << r12.to_string();
  EXPECT_TRUE(cyc_laws(1).ok());
}

TEST(CyclicRing, ExtensionCannotWitnessFailure) {
  const CyclicRingSubscheme z{36, 4}, w{36, 9};
  EXPECT_EQ(cyc_extend(cyc_add(z, w), 6).d, 6u);
  EXPECT_EQ(cyc_add(cyc_extend(z, 6), cyc_extend(w, 6)).d, 6u);
}

TEST(CyclicRing, ExhaustiveUpTo1000) {
  const auto start = std::chrono::steady_clock::now();
  for (std::uint64_t n = 1; n <= 1000; ++n) {
    const Report r = cyc_laws(n);
    ASSERT_TRUE(r.ok()) << r.to_string();
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(10));
}

TEST(Univariate, Examples) {
  const Algebra a = AffineAlgebra::make({"x"});
  auto P = [&](const char* s) { return a->parse(s); };
  EXPECT_EQ(uni_intersect_oracle(P("x^2*(x - 1)"), P("x*(x - 1)^2")), P("x^2*(x - 1)^2"));
  EXPECT_EQ(uni_gcd_oracle(P("x^2*(x - 1)"), P("x*(x - 1)^2")), P("x^2 - x"));
  EXPECT_EQ(uni_intersect_oracle(P("3*x - 6"), P("3*x - 6")), P("x - 2"));
  EXPECT_EQ(uni_intersect_oracle(P("x"), P("x - 1")), P("x^2 - x"));
  EXPECT_EQ(uni_intersect_oracle(P("2"), P("x + 1")), P("x + 1"));
  EXPECT_THROW(uni_intersect_oracle(a->zero(), P("x")), ZeroInput);
  EXPECT_THROW(uni_gcd_oracle(Polynomial::variable(2, 0), Polynomial::variable(2, 1)), RingMismatch);
}

TEST(Univariate, GroebnerMatchesEuclid) {
  const Algebra a = AffineAlgebra::make({"x"});
  Rng rng(11);
  for (int k = 0; k < 100; ++k) {
    const Polynomial f = random_root_product(rng, 4, 3, a->order());
    const Polynomial g = random_root_product(rng, 4, 3, a->order());
    const Ideal i(a, {f}), j(a, {g});
    const auto meet = ideal_intersect(i, j).basis();
    ASSERT_EQ(meet.size(), 1u);
    EXPECT_EQ(meet[0], uni_intersect_oracle(f, g));
    const auto join = ideal_sum(i, j).basis();
    ASSERT_EQ(join.size(), 1u);
    EXPECT_EQ(join[0], uni_gcd_oracle(f, g));
  }
}
