#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include "qcong/qcore.hpp"
#include "qcong/theorems.hpp"
#include "test_util.hpp"

namespace qcong {
namespace {

using testing::P;
using testing::PolyGen;

TEST(QInt, Examples) {
  EXPECT_EQ(q_int(1), P({1}));
  EXPECT_EQ(q_int(3), P({1, 1, 1}));
  EXPECT_EQ(q_int(6), P({1, 1, 1, 1, 1, 1}));
  EXPECT_THROW(q_int(0), InvalidArgument);
  EXPECT_THROW(q_int(-4), InvalidArgument);
}

TEST(QInt, FastRoutesMatchGenericArithmetic) {
  PolyGen gen(5);
  for (int i = 0; i < 200; ++i) {
    const IntPoly p = gen.poly(25);
    const std::int64_t n = 1 + static_cast<std::int64_t>(i % 9);
    EXPECT_EQ(mul_q_int(p, n), p * q_int(n));
    EXPECT_EQ(div_q_int(p * q_int(n), n), p);
    const auto generic = divrem_monic(p, q_int(n));
    if (generic.rem.is_zero()) {
      EXPECT_EQ(div_q_int(p, n), generic.quot);
    } else {
      try {
        div_q_int(p, n);
        ADD_FAILURE() << "expected InexactDivision for n=" << n;
      } catch (const InexactDivision& e) {
        EXPECT_EQ(e.remainder(), generic.rem);
      }
    }
  }
}

TEST(Char3, Examples) {
  EXPECT_EQ(char3(1), Char3::kPlusOne);
  EXPECT_EQ(char3(3), Char3::kZero);
  EXPECT_EQ(char3(-1), Char3::kMinusOne);
  EXPECT_EQ(char3(BigInt(-1)), Char3::kMinusOne);
  for (std::int64_t k = -30; k <= 30; ++k) {
    EXPECT_EQ(char3(k), char3(BigInt(k)));
    EXPECT_EQ(to_int(char3(k)) == 0, k % 3 == 0);
  }
}

TEST(Cyclotomic, Examples) {
  EXPECT_EQ(cyclotomic(1), P({-1, 1}));
  EXPECT_EQ(cyclotomic(9), P({1, 0, 0, 1, 0, 0, 1}));
  EXPECT_EQ(cyclotomic(6), P({1, -1, 1}));
  EXPECT_EQ(cyclotomic(2), P({1, 1}));
  EXPECT_THROW(cyclotomic(0), InvalidArgument);
}

TEST(Cyclotomic, ProductOverDivisorsIsQInt) {
  CyclotomicCache cache;
  for (std::int64_t n = 2; n <= 60; ++n) {
    IntPoly product{1};
    for (std::int64_t d = 2; d <= n; ++d) {
      if (n % d == 0) {
        EXPECT_TRUE(cache.get(d).is_monic());
        product *= cache.get(d);
      }
    }
    EXPECT_EQ(product, q_int(n)) << "n=" << n;
  }
}

TEST(Cyclotomic, ThreePowerIsSubstitutedQInt) {
  for (std::int64_t j = 1; j <= 6; ++j) {
    const auto step = static_cast<std::size_t>(ipow3(j - 1));
    // [3]_{q^{3^{j-1}}}
    IntPoly substituted;
    for (std::size_t i = 0; i < 3; ++i) substituted += IntPoly::monomial(1, i * step);
    EXPECT_EQ(cyclotomic(ipow3(j)), substituted);
  }
  // The closed form must agree with the generic division route.
  const IntPoly generic = exact_div(exact_div(IntPoly::monomial(1, 27) - P({1}), cyclotomic(1)),
                                    cyclotomic(3) * cyclotomic(9));
  EXPECT_EQ(cyclotomic(27), generic);
}

TEST(Cyclotomic, CacheIsSafeUnderConcurrentUse) {
  CyclotomicCache cache;
  std::vector<std::jthread> threads;
  std::vector<IntPoly> seen(8);
  for (int t = 0; t < 8; ++t) {
    threads.emplace_back([&cache, &seen, t] {
      for (std::int64_t d = 1; d <= 40; ++d) cache.get(d);
      seen[t] = cache.get(30);
    });
  }
  threads.clear();
  for (const auto& s : seen) EXPECT_EQ(s, seen[0]);
  EXPECT_EQ(cache.size(), 40u);
}

TEST(QBinom, Examples) {
  EXPECT_EQ(q_binom(2, 1), P({1, 1}));
  EXPECT_EQ(q_binom(4, 2), P({1, 1, 2, 1, 1}));
  EXPECT_EQ(q_binom(6, 2), P({1, 1, 2, 2, 3, 2, 2, 1, 1}));
  EXPECT_EQ(q_binom(5, 0), P({1}));
  EXPECT_TRUE(q_binom(3, 4).is_zero());
  EXPECT_THROW(q_binom(-1, 0), InvalidArgument);
}

TEST(QBinom, ProductMatchesPascalExhaustively) {
  for (std::int64_t n = 0; n <= 24; ++n) {
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      const IntPoly value = q_binom(n, k);
      ASSERT_EQ(value, q_binom_pascal(n, k)) << n << "," << k;
      if (k > n) continue;
      EXPECT_EQ(eval_rat(value, 1), BigRat(binomial(n, k)));
      EXPECT_EQ(value, q_binom(n, n - k));
      EXPECT_EQ(*value.degree(), static_cast<std::size_t>(k * (n - k)));
      for (const auto& c : value.coeffs()) EXPECT_GT(c, 0);
    }
  }
}

TEST(QBinom, RowMatchesSingleCalls) {
  const auto row = q_binom_row(14, 16);
  for (std::int64_t k = 0; k <= 16; ++k) EXPECT_EQ(row[k], q_binom(14, k));
}

TEST(CentralSum, Examples) {
  EXPECT_EQ(central_qbinom_sum(1), P({1}));
  EXPECT_EQ(central_qbinom_sum(2), P({1, 1, 1}));
  EXPECT_EQ(central_qbinom_sum(3), P({1, 1, 2, 1, 2, 1, 1}));
  EXPECT_THROW(central_qbinom_sum(0), InvalidArgument);
  EXPECT_THROW(central_qbinom_sum(3, P({1, 2})), NonMonicDivisor);
  EXPECT_THROW(central_qbinom_sum(3, P({1})), InvalidArgument);
}

TEST(CentralSum, IncrementalMatchesDirect) {
  for (std::int64_t n = 1; n <= 27; ++n) {
    EXPECT_EQ(central_qbinom_sum(n), central_qbinom_sum_direct(n)) << n;
  }
}

TEST(CentralSum, ReducedMatchesRemainderOfFullSum) {
  const IntPoly moduli[] = {q_int(3) * q_int(3), q_int(9) * q_int(9)};
  for (std::int64_t n = 1; n <= 27; ++n) {
    const IntPoly full = central_qbinom_sum(n);
    for (const auto& m : moduli) {
      EXPECT_EQ(central_qbinom_sum(n, m), divrem_monic(full, m).rem) << n;
    }
  }
}

}  // namespace
}  // namespace qcong
