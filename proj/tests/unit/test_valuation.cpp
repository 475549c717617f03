#include <gtest/gtest.h>

#include "partitions.hpp"
#include "sylow/errors.hpp"
#include "sylow/valuation.hpp"

namespace {

using namespace sylow;
using namespace sylow::valuation;

std::uint64_t naive_nu(std::uint64_t ell, BigInt x) {
  std::uint64_t v = 0;
  while (x % ell == 0) {
    x /= ell;
    ++v;
  }
  return v;
}

TEST(Valuation, NuExamples) {
  EXPECT_EQ(nu(2, 48), 4U);
  EXPECT_EQ(nu(3, 1), 0U);
  EXPECT_EQ(nu(5, 250), naive_nu(5, 250));
  EXPECT_EQ(nu(5, 250), 3U);
}

TEST(Valuation, NuRejectsBadInput) {
  EXPECT_THROW(nu(4, 16), InvalidArgument);
  EXPECT_THROW(nu(1, 16), InvalidArgument);
  EXPECT_THROW(nu(2, 0), InvalidArgument);
}

TEST(Valuation, NuFactorialExamples) {
  EXPECT_EQ(nu_factorial(2, 4), naive_nu(2, 24));
  EXPECT_EQ(nu_factorial(3, 10), naive_nu(3, factorial(10)));
  EXPECT_EQ(nu_factorial(3, 10), 4U);
  EXPECT_EQ(nu_factorial(5, 5), 1U);
  EXPECT_EQ(nu_factorial(7, 0), 0U);
  EXPECT_THROW(nu_factorial(6, 10), InvalidArgument);
}

TEST(Valuation, NuFactorialMatchesLegendreSumAndBigFactorial) {
  for (std::uint64_t ell : {2, 3, 5, 7}) {
    BigInt fact = 1;
    for (std::uint64_t n = 0; n <= 10000; ++n) {
      std::uint64_t sum = 0;
      for (std::uint64_t q = ell; q <= n; q *= ell) sum += n / q;
      ASSERT_EQ(nu_factorial(ell, n), sum) << "ell=" << ell << " n=" << n;
      if (n <= 500) {
        if (n > 0) fact *= n;
        ASSERT_EQ(nu_factorial(ell, n), naive_nu(ell, fact)) << "ell=" << ell << " n=" << n;
      }
    }
  }
}

TEST(Valuation, BaseDigits) {
  EXPECT_EQ(base_digits(2, 5).digits, (std::vector<std::uint64_t>{1, 0, 1}));
  EXPECT_EQ(base_digits(3, 9).digits, (std::vector<std::uint64_t>{0, 0, 1}));
  EXPECT_EQ(base_digits(7, 6).digits, (std::vector<std::uint64_t>{6}));
  EXPECT_TRUE(base_digits(5, 0).digits.empty());
  for (std::uint64_t ell : {2, 3, 5, 7}) {
    for (std::uint64_t n = 0; n < 2000; ++n) {
      auto d = base_digits(ell, n);
      ASSERT_EQ(d.value(), n);
      for (auto b : d.digits) ASSERT_LT(b, ell);
      if (!d.digits.empty()) ASSERT_NE(d.digits.back(), 0U);
    }
  }
}

TEST(Valuation, KummerExamples) {
  EXPECT_EQ(kummer_carries(2, Partition::from_parts({2, 2})), 1U);
  EXPECT_EQ(kummer_carries(2, Partition::from_parts({4, 1})), 0U);
  EXPECT_EQ(kummer_carries(3, Partition::from_parts({3, 3, 3})), 1U);
}

TEST(Valuation, KummerEqualsLiteralCarries) {
  for (std::uint64_t ell : {2, 3, 5, 7}) {
    for (std::uint64_t n = 1; n <= 24; ++n) {
      testing_oracle::for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
        ASSERT_EQ(kummer_carries(ell, Partition::from_parts(parts)),
                  testing_oracle::literal_carries(ell, parts));
      });
    }
  }
}

TEST(Valuation, MinimalPartitionExamples) {
  auto a = minimal_factorial_partition(2, 5);
  EXPECT_EQ(a.parts(), (std::vector<std::uint64_t>{4, 1}));
  EXPECT_EQ(a.factorial_product(), 24);
  EXPECT_EQ(minimal_factorial_partition(3, 9).parts(), (std::vector<std::uint64_t>{9}));
  auto c = minimal_factorial_partition(2, 6);
  EXPECT_EQ(c.parts(), (std::vector<std::uint64_t>{4, 2}));
  EXPECT_EQ(c.factorial_product(), 48);
  EXPECT_EQ(minimal_factorial_partition(3, 5).parts(), (std::vector<std::uint64_t>{3, 1, 1}));
}

TEST(Valuation, MinimalPartitionBeatsEveryCarryFreePartition) {
  for (std::uint64_t ell : {2, 3, 5}) {
    for (std::uint64_t n = 1; n <= 20; ++n) {
      const auto best = minimal_factorial_partition(ell, n);
      ASSERT_EQ(best.n(), n);
      ASSERT_EQ(kummer_carries(ell, best), 0U);
      testing_oracle::for_each_partition(n, [&](const std::vector<std::uint64_t>& parts) {
        if (testing_oracle::literal_carries(ell, parts) != 0) return;
        BigInt product = 1;
        for (auto k : parts) product *= factorial(k);
        ASSERT_GE(product, best.factorial_product()) << "ell=" << ell << " n=" << n;
      });
    }
  }
}

TEST(Valuation, ImprimitiveOrderValuation) {
  EXPECT_EQ(imprimitive_order_valuation(6, 3, 4, 3), naive_nu(3, 10368));
  EXPECT_EQ(imprimitive_order_valuation(6, 3, 4, 3), 4U);
  EXPECT_EQ(imprimitive_order_valuation(4, 2, 3, 2), 6U);
  for (std::uint64_t m : {1, 6, 8, 9, 12}) {
    for (std::uint64_t ell : {2, 3}) EXPECT_EQ(imprimitive_order_valuation(m, 1, 1, ell), nu(ell, m));
  }
  EXPECT_THROW(imprimitive_order_valuation(6, 4, 2, 2), InvalidArgument);
}

TEST(Valuation, PartitionValidation) {
  auto p = Partition::from_parts({1, 3, 2});
  EXPECT_EQ(p.parts(), (std::vector<std::uint64_t>{3, 2, 1}));
  EXPECT_EQ(p.n(), 6U);
  EXPECT_THROW(Partition::from_parts({2, 0}), InvalidArgument);
}

}  // namespace
