#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "signed_matrix_oracle.hpp"
#include "sylow/errors.hpp"
#include "sylow/oracle.hpp"
#include "sylow/valuation.hpp"

namespace {

using namespace sylow;
using namespace sylow::oracle;

MonomialElement make(std::vector<unsigned> perm, std::vector<unsigned> phase) {
  return MonomialElement{std::move(perm), std::move(phase)};
}

std::vector<std::size_t> class_orders(const std::vector<SubgroupClass>& cs) {
  std::vector<std::size_t> out;
  for (const auto& c : cs) out.push_back(c.member_order);
  std::sort(out.begin(), out.end());
  return out;
}

SubgroupHandle by_elements(const ConcreteGroup& g, const std::vector<MonomialElement>& gens) {
  std::vector<std::size_t> idx;
  for (const auto& x : gens) idx.push_back(g.index_of(x).value());
  return g.generate(idx);
}

TEST(Enumerate, Orders) {
  EXPECT_EQ(enumerate_group(3, 3, 2).order(), 6U);
  EXPECT_EQ(enumerate_group(2, 1, 2).order(), 8U);
  EXPECT_EQ(enumerate_group(1, 1, 3).order(), 6U);
  EXPECT_EQ(enumerate_group(12, 6, 3).order(), 1728U);
  EXPECT_THROW(enumerate_group(6, 4, 2), InvalidArgument);
  EXPECT_THROW(enumerate_group(12, 1, 4, 1000), ResourceLimit);
}

TEST(Enumerate, IdentityIsFirstAndIndexRoundTrips) {
  auto g = enumerate_group(4, 2, 3);
  EXPECT_TRUE(g.element(0).is_identity());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto x = g.element(i);
    ASSERT_TRUE(is_member(x, 4, 2));
    ASSERT_EQ(g.index_of(x), i);
  }
}

TEST(Enumerate, MultiplicationMatchesElementArithmetic) {
  auto g = enumerate_group(6, 3, 3);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int t = 0; t < 2000; ++t) {
    auto a = pick(rng), b = pick(rng);
    auto ab = multiply(g.element(a), g.element(b), 6);
    ASSERT_TRUE(is_member(ab, 6, 3));
    ASSERT_EQ(g.index_of(ab), g.multiply(a, b));
    ASSERT_EQ(g.multiply(a, g.inverse(a)), 0U);
    ASSERT_EQ(multiply(g.element(a), inverse(g.element(a), 6), 6), MonomialElement::identity(3));
  }
}

TEST(Reflections, Counts) {
  EXPECT_EQ(reflections(enumerate_group(2, 1, 2)).size(), 4U);
  EXPECT_EQ(reflections(enumerate_group(3, 3, 2)).size(), 3U);
  EXPECT_EQ(reflections(enumerate_group(1, 1, 3)).size(), 3U);
}

// The number of reflections is the sum of (d_i - 1) over the degrees.
TEST(Reflections, CountEqualsDegreeSum) {
  for (std::uint64_t m = 1; m <= 6; ++m)
    for (std::uint64_t p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (std::uint64_t n = 2; n <= 4; ++n) {
        if (GroupType::imprimitive(m, p, n).order() > kDefaultOrderCap) continue;
        auto g = enumerate_group(m, p, n);
        std::uint64_t expected = 0;
        for (auto d : degrees_imprimitive(m, p, n)) expected += d - 1;
        ASSERT_EQ(g.reflection_indices().size(), expected) << m << "," << p << "," << n;
        for (auto i : g.reflection_indices()) ASSERT_EQ(fixed_space(g.element(i), m).dimension(), n - 1);
      }
    }
}

TEST(FixedSpace, Examples) {
  EXPECT_EQ(fixed_space(MonomialElement::identity(3), 4).dimension(), 3U);
  EXPECT_EQ(fixed_space(make({1, 0, 2}, {0, 0, 0}), 1).dimension(), 2U);
  EXPECT_EQ(fixed_space(make({0, 1}, {2, 0}), 4).dimension(), 1U);
}

TEST(FixedSpace, EveryElementFixesItsOwnSpace) {
  auto g = enumerate_group(4, 2, 3);
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto x = g.element(i);
    ASSERT_TRUE(fixes(x, fixed_space(x, 4), 4));
  }
}

TEST(Stabilizer, Examples) {
  auto g = enumerate_group(2, 1, 2);
  auto s = pointwise_stabilizer(g, fixed_space(make({0, 1}, {1, 0}), 2));
  EXPECT_EQ(s.order, 2U);
  EXPECT_EQ(pointwise_stabilizer(g, fixed_space(MonomialElement::identity(2), 2)).order, 1U);
  auto h = enumerate_group(1, 1, 3);
  EXPECT_EQ(pointwise_stabilizer(h, fixed_space(make({1, 0, 2}, {0, 0, 0}), 1)).order, 2U);
}

TEST(ParabolicClasses, Examples) {
  EXPECT_EQ(parabolic_classes(enumerate_group(2, 1, 2)).size(), 4U);
  EXPECT_EQ(parabolic_classes(enumerate_group(1, 1, 3)).size(), 3U);
  EXPECT_EQ(parabolic_classes(enumerate_group(3, 3, 2)).size(), 3U);
}

TEST(ReflectionClasses, Examples) {
  auto a = reflection_subgroup_classes(enumerate_group(2, 1, 2));
  EXPECT_EQ(a.size(), 6U);
  EXPECT_EQ(class_orders(a), (std::vector<std::size_t>{1, 2, 2, 4, 4, 8}));
  EXPECT_EQ(reflection_subgroup_classes(enumerate_group(1, 1, 3)).size(), 3U);
  EXPECT_THROW(reflection_subgroup_classes(enumerate_group(2, 1, 3), 5), ResourceLimit);
}

TEST(ReflectionClasses, TwistedClassesInG1263) {
  auto g = enumerate_group(12, 6, 3);
  auto classes = reflection_subgroup_classes(g);
  std::size_t count = 0;
  for (const auto& c : classes) {
    if (c.member_order != 192) continue;
    auto delta = identify_class(g, representative_handle(g, c));
    if (delta.normalized_triples() == std::vector<FeasibleTriple>{{4, 2, 3}}) ++count;
  }
  EXPECT_EQ(count, 3U);
  auto minimal = minimal_full_valuation(classes, 2, g.order());
  EXPECT_EQ(minimal.size(), 3U);
  for (const auto& c : minimal) EXPECT_EQ(c.member_order, 192U);
}

TEST(MinimalFullValuation, Examples) {
  auto g = enumerate_group(4, 2, 3);
  auto p = minimal_full_valuation(parabolic_classes(g), 2, g.order());
  ASSERT_EQ(p.size(), 1U);
  EXPECT_EQ(p[0].member_order, g.order());

  auto h = enumerate_group(6, 1, 2);
  auto r = minimal_full_valuation(reflection_subgroup_classes(h), 2, h.order());
  ASSERT_EQ(r.size(), 1U);
  EXPECT_EQ(r[0].member_order, 8U);
  EXPECT_EQ(identify_class(h, representative_handle(h, r[0])).normalized_triples(),
            (std::vector<FeasibleTriple>{{2, 1, 2}}));

  auto s = enumerate_group(1, 1, 5);
  auto q = minimal_full_valuation(parabolic_classes(s), 2, s.order());
  ASSERT_EQ(q.size(), 1U);
  EXPECT_EQ(q[0].member_order, 24U);
}

TEST(Conjugacy, Examples) {
  auto s3 = enumerate_group(1, 1, 3);
  auto t1 = by_elements(s3, {make({1, 0, 2}, {0, 0, 0})});
  auto t2 = by_elements(s3, {make({0, 2, 1}, {0, 0, 0})});
  EXPECT_TRUE(are_conjugate(s3, t1, t2));
  EXPECT_TRUE(are_conjugate(s3, t1, t1));

  auto b2 = enumerate_group(2, 1, 2);
  auto diag = by_elements(b2, {make({0, 1}, {1, 0})});
  auto swap = by_elements(b2, {make({1, 0}, {0, 0})});
  EXPECT_FALSE(are_conjugate(b2, diag, swap));
}

TEST(SylowConstruct, Examples) {
  EXPECT_EQ(sylow_construct(enumerate_group(2, 1, 2), 2).order, 8U);
  EXPECT_EQ(sylow_construct(enumerate_group(1, 1, 4), 2).order, 8U);
  EXPECT_EQ(sylow_construct(enumerate_group(9, 3, 2), 3).order, 27U);
}

TEST(SylowConstruct, FullValuationOnSmallGrid) {
  for (std::uint64_t m = 1; m <= 8; ++m)
    for (std::uint64_t p = 1; p <= m; ++p) {
      if (m % p) continue;
      for (std::uint64_t n = 1; n <= 4; ++n) {
        auto order = GroupType::imprimitive(m, p, n).order();
        if (order > 5000 || order == 1) continue;
        auto g = enumerate_group(m, p, n);
        for (auto ell : prime_divisors(order)) {
          auto h = sylow_construct(g, ell);
          ASSERT_EQ(BigInt(h.order), ipow(BigInt(ell), valuation::nu(ell, order)))
              << m << "," << p << "," << n << " ell=" << ell;
        }
      }
    }
}

TEST(IdentifyClass, Examples) {
  auto b2 = enumerate_group(2, 1, 2);
  auto diag = by_elements(b2, {make({0, 1}, {1, 0}), make({0, 1}, {0, 1})});
  EXPECT_EQ(identify_class(b2, diag).normalized_triples(),
            (std::vector<FeasibleTriple>{{2, 1, 1}, {2, 1, 1}}));

  auto g = enumerate_group(6, 1, 3);
  auto sym = by_elements(g, {make({1, 0, 2}, {0, 0, 0}), make({0, 2, 1}, {0, 0, 0})});
  EXPECT_EQ(identify_class(g, sym).normalized_triples(), (std::vector<FeasibleTriple>{{1, 1, 3}}));

  auto cyc = by_elements(b2, {make({1, 0}, {1, 0})});
  EXPECT_THROW(identify_class(b2, cyc), InvalidArgument);
}

// Cross-check against an independent enumeration by integer signed
// permutation matrices.
struct SignedCase {
  int m, p;
  std::size_t n;
  bool reflection_subsets;
};

class SignedMatrixCrossCheck : public ::testing::TestWithParam<SignedCase> {};

TEST_P(SignedMatrixCrossCheck, ClassesAgree) {
  const auto c = GetParam();
  auto ours = enumerate_group(c.m, c.p, c.n);
  auto theirs = testing_oracle::enumerate(c.m, c.p, c.n);
  ASSERT_EQ(ours.order(), theirs.elements.size());
  EXPECT_EQ(ours.reflection_indices().size(), testing_oracle::reflections(theirs).size());

  auto their_parabolic = testing_oracle::classes_of(testing_oracle::parabolic_subgroups(theirs), theirs);
  auto our_parabolic = parabolic_classes(ours);
  ASSERT_EQ(our_parabolic.size(), their_parabolic.size());
  std::vector<std::pair<std::size_t, std::size_t>> a, b;
  for (const auto& k : our_parabolic) a.emplace_back(k.member_order, k.size());
  for (const auto& k : their_parabolic) b.emplace_back(k.representative.size(), k.size);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);

  for (std::uint64_t ell : {2, 3}) {
    if (ours.order() % ell) continue;
    EXPECT_EQ(class_orders(minimal_full_valuation(our_parabolic, ell, ours.order())),
              testing_oracle::minimal_full_orders(their_parabolic, theirs, ell));
  }

  if (!c.reflection_subsets) return;
  auto their_refl = testing_oracle::classes_of(testing_oracle::reflection_subgroups(theirs), theirs);
  auto our_refl = reflection_subgroup_classes(ours);
  a.clear();
  b.clear();
  for (const auto& k : our_refl) a.emplace_back(k.member_order, k.size());
  for (const auto& k : their_refl) b.emplace_back(k.representative.size(), k.size);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  EXPECT_EQ(a, b);
  for (std::uint64_t ell : {2, 3}) {
    if (ours.order() % ell) continue;
    EXPECT_EQ(class_orders(minimal_full_valuation(our_refl, ell, ours.order())),
              testing_oracle::minimal_full_orders(their_refl, theirs, ell));
  }
}

INSTANTIATE_TEST_SUITE_P(SmallGroups, SignedMatrixCrossCheck,
                         ::testing::Values(SignedCase{1, 1, 2, true}, SignedCase{1, 1, 3, true},
                                           SignedCase{1, 1, 4, true}, SignedCase{2, 1, 2, true},
                                           SignedCase{2, 2, 2, true}, SignedCase{2, 1, 3, true},
                                           SignedCase{2, 2, 3, true}, SignedCase{2, 2, 4, true},
                                           SignedCase{2, 1, 4, false}));

}  // namespace
