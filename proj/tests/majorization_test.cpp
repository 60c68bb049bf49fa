// Copyright 2026 The Supercat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <random>

#include "supercat/majorization.hpp"
#include "test_support.hpp"

namespace supercat {
namespace {

const SchmidtVector kJpA = make_schmidt({0.4, 0.4, 0.1, 0.1});
const SchmidtVector kJpB = make_schmidt({0.5, 0.25, 0.25, 0.0});

TEST(MakeSchmidt, SortsDescending) {
  const auto v = make_schmidt({0.1, 0.4, 0.4, 0.1});
  EXPECT_EQ(v.to_doubles(), (std::vector<double>{0.4, 0.4, 0.1, 0.1}));
}

TEST(MakeSchmidt, SeparableAndTrailingZero) {
  EXPECT_EQ(make_schmidt({1.0}).to_doubles(), std::vector<double>{1.0});
  EXPECT_EQ(kJpB.to_doubles(), (std::vector<double>{0.5, 0.25, 0.25, 0.0}));
}

TEST(MakeSchmidt, ClampsTinyNegativesAndRenormalizes) {
  const auto v = make_schmidt({0.5 + 5e-10, 0.5, -5e-10});
  EXPECT_EQ(v[2], 0.0);
  EXPECT_NEAR(v[0] + v[1] + v[2], 1.0, 1e-15);
}

TEST(MakeSchmidt, Errors) {
  EXPECT_THROW(make_schmidt({0.6, 0.5, -0.1}), NegativeEntry);
  EXPECT_THROW(make_schmidt({0.6, 0.5}), NotNormalized);
  EXPECT_THROW(make_schmidt(std::vector<double>{}), InputError);
}

TEST(ParseRational, DecimalsAndFractions) {
  EXPECT_EQ(parse_rational("0.41"), Rational(41, 100));
  EXPECT_EQ(parse_rational("2/3"), Rational(2, 3));
  EXPECT_EQ(parse_rational(" 1e-4 "), Rational(1, 10000));
  EXPECT_EQ(parse_rational("-1.5e1"), Rational(-15));
  EXPECT_EQ(format_rational(Rational(5, 8)), "5/8");
  EXPECT_THROW(parse_rational("1/0"), InputError);
  EXPECT_THROW(parse_rational("abc"), InputError);
  EXPECT_THROW(parse_double("0.4x"), InputError);
}

TEST(ParseSchmidt, ExactVectorSumsToOne) {
  const auto v = parse_schmidt<Rational>("0.41,0.38,0.12,0.09");
  EXPECT_EQ(v[0] + v[1] + v[2] + v[3], Rational(1));
  EXPECT_EQ(v[3], Rational(9, 100));
}

TEST(PartialSum, Examples) {
  EXPECT_DOUBLE_EQ(partial_sum(kJpA, 2), 0.8);
  EXPECT_EQ(partial_sum(kJpB, 4), 1.0);
  EXPECT_DOUBLE_EQ(partial_sum(make_schmidt({0.5, 0.5}), 1), 0.5);
  EXPECT_THROW(partial_sum(kJpA, 0), IndexOutOfRange);
  EXPECT_THROW(partial_sum(kJpA, 5), IndexOutOfRange);
}

TEST(Majorizes, Examples) {
  EXPECT_FALSE(majorizes(kJpB, kJpA));
  EXPECT_EQ(first_majorization_violation(kJpB, kJpA), std::optional<std::size_t>(2));
  EXPECT_TRUE(majorizes(kJpA, kJpA));
  EXPECT_TRUE(majorizes(make_schmidt({1.0, 0, 0, 0}), make_schmidt({0.25, 0.25, 0.25, 0.25})));
}

TEST(Majorizes, PadsShorterVector) {
  EXPECT_TRUE(majorizes(make_schmidt({1.0}), kJpA));
  EXPECT_FALSE(majorizes(make_schmidt({0.5, 0.5}), make_schmidt({0.6, 0.2, 0.2})));
}

TEST(NielsenConvertible, Examples) {
  EXPECT_TRUE(nielsen_convertible(make_schmidt({0.25, 0.25, 0.25, 0.25}), kJpB));
  EXPECT_FALSE(nielsen_convertible(kJpA, kJpB));
  EXPECT_TRUE(nielsen_convertible(kJpB, kJpB));
}

TEST(Kron, Examples) {
  const auto v = make_schmidt({0.6, 0.4});
  EXPECT_EQ(kron(make_schmidt({1.0}), v), v);
  // Enumerated by hand: 0.5*0.6, 0.5*0.4, 0.25*0.6 (x2), 0.25*0.4 (x2), 0, 0.
  const std::vector<double> expected{0.3, 0.2, 0.15, 0.15, 0.1, 0.1, 0.0, 0.0};
  const auto k = kron(kJpB, v).to_doubles();
  ASSERT_EQ(k.size(), expected.size());
  for (std::size_t i = 0; i < k.size(); ++i) EXPECT_NEAR(k[i], expected[i], 1e-15);
  const auto half = make_schmidt({0.5, 0.5});
  EXPECT_EQ(kron(half, half).to_doubles(), (std::vector<double>{0.25, 0.25, 0.25, 0.25}));
}

TEST(Kron, ExactProducts) {
  const auto b = parse_schmidt<Rational>("1/2,1/4,1/4,0");
  const auto c = parse_schmidt<Rational>("3/5,2/5");
  const auto k = kron(b, c);
  EXPECT_EQ(k[0], Rational(3, 10));
  EXPECT_EQ(k[4], Rational(1, 10));
  EXPECT_EQ(k[7], Rational(0));
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(make_schmidt({1.0, 0.0})), 0.0);
  EXPECT_DOUBLE_EQ(entropy(make_schmidt({0.5, 0.5})), 1.0);
  // -0.8 log2 0.4 - 0.2 log2 0.1
  EXPECT_NEAR(entropy(kJpA), 1.7219280948873623, 1e-12);
  EXPECT_DOUBLE_EQ(entropy(kJpB), 1.5);
}

TEST(BinaryEntropy, Examples) {
  EXPECT_DOUBLE_EQ(binary_entropy(0.5), 1.0);
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.6), 0.9709505944546686, 1e-12);
  EXPECT_THROW(binary_entropy(1.2), DomainError);
  EXPECT_THROW(binary_entropy(-0.1), DomainError);
}

TEST(SchmidtRank, Examples) {
  EXPECT_EQ(schmidt_rank(kJpB), 3u);
  EXPECT_EQ(schmidt_rank(make_schmidt({1.0, 0, 0})), 1u);
  EXPECT_EQ(schmidt_rank(kJpA), 4u);
  EXPECT_EQ(schmidt_rank(parse_schmidt<Rational>("1/2,1/4,1/4,0")), 3u);
}

TEST(SplitPartialSum, Examples) {
  const auto c = make_schmidt({0.6, 0.4});
  EXPECT_NEAR(split_partial_sum(kJpA, c, 2, 0), 0.48, 1e-15);
  EXPECT_NEAR(split_partial_sum(kJpA, c, 4, 4), 1.0, 1e-15);
  EXPECT_NEAR(split_partial_sum(kJpB, c, 2, 1), 0.65, 1e-15);
  EXPECT_NEAR(partial_sum(kron(kJpB, c), 3), 0.65, 1e-15);
  EXPECT_THROW(split_partial_sum(kJpA, c, 1, 2), IndexOutOfRange);
  EXPECT_THROW(split_partial_sum(kJpA, c, 5, 0), IndexOutOfRange);
  EXPECT_THROW(split_partial_sum(kJpA, kJpA, 1, 0), InputError);
}

// ---- properties on random vectors -------------------------------------------

class RandomVectors : public ::testing::Test {
 protected:
  std::mt19937_64 rng{20260101};
};

TEST_F(RandomVectors, PartialSumsNonDecreasingAndEndAtOne) {
  for (int t = 0; t < 200; ++t) {
    const auto v = testing::random_schmidt(rng, 1 + t % 9);
    for (std::size_t k = 1; k < v.size(); ++k) EXPECT_LE(partial_sum(v, k), partial_sum(v, k + 1));
    EXPECT_EQ(partial_sum(v, v.size()), 1.0);
  }
}

TEST_F(RandomVectors, MajorizationMatchesBruteForce) {
  for (int t = 0; t < 500; ++t) {
    const auto a = testing::random_schmidt(rng, 2 + t % 5);
    const auto b = testing::random_schmidt(rng, 2 + (t / 5) % 5);
    EXPECT_EQ(majorizes(b, a), testing::brute_majorizes(b.to_doubles(), a.to_doubles()));
  }
}

TEST_F(RandomVectors, MajorizationIsAPreorder) {
  for (int t = 0; t < 300; ++t) {
    const auto u = testing::random_schmidt(rng, 4);
    const auto v = testing::random_schmidt(rng, 4);
    const auto w = testing::random_schmidt(rng, 4);
    EXPECT_TRUE(majorizes(u, u));
    if (majorizes(u, v) && majorizes(v, w)) EXPECT_TRUE(majorizes(u, w));
    if (majorizes(u, v) && majorizes(v, u)) EXPECT_TRUE(same_ordered_vector(u, v, {}));
  }
}

TEST_F(RandomVectors, KronMatchesEnumeration) {
  for (int t = 0; t < 100; ++t) {
    const auto u = testing::random_schmidt(rng, 1 + t % 4);
    const auto v = testing::random_schmidt(rng, 1 + t % 3);
    auto expected = testing::brute_kron(u.to_doubles(), v.to_doubles());
    std::sort(expected.begin(), expected.end(), std::greater<>());
    EXPECT_EQ(kron(u, v).to_doubles(), expected);
  }
}

TEST_F(RandomVectors, EntropyAdditiveAndRankMultiplicative) {
  for (int t = 0; t < 300; ++t) {
    auto raw_u = testing::random_schmidt(rng, 1 + t % 5).to_doubles();
    auto raw_v = testing::random_schmidt(rng, 1 + t % 4).to_doubles();
    if (t % 3 == 0) {
      raw_u.push_back(0.0);  // rank below dimension
    }
    const auto u = make_schmidt(raw_u);
    const auto v = make_schmidt(raw_v);
    EXPECT_NEAR(entropy(kron(u, v)), entropy(u) + entropy(v), 1e-10);
    EXPECT_EQ(schmidt_rank(kron(u, v)), schmidt_rank(u) * schmidt_rank(v));
  }
}

TEST_F(RandomVectors, StrictSchurConcavity) {
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const auto a = testing::random_schmidt(rng, 3);
    const auto b = testing::random_schmidt(rng, 3);
    if (majorizes(b, a) && !same_ordered_vector(a, b, {})) {
      EXPECT_GT(entropy(a), entropy(b));
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST_F(RandomVectors, SplitSumDominanceWithEqualityAtSomeSplit) {
  for (int t = 0; t < 200; ++t) {
    const auto u = testing::random_schmidt(rng, 4);
    const auto c = testing::random_schmidt(rng, 2);
    const auto uc = kron(u, c);
    for (std::size_t k = 1; k <= uc.size(); ++k) {
      const double fk = partial_sum(uc, k);
      bool attained = false;
      for (std::size_t k2 = 0; 2 * k2 <= k; ++k2) {
        const std::size_t k1 = k - k2;
        if (k1 > u.size()) continue;
        const double s = split_partial_sum(u, c, k1, k2);
        EXPECT_LE(s, fk + 1e-12);
        attained = attained || std::abs(s - fk) <= 1e-12;
      }
      EXPECT_TRUE(attained) << "k=" << k;
    }
  }
}

TEST(ExactMode, TiesAreDecidedExactly) {
  // f_k equal at every k: float rounding may not see it, rationals do.
  const auto a = parse_schmidt<Rational>("1/3,1/3,1/3");
  EXPECT_TRUE(majorizes(a, a, ComparisonPolicy::exact()));
  const auto b = parse_schmidt<Rational>("0.34,0.33,0.33");
  EXPECT_TRUE(majorizes(b, a));
  EXPECT_FALSE(majorizes(a, b));
}

}  // namespace
}  // namespace supercat
