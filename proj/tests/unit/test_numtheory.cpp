#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace setcirc;

namespace {

bool pairwise_coprime(const std::vector<Natural>& base)
{
    for (std::size_t i = 0; i < base.size(); ++i)
        for (std::size_t j = i + 1; j < base.size(); ++j)
            if (gcd(base[i], base[j]) != 1)
                return false;
    return true;
}

Natural rebuild(const std::vector<Natural>& base, const std::vector<std::uint64_t>& e)
{
    Natural p = 1;
    for (std::size_t j = 0; j < base.size(); ++j)
        for (std::uint64_t k = 0; k < e[j]; ++k)
            p *= base[j];
    return p;
}

void expect_valid_basis(const std::vector<Natural>& nums, const GcdFreeBasis& b)
{
    ASSERT_TRUE(pairwise_coprime(b.base));
    ASSERT_TRUE(std::is_sorted(b.base.begin(), b.base.end()));
    ASSERT_EQ(b.exponents.size(), nums.size());
    for (const auto& q : b.base)
        ASSERT_GE(q, 2);
    for (std::size_t i = 0; i < nums.size(); ++i)
        ASSERT_EQ(rebuild(b.base, b.exponents[i]), nums[i]);
}

} // namespace

TEST(Gcd, Examples)
{
    EXPECT_EQ(gcd(12, 18), 6);
    EXPECT_EQ(gcd(0, 7), 7);
    EXPECT_EQ(gcd(0, 0), 0);
    Natural f = (Natural(1) << 64) + 1; // 274177 × 67280421310721
    EXPECT_EQ(gcd(f, 274177), 274177);
}

TEST(Gcd, AgainstTrialDivision)
{
    for (std::uint64_t a = 0; a < 60; ++a)
        for (std::uint64_t b = 0; b < 60; ++b) {
            std::uint64_t best = 0;
            for (std::uint64_t d = 1; d <= std::max(a, b); ++d)
                if (a % d == 0 && b % d == 0)
                    best = d;
            ASSERT_EQ(gcd(a, b), best) << a << " " << b;
        }
}

TEST(Primes, Upto)
{
    EXPECT_EQ(primes_upto(10), (std::vector<std::uint64_t>{2, 3, 5, 7}));
    EXPECT_EQ(primes_upto(2), (std::vector<std::uint64_t>{2}));
    EXPECT_TRUE(primes_upto(1).empty());
    auto p = primes_upto(100);
    EXPECT_EQ(p.size(), 25u);
    EXPECT_EQ(p.back(), 97u);
    auto big = primes_upto(5000);
    for (std::uint64_t n = 0; n <= 5000; ++n)
        ASSERT_EQ(std::binary_search(big.begin(), big.end(), n), testsupport::trial_division_prime(n)) << n;
    EXPECT_THROW(primes_upto(20'000'000), BudgetExceeded);
    EXPECT_EQ(first_primes(5), (std::vector<std::uint64_t>{2, 3, 5, 7, 11}));
}

TEST(Factorize, Examples)
{
    EXPECT_EQ(factorize(12).factors, (std::vector<std::pair<Natural, std::uint64_t>>{{2, 2}, {3, 1}}));
    EXPECT_TRUE(factorize(1).factors.empty());
    auto f = factorize(9699690);
    ASSERT_EQ(f.factors.size(), 8u);
    auto p = primes_upto(19);
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_EQ(f.factors[i].first, p[i]);
        EXPECT_EQ(f.factors[i].second, 1u);
    }
    EXPECT_THROW(factorize(0), DomainError);
}

TEST(Factorize, ReconstructsRange)
{
    for (std::uint64_t n = 1; n <= 100000; ++n) {
        auto f = factorize(n);
        ASSERT_EQ(f.product(), n);
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            ASSERT_TRUE(testsupport::trial_division_prime(static_cast<std::uint64_t>(f.factors[i].first)));
            ASSERT_GE(f.factors[i].second, 1u);
            if (i) {
                ASSERT_LT(f.factors[i - 1].first, f.factors[i].first);
            }
        }
    }
}

TEST(Factorize, BudgetOnLargePrimeProduct)
{
    // product of two primes just above the trial limit
    Natural big = Natural(1000003) * Natural(1000033);
    EXPECT_THROW(factorize(big, 1000), BudgetExceeded);
    EXPECT_EQ(factorize(big).product(), big);
}

TEST(GcdFreeBasis, Examples)
{
    auto b = gcd_free_basis({6, 10, 15});
    EXPECT_EQ(b.base, (std::vector<Natural>{2, 3, 5}));
    EXPECT_EQ(b.exponents[0], (std::vector<std::uint64_t>{1, 1, 0}));
    EXPECT_EQ(b.exponents[1], (std::vector<std::uint64_t>{1, 0, 1}));
    EXPECT_EQ(b.exponents[2], (std::vector<std::uint64_t>{0, 1, 1}));
    auto b2 = gcd_free_basis({4, 8});
    EXPECT_EQ(b2.base, (std::vector<Natural>{2}));
    EXPECT_EQ(b2.exponents[0], (std::vector<std::uint64_t>{2}));
    EXPECT_EQ(b2.exponents[1], (std::vector<std::uint64_t>{3}));
    auto b3 = gcd_free_basis({7});
    EXPECT_EQ(b3.base, (std::vector<Natural>{7}));
    EXPECT_THROW(gcd_free_basis({3, 0}), DomainError);
    expect_valid_basis({1, 1}, gcd_free_basis({1, 1}));
}

TEST(GcdFreeBasis, NotNecessarilyPrime)
{
    // coprime composites may stay as they are; only the properties are required
    auto b = gcd_free_basis({6, 35});
    expect_valid_basis({6, 35}, b);
}

TEST(GcdFreeBasis, RandomMultisets)
{
    Rng rng(2024);
    for (int i = 0; i < 1000; ++i) {
        std::vector<Natural> nums;
        std::size_t k = rng.between(1, 6);
        for (std::size_t j = 0; j < k; ++j)
            nums.emplace_back(rng.between(1, 1'000'000));
        auto b = gcd_free_basis(nums);
        expect_valid_basis(nums, b);
        if (HasFatalFailure())
            return;
    }
}

TEST(ExponentsOverBasis, Examples)
{
    EXPECT_EQ(exponents_over_basis(12, std::vector<Natural>{2, 3}), (std::vector<std::uint64_t>{2, 1}));
    EXPECT_EQ(exponents_over_basis(1, std::vector<Natural>{5, 7}), (std::vector<std::uint64_t>{0, 0}));
    EXPECT_FALSE(exponents_over_basis(10, std::vector<Natural>{2, 3}).has_value());
}
