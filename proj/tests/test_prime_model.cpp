#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "zetalab/errors.hpp"
#include "zetalab/numerics_core.hpp"
#include "zetalab/prime_model.hpp"

using namespace zetalab;

namespace {

bool trial_division(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST(Sieve, SmallLimits) {
    EXPECT_TRUE(sieve_primes(0).empty());
    EXPECT_TRUE(sieve_primes(2).empty());
    EXPECT_EQ(sieve_primes(3), (std::vector<std::uint64_t>{2}));
    const std::vector<std::uint64_t> first25 = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    EXPECT_EQ(sieve_primes(100), first25);
}

TEST(Sieve, MatchesTrialDivision) {
    const auto primes = sieve_primes(10000);
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 0; n < 10000; ++n)
        if (trial_division(n)) expected.push_back(n);
    EXPECT_EQ(primes, expected);
}

TEST(Sieve, SegmentedPath) {
    const auto primes = sieve_primes(2'000'000);
    EXPECT_EQ(primes.size(), 148933u);
    EXPECT_EQ(primes.back(), 1999993u);
    const auto flat = sieve_primes(999'999);
    ASSERT_LT(flat.size(), primes.size());
    EXPECT_TRUE(std::equal(flat.begin(), flat.end(), primes.begin()));
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::uint64_t> pick(0, primes.size() - 1);
    for (int i = 0; i < 200; ++i) EXPECT_TRUE(trial_division(primes[pick(rng)]));
}

TEST(Sieve, Capability) {
    EXPECT_THROW(sieve_primes(kSieveCap + 1), CapabilityError);
    PrimeTable table(50);
    EXPECT_TRUE(table.is_prime(47));
    EXPECT_FALSE(table.is_prime(49));
    EXPECT_FALSE(table.is_prime(1));
    EXPECT_THROW(table.is_prime(50), CapabilityError);
}

TEST(TwinPairs, Examples) {
    using P = std::pair<std::uint64_t, std::uint64_t>;
    EXPECT_EQ(twin_pairs(10), (std::vector<P>{{3, 5}, {5, 7}}));
    EXPECT_EQ(twin_pairs(100),
              (std::vector<P>{{3, 5}, {5, 7}, {11, 13}, {17, 19}, {29, 31}, {41, 43}, {59, 61}, {71, 73}}));
    EXPECT_TRUE(twin_pairs(2).empty());
}

TEST(Fraction, Reduced) {
    const Fraction f(6, -4);
    EXPECT_EQ(f.num, -3);
    EXPECT_EQ(f.den, 2);
    EXPECT_EQ(Fraction(1, 3) + Fraction(1, 6), Fraction(1, 2));
    EXPECT_EQ(Fraction(2, 3) * Fraction(3, 2), Fraction(1));
    EXPECT_TRUE(Fraction(4, 2).is_integer());
    EXPECT_THROW(Fraction(1, 0), DomainError);
}

TEST(Formulas, Examples) {
    EXPECT_NEAR(b_of(2, 2), 4.0 * kPi / std::log(2.0), 1e-12);
    EXPECT_NEAR(b_of(2, 2), 18.129440567308775, 1e-12);
    EXPECT_NEAR(b_of(3, 3), 17.157605204280764, 1e-12);
    EXPECT_NEAR(q_of(2, 2), 2.0, 1e-15);
    EXPECT_NEAR(q_of(4, 2), 16.0, 1e-12);
    EXPECT_NEAR(q_of_b(kTwoPi, 0.0), std::exp(1.0), 1e-14);
    EXPECT_NEAR(q_of_b(kTwoPi, 1.0), 15.154262241479264, 1e-11);
    EXPECT_NEAR(gamma_of(4, 2), 8.0, 1e-12);
    EXPECT_THROW(b_of(1, 2), DomainError);
    EXPECT_THROW(q_of(1, 2), DomainError);
    EXPECT_THROW(q_of(2, 0), DomainError);
    EXPECT_THROW(q_of_b(0.0, 1.0), DomainError);
}

TEST(Formulas, QMonotoneAndBounded) {
    double prev = INFINITY;
    for (double b = 5.0; b <= 500.0; b += 5.0) {
        const double q = q_of_b(b, 1.0);
        EXPECT_LT(q, prev);
        EXPECT_GE(q, 1.0);
        prev = q;
    }
    EXPECT_NEAR(q_of_b(1e6, 1.0), 1.0, 1e-5);
    EXPECT_NEAR(q_of(5, 1'000'000), 1.0, 1e-5);
    for (std::int64_t n = 2; n < 40; ++n)
        for (std::int64_t g = 1; g < 40; ++g) EXPECT_GE(q_of(n, g), 1.0);
}

TEST(Formulas, ConsistencyChain) {
    // q_of(n, gamma) == q_of_b(b_of(n, gamma), gamma) up to rounding
    for (std::int64_t n : {2, 3, 7, 13}) {
        for (std::int64_t g : {1, 2, 5, 13}) {
            const double direct = q_of(n, g);
            const double via_b = q_of_b(b_of(n, g), static_cast<double>(g));
            EXPECT_NEAR(via_b / direct, 1.0, 1e-10) << n << "," << g;
        }
    }
}

TEST(Formulas, GammaInvertsQ) {
    for (std::int64_t n : {2, 3, 7, 13}) {
        EXPECT_NEAR(gamma_of(n, n), static_cast<double>(n), 1e-12);
        for (std::int64_t q : {2, 5, 11}) {
            const double g = gamma_of(n, q);
            EXPECT_NEAR(std::pow(static_cast<double>(n), n / g), static_cast<double>(q), 1e-9 * q) << n << "," << q;
        }
    }
}

TEST(Relations, DeltaQ) {
    PrimeRelationRow row{.q = 5, .n = 5, .gamma = 5, .delta_q = 2, .delta_n = 2, .delta_gamma = 2};
    const auto c = delta_q_relation(row);
    EXPECT_TRUE(c.consistent);
    EXPECT_NEAR(c.lhs, 0.4, 1e-15);
    EXPECT_LE(c.residual, kRelationTolerance);

    PrimeRelationRow off{.q = 7, .n = 5, .gamma = 4, .delta_q = 1, .delta_n = 0, .delta_gamma = 0};
    const auto d = delta_q_relation(off);
    EXPECT_FALSE(d.consistent);
    EXPECT_GT(d.residual, 0.1);
}

TEST(Relations, Twin) {
    const auto plus = twin_relation_residual(3, 3, 3, 2, 2, +1);
    EXPECT_TRUE(plus.consistent);
    EXPECT_NEAR(plus.lhs, 2.0 / 3.0, 1e-15);
    const auto minus = twin_relation_residual(5, 5, 5, -2, -2, -1);
    EXPECT_TRUE(minus.consistent);
    const auto generic = twin_relation_residual(7, 5, 4, 1, 0, +1);
    EXPECT_FALSE(generic.consistent);
    EXPECT_GT(generic.residual, 1e-3);
}

TEST(Relations, DeltaGamma) {
    EXPECT_NEAR(twin_delta_gamma(3, 3, 2, +1), 6.0177030305898942, 1e-12);
    const auto r = delta_gamma_relation(3, 3, 2, 2, +1);
    EXPECT_FALSE(r.consistent);
    EXPECT_EQ(r.lhs, 2.0);
    EXPECT_NEAR(r.rhs, 6.0177030305898942, 1e-12);
    EXPECT_NEAR(r.residual, 4.0177030305898942, 1e-12);
}

TEST(ChiModel, Examples) {
    const auto five = chi_model(5, 2);
    EXPECT_TRUE(five.candidate);
    EXPECT_EQ(five.chi, Fraction(1));
    EXPECT_EQ(five.delta, Fraction(5, 2));
    EXPECT_EQ(five.lambda, Fraction(5));
    EXPECT_EQ(five.lower, 5);
    EXPECT_EQ(five.upper, 7);
    EXPECT_TRUE(five.is_twin);

    const auto composite = chi_model(35, 2);
    EXPECT_TRUE(composite.candidate);
    EXPECT_EQ(composite.lower, 35);
    EXPECT_EQ(composite.upper, 37);
    EXPECT_FALSE(composite.is_twin);

    const auto fractional = chi_model(10, 2);
    EXPECT_FALSE(fractional.candidate);
    EXPECT_EQ(fractional.chi, Fraction(11, 6));

    EXPECT_THROW(chi_model(5, 0), DomainError);
}

TEST(ChiModel, TwinsBelowHundred) {
    PrimeTable table(100);
    const auto rows = chi_candidates(table, 100);
    std::size_t twins = 0;
    for (const auto& r : rows) {
        EXPECT_TRUE(r.candidate);
        EXPECT_EQ(r.upper - r.lower, 2);
        twins += r.is_twin ? 1 : 0;
    }
    EXPECT_EQ(twins, 7u);
}

TEST(RowBuilders, Shapes) {
    PrimeTable table(100);
    EXPECT_EQ(prime_rows(table, 100).size(), 25u);
    const auto diffs = difference_rows(table, 100, 3);
    ASSERT_EQ(diffs.size(), 25u);
    for (const auto& r : diffs) {
        EXPECT_EQ(r.delta_q, r.q - 3);
        EXPECT_LE(delta_q_relation(r).residual, 1e-12) << r.q;
    }
    EXPECT_EQ(twin_rows(100, +1).size(), 8u);
    EXPECT_EQ(twin_rows(100, -1).size(), 8u);
    EXPECT_EQ(twin_rows(100, -1).front().q, 5);
}

TEST(Counters, Increase) {
    auto& c = formula_counters();
    const auto before = c.q_of.load();
    (void)q_of(3, 3);
    EXPECT_GT(c.q_of.load(), before);
    const auto chi_before = c.chi_model.load();
    (void)chi_model(5, 2);
    EXPECT_GT(c.chi_model.load(), chi_before);
}
