#include <gtest/gtest.h>

#include <array>
#include <cmath>

#include "zetalab/critical_line.hpp"
#include "zetalab/errors.hpp"

using namespace zetalab;

namespace {

constexpr std::array<double, 11> kZeros = {
    14.134725141734694, 21.022039638771555, 25.010857580145689, 30.424876125859513,
    32.93506158773919,  37.586178158825671, 40.918719012147495, 43.327073280915,
    48.00515088116716,  49.773832477672302, 52.970321477714461,
};

}  // namespace

TEST(RsTheta, OracleValues) {
    EXPECT_NEAR(rs_theta(1.0), -1.7675479528122904, 1e-12);
    EXPECT_NEAR(rs_theta(10.0), -3.0670743962898953, 1e-12);
    EXPECT_NEAR(rs_theta(14.1347251), -1.7286702635898393, 1e-12);
    EXPECT_NEAR(rs_theta(50.0), 26.46136607016141, 1e-11);
    EXPECT_NEAR(rs_theta(100.0), 87.97216523178722, 1e-10);
    EXPECT_NEAR(rs_theta(200.0), 245.65143509898897, 1e-10);
    EXPECT_EQ(rs_theta(0.0), 0.0);
}

TEST(RsTheta, Odd) {
    for (const double t : {0.3, 2.0, 17.5, 120.0}) EXPECT_NEAR(rs_theta(-t), -rs_theta(t), 1e-12) << t;
}

TEST(ZFunction, OracleValues) {
    const std::array<std::pair<double, double>, 6> cases = {{
        {0.0, -1.4603545088095868},
        {1.0, -0.73630546286731773},
        {5.0, -0.73886342827526476},
        {10.0, -1.5491945461810224},
        {25.0, -0.014872483897970998},
        {50.0, -0.34073500595502498},
    }};
    for (const auto& [t, z] : cases) EXPECT_NEAR(z_function(t).value, z, 1e-10) << t;
}

TEST(ZFunction, RealityWitness) {
    for (const double t : {1.0, 5.0, 10.0, 14.1347, 25.0, 50.0}) EXPECT_LE(z_function(t).imag_witness, 1e-8) << t;
    EXPECT_THROW(z_function(-1.0), DomainError);
}

TEST(ScanZeros, Examples) {
    EXPECT_TRUE(scan_zeros(0.0, 10.0).empty());
    const auto three = scan_zeros(0.0, 30.0);
    ASSERT_EQ(three.size(), 3u);
    EXPECT_NEAR(three[0].t, 14.134725, 1e-6);
    EXPECT_NEAR(three[1].t, 21.022040, 1e-6);
    EXPECT_NEAR(three[2].t, 25.010858, 1e-6);
}

TEST(ScanZeros, FirstTenMatchOracle) {
    const auto zeros = scan_zeros(0.0, 50.0);
    ASSERT_EQ(zeros.size(), 10u);
    for (std::size_t i = 0; i < zeros.size(); ++i) {
        const auto& z = zeros[i];
        EXPECT_NEAR(z.t, kZeros[i], 1e-6) << i;
        EXPECT_LE(z.residual, 1e-8) << i;
        EXPECT_LE(z.bracket_lo, kZeros[i]);
        EXPECT_GE(z.bracket_hi, kZeros[i]);
        EXPECT_LE(z.bracket_hi - z.bracket_lo, 1e-9);
        if (i > 0) EXPECT_GT(z.t, zeros[i - 1].t);
    }
}

TEST(ScanZeros, CoarseGridMissesPair) {
    // a step wider than a zero gap can skip both members of a pair
    const auto coarse = scan_zeros(0.0, 50.0, 3.0);
    EXPECT_LT(coarse.size(), 10u);
}

TEST(ScanZeros, Checked) {
    for (const double hi : {20.0, 30.0, 50.0}) {
        const auto r = scan_zeros_checked(0.0, hi);
        EXPECT_TRUE(r.consistent) << hi;
        EXPECT_EQ(r.rectangle_count, r.candidates.size()) << hi;
    }
    EXPECT_FALSE(scan_zeros_checked(0.0, 50.0, 3.0).consistent);
}

TEST(VerifyClaimedZero, ControlOrdinate) {
    const auto r = verify_claimed_zero(14.1347251417);
    EXPECT_EQ(r.verdict, Verdict::supported);
    EXPECT_LE(r.residual, 1e-8);
    EXPECT_NEAR(r.residual, 2.7517741873775364e-11, 1e-12);
    EXPECT_LE(r.evaluator_agreement, 1e-8);
    EXPECT_EQ(r.threshold, kClaimedZeroThreshold);
}

TEST(VerifyClaimedZero, TabulatedOrdinates) {
    const std::array<std::pair<int, double>, 4> cases = {{
        {2, 2.3238807435129185},
        {3, 2.2051869460867366},
        {5, 1.6075872377043247},
        {97, 0.66058903699913763},
    }};
    for (const auto& [q, abs_zeta] : cases) {
        const double b = kTwoPi * q / std::log(static_cast<double>(q));
        const auto r = verify_claimed_zero(b);
        EXPECT_NEAR(r.residual, abs_zeta, 1e-8) << q;
        EXPECT_LE(r.evaluator_agreement, 1e-8) << q;
        EXPECT_EQ(r.verdict, Verdict::refuted) << q;
    }
}

TEST(VerifyClaimedZero, ReflectionSymmetric) {
    for (const double b : {14.1347251417, 18.1294405673, 40.0}) {
        const auto r = verify_claimed_zero(b);
        double plus = -1.0, minus = -2.0;
        for (const auto& [k, v] : r.inputs) {
            if (k == "abs_zeta_plus_eta") plus = std::stod(v);
            if (k == "abs_zeta_minus") minus = std::stod(v);
        }
        EXPECT_NEAR(plus, minus, 1e-8 + 1e-10 * plus) << b;
    }
}
