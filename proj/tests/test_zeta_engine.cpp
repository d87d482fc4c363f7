#include <gtest/gtest.h>

#include <cmath>

#include "zetalab/critical_line.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/eval_config.hpp"
#include "zetalab/zeta_engine.hpp"

using namespace zetalab;

namespace {

void expect_close(Complex got, Complex want, double tol) {
    EXPECT_LE(std::abs(got - want), tol) << "got " << got << " want " << want;
}

}  // namespace

TEST(ZetaEm, ClassicalValues) {
    expect_close(zeta_em(2.0), kPi * kPi / 6.0, 1e-13);
    expect_close(zeta_em(3.0), 1.20205690315959, 1e-12);
    expect_close(zeta_em(0.0), -0.5, 1e-13);
    expect_close(zeta_em(0.5), -1.46035450880959, 1e-12);
    expect_close(zeta_em(-2.0), 0.0, 1e-12);
}

TEST(ZetaEm, OracleValuesOffAxis) {
    expect_close(zeta_em({0.5, 3}), {0.532736670974233, -0.0788965134258334}, 1e-12);
    // left of the strip the raw expansion loses digits; the reflected route does not
    expect_close(zeta_em({-3.5, 2}), {-0.00356097996491907, 0.0426225373147764}, 1e-9);
    expect_close(zeta_functional({-3.5, 2}), {-0.00356097996491907, 0.0426225373147764}, 1e-13);
    expect_close(zeta_em({20, 1}), {1.00000073373399, -6.09617278215394e-7}, 1e-13);
    expect_close(zeta_em({0.75, 40}), {0.827895473591271, -0.707048017985410}, 1e-11);
    expect_close(zeta_em({0.25, 100}), {4.00185196715695, 0.0493028248954795}, 1e-10);
}

TEST(ZetaEm, PoleAndCapability) {
    EXPECT_THROW(zeta_em(1.0), PoleError);
    EXPECT_THROW(zeta_em(-30.0), CapabilityError);
    EXPECT_NO_THROW(zeta_em(Complex(1.0, 1e-3)));
}

TEST(ZetaEm, ConjugateSymmetryIsExact) {
    for (const Complex s : {Complex(0.5, 14.1), Complex(0.2, 33.3), Complex(-1.5, 7), Complex(2, 99)}) {
        expect_close(zeta_em(std::conj(s)), std::conj(zeta_em(s)), 1e-12);
    }
}

TEST(ZetaEm, FixedTruncationHonoured) {
    EvalConfig cfg;
    cfg.truncation_n = 60;
    expect_close(zeta_em({0.5, 30}, cfg), zeta_em({0.5, 30}), 1e-11);
}

TEST(ZetaEta, AgreesWithEulerMaclaurinOnGrid) {
    double worst = 0.0;
    for (const double sigma : {0.25, 0.5, 0.75}) {
        for (int t = 0; t <= 50; ++t) {
            const Complex s(sigma, t);
            worst = std::max(worst, std::abs(zeta_em(s) - zeta_eta(s)));
        }
    }
    EXPECT_LE(worst, 1e-9);
}

TEST(ZetaEta, AgreesUpToTableOrdinates) {
    for (const double t : {60.0, 80.0, 100.0, 120.0, 133.3}) {
        const Complex s(0.5, t);
        EXPECT_LE(std::abs(zeta_em(s) - zeta_eta(s)), 1e-9) << t;
    }
}

TEST(ZetaEta, Examples) {
    expect_close(zeta_eta(2.0), kPi * kPi / 6.0, 1e-13);
    expect_close(zeta_eta(0.5), -1.46035450880959, 1e-12);
    expect_close(zeta_eta(3.0), 1.20205690315959, 1e-12);
}

TEST(ZetaEta, Errors) {
    EXPECT_THROW(zeta_eta(Complex(0.0, 5.0)), DomainError);
    EXPECT_THROW(zeta_eta(Complex(-1.0, 0.0)), DomainError);
    EXPECT_THROW(zeta_eta(Complex(1.0, kTwoPi / std::log(2.0))), DomainError);
    EXPECT_THROW(zeta_eta(Complex(0.5, 1.0), kMaxEtaTerms + 1), CapabilityError);
}

TEST(ZetaFunctional, ContinuationValues) {
    expect_close(zeta_functional(-1.0), -1.0 / 12.0, 1e-13);
    expect_close(zeta_functional(-3.0), 1.0 / 120.0, 1e-13);
    expect_close(zeta_functional(0.5), zeta_em(0.5), 0.0);
    expect_close(zeta_functional({-3.5, 2}), {-0.00356097996491907, 0.0426225373147764}, 1e-12);
    EXPECT_THROW(zeta_functional(1.0), PoleError);
}

TEST(ZetaFunctional, TrivialZeros) {
    for (int k = 1; k <= 10; ++k) EXPECT_LE(std::abs(zeta_functional(-2.0 * k)), 1e-10) << k;
    EXPECT_EQ(std::abs(zeta_functional(-4.0)), 0.0);
}

TEST(ZetaFunctional, EquationResidual) {
    for (const double sigma : {0.2, 0.5, 0.8}) {
        for (const double t : {2.0, 10.0, 30.0}) {
            const Complex s(sigma, t);
            const Complex rhs = functional_factor(s) * zeta_em(1.0 - s);
            EXPECT_LE(std::abs(zeta_em(s) - rhs), 1e-8) << s;
        }
    }
}

TEST(ZetaDerivative, OracleValues) {
    expect_close(zeta_derivative(2.0), -0.937548254315844, 1e-11);
    expect_close(zeta_derivative(0.0), -0.918938533204673, 1e-11);
    expect_close(zeta_derivative({0.3, 7}), {0.0260736372224872, -0.225811238078705}, 1e-10);
    EXPECT_THROW(zeta_derivative(1.0), PoleError);
}

TEST(ZetaDerivative, ConjugationAndFiniteDifference) {
    const Complex s(0.3, 7.0);
    expect_close(zeta_derivative(std::conj(s)), std::conj(zeta_derivative(s)), 1e-12);
    constexpr double h = 1e-5;
    for (const Complex p : {Complex(0.5, 14.0), Complex(0.1, 60.0), Complex(1.5, 99.0), Complex(-1.0, 3.0)}) {
        const Complex fd = (zeta_em(p + h) - zeta_em(p - h)) / (2.0 * h);
        EXPECT_LE(std::abs(zeta_derivative(p) - fd), 1e-6) << p;
    }
}

TEST(ZetaDerivative, SharesTruncationWithValue) {
    const auto both = zeta_em_with_derivative({0.5, 20});
    expect_close(both.value, zeta_em({0.5, 20}), 1e-15);
    expect_close(both.derivative, zeta_derivative({0.5, 20}), 1e-15);
}

TEST(CountZeros, Examples) {
    EXPECT_EQ(count_zeros_rectangle({0.1, 0.9, 1, 10}).count, 0u);
    EXPECT_EQ(count_zeros_rectangle({0.1, 0.9, 1, 20}).count, 1u);
    EXPECT_EQ(count_zeros_rectangle({0.1, 0.9, 1, 50}).count, 10u);
}

TEST(CountZeros, IntegralRoundsCleanly) {
    const auto r = count_zeros_rectangle({0.1, 0.9, 1, 30});
    const Complex winding = r.contour_integral / Complex(0.0, kTwoPi);
    EXPECT_LE(std::abs(winding - static_cast<double>(r.count)), 0.25);
    EXPECT_EQ(r.count, 3u);
    EXPECT_EQ(r.rectangle.t_hi, 30.0);
}

TEST(CountZeros, MatchesScan) {
    for (const double t_hi : {20.0, 30.0, 50.0}) {
        const auto zeros = scan_zeros(0.0, t_hi);
        EXPECT_EQ(count_zeros_rectangle({0.1, 0.9, 1, t_hi}).count, zeros.size()) << t_hi;
    }
}

TEST(CountZeros, Rejections) {
    EXPECT_THROW(count_zeros_rectangle({0.1, 0.9, 0.0, 10}), DomainError);
    EXPECT_THROW(count_zeros_rectangle({0.1, 0.9, -5.0, 10}), DomainError);
    EXPECT_THROW(count_zeros_rectangle({0.9, 0.1, 1.0, 10}), DomainError);
    EXPECT_THROW(count_zeros_rectangle({0.1, 0.9, 1.0, 14.1347251417 + 5e-4}), BoundaryProximityError);
    EXPECT_THROW(count_zeros_rectangle({0.5, 0.9, 10.0, 20.0}), BoundaryProximityError);
}

TEST(EvalConfig, DefaultsAndValidation) {
    EvalConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    EXPECT_EQ(cfg.truncation_for(0.0), 20u);
    EXPECT_EQ(cfg.truncation_for(100.0), 140u);
    cfg.truncation_n = 1;
    EXPECT_THROW(cfg.validate(), DomainError);
    cfg = {};
    cfg.correction_k = 31;
    EXPECT_THROW(cfg.validate(), CapabilityError);
    cfg = {};
    cfg.quad_abs_tol = 0.0;
    EXPECT_THROW(cfg.validate(), DomainError);
}

TEST(EvalConfig, ParseJson) {
    const EvalConfig cfg = parse_eval_config(R"({"truncation_N": 80, "correction_K": 10, "quad_abs_tol": 1e-12})");
    ASSERT_TRUE(cfg.truncation_n.has_value());
    EXPECT_EQ(*cfg.truncation_n, 80u);
    EXPECT_EQ(cfg.correction_k, 10u);
    EXPECT_EQ(cfg.quad_abs_tol, 1e-12);
    EXPECT_FALSE(parse_eval_config(R"({"truncation_N": "auto"})").truncation_n.has_value());
    EXPECT_THROW(parse_eval_config(R"({"truncation_n": 80})"), DomainError);
    EXPECT_THROW(parse_eval_config("[1, 2]"), DomainError);
    EXPECT_THROW(parse_eval_config("{"), DomainError);
    EXPECT_THROW(parse_eval_config(R"({"correction_K": "twelve"})"), DomainError);
}
