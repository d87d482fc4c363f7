#pragma once

#include <cstddef>

#include "zetalab/eval_config.hpp"
#include "zetalab/numerics_core.hpp"

namespace zetalab {

/// zeta(s) by Euler-Maclaurin summation with Bernoulli corrections up to
/// B_{2K}. Valid for Re(s) > -(2K - 1); throws PoleError at s = 1.
Complex zeta_em(Complex s, const EvalConfig& cfg = {});

struct ZetaWithDerivative {
    Complex value;
    Complex derivative;
};

/// zeta and zeta' from the same truncation, term-differentiated.
ZetaWithDerivative zeta_em_with_derivative(Complex s, const EvalConfig& cfg = {});

/// zeta'(s) via the term-differentiated Euler-Maclaurin expansion.
Complex zeta_derivative(Complex s, const EvalConfig& cfg = {});

/// zeta(s) = eta(s) / (1 - 2^{1-s}) with the alternating series accelerated by
/// the Cohen-Rodriguez Villegas-Zagier weights. Needs Re(s) > 0.
Complex zeta_eta(Complex s, std::size_t terms);

/// Same, with a term count sized for |Im s|.
Complex zeta_eta(Complex s);

/// Term count used by the one-argument zeta_eta.
std::size_t eta_terms_for(Complex s);

/// Largest term count zeta_eta accepts before its weights overflow binary64.
inline constexpr std::size_t kMaxEtaTerms = 380;

/// zeta(s) anywhere except s = 1: Euler-Maclaurin for Re(s) >= 1/2, the
/// reflection zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s) below.
Complex zeta_functional(Complex s, const EvalConfig& cfg = {});

/// The factor 2^s pi^{s-1} sin(pi s / 2) Gamma(1 - s).
Complex functional_factor(Complex s);

struct Rectangle {
    double sigma_lo = 0.0;
    double sigma_hi = 0.0;
    double t_lo = 0.0;
    double t_hi = 0.0;
};

struct ZeroCountResult {
    std::size_t count = 0;
    /// Raw value of the contour integral of zeta'/zeta (not divided by 2 pi i).
    Complex contour_integral;
    Rectangle rectangle;
};

/// Counts zeros inside `rect` by the argument principle.
///
/// Rejects rectangles that reach the real axis (t_lo <= 0), which rules out
/// the pole and the trivial zeros. Throws BoundaryProximityError when a zero
/// lies within 1e-3 of an edge, ToleranceError when the edge quadratures do
/// not converge or the integral does not round cleanly to an integer.
ZeroCountResult count_zeros_rectangle(const Rectangle& rect, const EvalConfig& cfg = {});

}  // namespace zetalab
