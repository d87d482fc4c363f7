#pragma once

#include <cstddef>
#include <vector>

#include "zetalab/claim_record.hpp"
#include "zetalab/eval_config.hpp"
#include "zetalab/zeta_engine.hpp"

namespace zetalab {

/// Riemann-Siegel theta, Im ln Gamma(1/4 + it/2) - (t/2) ln pi; odd in t.
double rs_theta(double t);

struct ZSample {
    double value = 0.0;
    /// |Im(e^{i theta} zeta(1/2 + it))|, which is zero in exact arithmetic.
    double imag_witness = 0.0;
};

/// Hardy Z function. Throws AccuracyError if the witness exceeds 1e-6,
/// DomainError for t < 0.
ZSample z_function(double t, const EvalConfig& cfg = {});

struct ZeroCandidate {
    double t = 0.0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;
    double residual = 0.0;
    unsigned refine_iters = 0;
};

inline constexpr double kDefaultScanStep = 0.05;

/// Sign changes of Z on the grid t_lo + k * step, each refined by bisection
/// to a bracket no wider than 1e-10. Sorted by t.
std::vector<ZeroCandidate> scan_zeros(double t_lo, double t_hi, double step = kDefaultScanStep,
                                      const EvalConfig& cfg = {});

struct CheckedScan {
    std::vector<ZeroCandidate> candidates;
    std::size_t rectangle_count = 0;
    /// false flags a grid step too coarse to separate every zero.
    bool consistent = false;
};

/// scan_zeros plus a cross-check against count_zeros_rectangle over
/// (0.1, 0.9, max(t_lo, 0.5), t_hi).
CheckedScan scan_zeros_checked(double t_lo, double t_hi, double step = kDefaultScanStep,
                               const EvalConfig& cfg = {});

inline constexpr double kClaimedZeroThreshold = 1e-6;

/// Measures |zeta(1/2 + ib)| by two independent evaluators and judges the
/// claim that 1/2 + ib is a zero. Throws AccuracyError when they disagree by
/// more than 1e-6; disagreement above 1e-8 yields an indeterminate verdict.
ClaimRecord verify_claimed_zero(double b, const EvalConfig& cfg = {});

}  // namespace zetalab
