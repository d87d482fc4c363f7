#include "zetalab/critical_line.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

namespace zetalab {

namespace {

constexpr double kBracketWidth = 1e-10;
constexpr double kWitnessLimit = 1e-6;
constexpr double kAgreementRequired = 1e-8;
constexpr double kAgreementFatal = 1e-6;
const double kLogPi = std::log(kPi);

}  // namespace

double rs_theta(double t) {
    if (t < 0.0) return -rs_theta(-t);
    if (t == 0.0) return 0.0;
    return log_gamma(Complex(0.25, 0.5 * t)).imag() - 0.5 * t * kLogPi;
}

ZSample z_function(double t, const EvalConfig& cfg) {
    if (!(t >= 0.0)) throw DomainError("z_function: requires t >= 0");
    const Complex rotated = std::polar(1.0, rs_theta(t)) * zeta_em(Complex(0.5, t), cfg);
    ZSample out{rotated.real(), std::abs(rotated.imag())};
    if (out.imag_witness > kWitnessLimit) {
        throw AccuracyError("z_function: imaginary witness " + std::to_string(out.imag_witness) + " at t = " +
                            std::to_string(t));
    }
    return out;
}

std::vector<ZeroCandidate> scan_zeros(double t_lo, double t_hi, double step, const EvalConfig& cfg) {
    if (!(t_lo >= 0.0) || !(t_hi > t_lo)) throw DomainError("scan_zeros: requires 0 <= t_lo < t_hi");
    if (!(step > 0.0)) throw DomainError("scan_zeros: requires step > 0");
    cfg.validate();

    const auto intervals = static_cast<std::size_t>(std::ceil((t_hi - t_lo) / step));
    std::vector<double> grid(intervals + 1);
    for (std::size_t k = 0; k < intervals; ++k) grid[k] = t_lo + static_cast<double>(k) * step;
    grid[intervals] = t_hi;

    const std::size_t workers = worker_count();
    std::vector<double> z(grid.size());
    parallel_for(grid.size(), workers, [&](std::size_t k) { z[k] = z_function(grid[k], cfg).value; });

    // Brackets between consecutive nonzero samples of opposite sign.
    std::vector<std::pair<double, double>> brackets;
    std::size_t prev = grid.size();
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (z[k] == 0.0) continue;
        if (prev != grid.size() && std::signbit(z[prev]) != std::signbit(z[k])) {
            brackets.emplace_back(grid[prev], grid[k]);
        }
        prev = k;
    }

    std::vector<ZeroCandidate> out(brackets.size());
    parallel_for(brackets.size(), workers, [&](std::size_t i) {
        double lo = brackets[i].first;
        double hi = brackets[i].second;
        bool lo_negative = std::signbit(z_function(lo, cfg).value);
        unsigned iters = 0;
        while (hi - lo > kBracketWidth && iters < cfg.max_refine_iters) {
            const double mid = 0.5 * (lo + hi);
            const double zm = z_function(mid, cfg).value;
            ++iters;
            if (zm == 0.0) {
                lo = std::nextafter(mid, lo);
                hi = std::nextafter(mid, hi);
                break;
            }
            if (std::signbit(zm) == lo_negative) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        ZeroCandidate& c = out[i];
        c.bracket_lo = lo;
        c.bracket_hi = hi;
        c.t = 0.5 * (lo + hi);
        c.refine_iters = iters;
        c.residual = std::abs(zeta_em(Complex(0.5, c.t), cfg));
    });
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    return out;
}

CheckedScan scan_zeros_checked(double t_lo, double t_hi, double step, const EvalConfig& cfg) {
    CheckedScan out;
    out.candidates = scan_zeros(t_lo, t_hi, step, cfg);
    const Rectangle rect{0.1, 0.9, std::max(t_lo, 0.5), t_hi};
    out.rectangle_count = count_zeros_rectangle(rect, cfg).count;
    out.consistent = out.rectangle_count == out.candidates.size();
    return out;
}

ClaimRecord verify_claimed_zero(double b, const EvalConfig& cfg) {
    if (!(b > 0.0)) throw DomainError("verify_claimed_zero: requires b > 0");
    const Complex s(0.5, b);
    const Complex by_em = zeta_em(s, cfg);
    const Complex by_eta = zeta_eta(s);
    const Complex mirrored = zeta_em(std::conj(s), cfg);

    ClaimRecord record;
    record.claim_id = "claimed-zero";
    record.add_input("b", b);
    record.add_input("s", format_complex(s));
    record.computed = by_em;
    record.asserted = "zeta(1/2 + ib) = 0 and zeta(1/2 - ib) = 0";
    record.residual = std::abs(by_em);
    record.threshold = kClaimedZeroThreshold;
    record.evaluator_agreement = std::abs(by_em - by_eta);
    record.add_input("abs_zeta_plus_eta", std::abs(by_eta));
    record.add_input("abs_zeta_minus", std::abs(mirrored));

    if (record.evaluator_agreement > kAgreementFatal) {
        throw AccuracyError("verify_claimed_zero: evaluators disagree by " +
                            std::to_string(record.evaluator_agreement) + " at b = " + std::to_string(b));
    }
    record.decide();
    if (record.evaluator_agreement > kAgreementRequired) {
        record.verdict = Verdict::indeterminate;
        record.note = "Euler-Maclaurin and eta evaluators disagree beyond 1e-8";
    }
    return record;
}

}  // namespace zetalab
