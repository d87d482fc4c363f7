#include "zetalab/summation.hpp"

#include <cmath>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

constexpr double kStencilStep = 1e-3;
constexpr double kSecondDerivativeStep = 1e-4;
constexpr double kKernelSplit = 1e-3;
constexpr double kLaurentCutoff = 1e-4;
// Where the kernel itself drops below 1e-16: ln(1e16) / (2 pi).
const double kKernelNegligible = std::log(1e16) / kTwoPi;
constexpr double kHalfLineGiveUp = 200.0;
constexpr double kFiniteDifferenceTol = 1e-6;

QuadOptions options_from(const EvalConfig& cfg) {
    return {cfg.quad_abs_tol, cfg.quad_rel_tol, cfg.max_quad_panels};
}

}  // namespace

std::string_view to_string(MThetaVariant v) {
    switch (v) {
        case MThetaVariant::abel_plana_0: return "abel_plana_0";
        case MThetaVariant::abel_plana_strip: return "abel_plana_strip";
        case MThetaVariant::euler_maclaurin_alt: return "euler_maclaurin_alt";
    }
    return "unknown";
}

Complex Integrand1D::derivative_at(double t) const {
    if (derivative) return derivative(t);
    const double h = kStencilStep;
    const bool near_lo = t < 2.0 * h;
    const bool near_hi = domain == Domain::unit_interval && t > 1.0 - 2.0 * h;
    if (near_lo || near_hi) {
        const double dir = near_lo ? 1.0 : -1.0;
        auto f = [&](int k) { return value(t + dir * k * h); };
        return dir * (-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) / (12.0 * h);
    }
    return (value(t - 2.0 * h) - 8.0 * value(t - h) + 8.0 * value(t + h) - value(t + 2.0 * h)) / (12.0 * h);
}

double em_identity_residual(const Integrand1D& f, const EvalConfig& cfg) {
    const auto opts = options_from(cfg);
    const Complex weighted =
        integrate([&](double t) { return f.derivative_at(t) * (t - 0.5); }, 0.0, 1.0, opts).value;
    const Complex mean = integrate([&](double t) { return f.value(t); }, 0.0, 1.0, opts).value;
    const Complex trapezoid = 0.5 * (f.value(0.0) + f.value(1.0));
    return std::abs(weighted - (trapezoid - mean));
}

Complex revised_em_value(const Integrand1D& f, double t_star, const EvalConfig& cfg) {
    if (!(t_star > 0.0 && t_star < 1.0)) {
        throw DomainError("revised_em: t* must lie strictly inside (0, 1), got " + std::to_string(t_star));
    }
    const auto opts = options_from(cfg);
    auto df = [&](double t) { return f.derivative_at(t); };
    const Complex upper = integrate(df, t_star, 1.0, opts).value;
    const Complex lower = integrate(df, 0.0, t_star, opts).value;
    const Complex mean = integrate([&](double t) { return f.value(t); }, 0.0, 1.0, opts).value;
    const Complex weighted =
        integrate([&](double t) { return f.derivative_at(t) * (t - 0.5); }, 0.0, 1.0, opts).value;
    return 0.5 * (upper - lower) + f.value(t_star) - mean - weighted;
}

double revised_em_residual(const Integrand1D& f, double t_star, const EvalConfig& cfg) {
    return std::abs(revised_em_value(f, t_star, cfg));
}

double todd_kernel(double x) {
    if (!(x > 0.0)) {
        throw DomainError("todd_kernel: simple pole at x = 0, requires x > 0 (got " + std::to_string(x) + ")");
    }
    if (x < kLaurentCutoff) {
        const double u = kTwoPi * x;
        const double u2 = u * u;
        return 1.0 / u - 0.5 + u / 12.0 - u * u2 / 720.0 + u * u2 * u2 / 30240.0;
    }
    return 1.0 / std::expm1(kTwoPi * x);
}

TruncatedSum todd_series(unsigned j, double x, unsigned terms) {
    if (!(x > 0.0)) throw DomainError("todd_series: requires x > 0");
    if (terms < 1) throw DomainError("todd_series: requires at least one term");
    TruncatedSum out;
    // Sum smallest terms first.
    for (unsigned k = terms; k >= 1; --k) {
        const double kd = static_cast<double>(k);
        out.value += std::exp(-kTwoPi * kd * x) / std::pow(kTwoPi * kd, static_cast<double>(j));
    }
    if (j % 2 == 1) out.value = -out.value;
    const double next = static_cast<double>(terms) + 1.0;
    out.tail_bound = std::exp(-kTwoPi * next * x) /
                     (std::pow(kTwoPi * next, static_cast<double>(j)) * -std::expm1(-kTwoPi * x));
    if (out.tail_bound > 1e-12) {
        throw TruncationError("todd_series: tail bound " + std::to_string(out.tail_bound) + " after " +
                              std::to_string(terms) + " terms exceeds 1e-12");
    }
    return out;
}

KernelIntegral kernel_weighted_integral(const std::function<Complex(double)>& g, const EvalConfig& cfg) {
    // A nonzero g(0) against the 1/(2 pi x) pole diverges logarithmically.
    const Complex at_origin = g(1e-12);
    if (!std::isfinite(std::abs(at_origin)) || std::abs(at_origin) > 1e-8) {
        throw DomainError("kernel integral: integrand does not vanish at 0 (|g(0)| ~ " +
                          std::to_string(std::abs(at_origin)) + "), the integral diverges");
    }
    const auto opts = options_from(cfg);
    auto weighted = [&](double x) { return g(x) * todd_kernel(x); };

    KernelIntegral out;
    const auto head = integrate(weighted, 0.0, kKernelSplit, opts);
    const auto body = integrate(weighted, kKernelSplit, kKernelNegligible, opts);
    out.value = head.value + body.value;
    out.error = head.error + body.error;

    // Keep going only while the kernel-weighted integrand still contributes.
    int quiet = 0;
    for (double x = kKernelNegligible; quiet < 2; x += 1.0) {
        if (x > kHalfLineGiveUp) {
            throw DomainError("kernel integral: integrand outgrows e^{2 pi x}; growth condition violated");
        }
        const auto panel = integrate(weighted, x, x + 1.0, opts);
        out.value += panel.value;
        out.error += panel.error;
        quiet = std::abs(panel.value) <= 0.1 * cfg.quad_abs_tol ? quiet + 1 : 0;
    }
    return out;
}

KernelIntegral half_line_integral(const std::function<Complex(double)>& f, const EvalConfig& cfg) {
    auto mapped = [&](double u) {
        const double w = 1.0 - u;
        const Complex v = f(u / w);
        return v == Complex(0.0, 0.0) ? v : v / (w * w);
    };
    const auto r = integrate(mapped, 0.0, 1.0, options_from(cfg));
    return {r.value, r.error};
}

double abel_plana_sum(const HolomorphicFn& f, const EvalConfig& cfg) {
    const Complex i(0.0, 1.0);
    try {
        const Complex head = 0.5 * f(0.0);
        const Complex bulk = half_line_integral([&](double x) { return f(x); }, cfg).value;
        const Complex boundary =
            kernel_weighted_integral([&](double x) { return i * (f(i * x) - f(-i * x)); }, cfg).value;
        return (head + bulk + boundary).real();
    } catch (const ToleranceError& e) {
        throw DomainError(std::string("abel_plana_sum: divergent quadrature, growth condition violated: ") +
                          e.what());
    }
}

double kernel_sine_integral(double a, const EvalConfig& cfg) {
    if (!(a >= 0.0)) throw DomainError("kernel_sine_integral: requires a >= 0");
    if (a == 0.0) return 0.0;
    return kernel_weighted_integral([a](double b) { return Complex(std::sin(a * b), 0.0); }, cfg).value.real();
}

double kernel_sine_closed_form(double a) {
    if (!(a >= 0.0)) throw DomainError("kernel_sine_closed_form: requires a >= 0");
    if (a < 1e-3) {
        const double a2 = a * a;
        return a / 24.0 - a * a2 / 1440.0 + a * a2 * a2 / 60480.0;
    }
    return 0.25 / std::tanh(0.5 * a) - 0.5 / a;
}

double lattice_sum(double theta) {
    const double frac = theta - std::floor(theta);
    return 0.5 * (frac * frac - frac + 1.0 / 6.0);
}

namespace {

MThetaReport m_theta_euler_maclaurin(const StripIntegrand& f, const EvalConfig& cfg) {
    MThetaReport report;
    report.variant = MThetaVariant::euler_maclaurin_alt;
    const double h = kSecondDerivativeStep;

    auto first = [&](double x) -> Complex {
        if (f.first_derivative) return f.first_derivative(x);
        return (f.value(x + h) - f.value(x - h)) / (2.0 * h);
    };
    auto second = [&](double x) -> Complex {
        if (f.second_derivative) return f.second_derivative(x);
        return (f.value(x + h) - 2.0 * f.value(x) + f.value(x - h)) / (h * h);
    };
    report.second_derivative_path =
        f.second_derivative ? DerivativePath::analytic : DerivativePath::finite_difference;

    QuadOptions opts = options_from(cfg);
    if (!f.second_derivative) opts.abs_tol = std::max(opts.abs_tol, kFiniteDifferenceTol);

    // The periodic factor has kinks at the integers, so integrate panel by panel.
    Complex integral = 0.0;
    double error = 0.0;
    int quiet = 0;
    for (std::size_t k = 0; quiet < 3; ++k) {
        if (k >= cfg.max_quad_panels) {
            throw ToleranceError("m_theta: f'' does not decay along the half line");
        }
        const double a = static_cast<double>(k);
        const auto panel = integrate([&](double x) { return lattice_sum(x) * second(x); }, a, a + 1.0, opts);
        integral += panel.value;
        error += panel.error;
        quiet = std::abs(panel.value) <= 0.1 * opts.abs_tol ? quiet + 1 : 0;
    }
    report.value = (first(1.0) - first(0.0)) / 12.0 - integral;
    report.quad_error_estimate = error;
    return report;
}

}  // namespace

MThetaReport m_theta(const StripIntegrand& f, MThetaVariant variant, const EvalConfig& cfg) {
    const Complex i(0.0, 1.0);
    if (variant == MThetaVariant::euler_maclaurin_alt) return m_theta_euler_maclaurin(f, cfg);

    std::function<Complex(double)> g;
    if (variant == MThetaVariant::abel_plana_0) {
        g = [&](double th) { return i * (f.value(i * th) - f.value(-i * th)); };
    } else {
        g = [&](double th) {
            return i * ((f.value(i * th) - f.value(-i * th)) - (f.value(1.0 + i * th) - f.value(1.0 - i * th)));
        };
    }
    try {
        const auto r = kernel_weighted_integral(g, cfg);
        MThetaReport report;
        report.variant = variant;
        report.value = r.value;
        report.quad_error_estimate = r.error;
        return report;
    } catch (const DomainError& e) {
        throw ToleranceError(std::string("m_theta: non-convergent quadrature: ") + e.what());
    }
}

}  // namespace zetalab
