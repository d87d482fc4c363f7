#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "zetalab/eval_config.hpp"
#include "zetalab/numerics_core.hpp"

namespace zetalab {

enum class Domain { unit_interval, half_line };

/// A real-parameter, complex-valued integrand with an optional analytic
/// derivative. When the derivative is absent a fourth-order difference
/// stencil is used (one-sided near the ends of the unit interval).
struct Integrand1D {
    std::function<Complex(double)> value;
    std::function<Complex(double)> derivative;
    Domain domain = Domain::unit_interval;

    Complex derivative_at(double t) const;
};

/// Complex function of a complex variable, evaluable on the strip / half-plane
/// the caller integrates over.
using HolomorphicFn = std::function<Complex(Complex)>;

/// A strip integrand with optional first and second derivatives along the real axis.
struct StripIntegrand {
    HolomorphicFn value;
    HolomorphicFn first_derivative;
    HolomorphicFn second_derivative;
};

enum class MThetaVariant {
    abel_plana_0,         // i * int_0^inf [f(i th) - f(-i th)] / (e^{2 pi th} - 1)
    abel_plana_strip,     // same, minus the [f(1 + i th) - f(1 - i th)] bracket
    euler_maclaurin_alt,  // (1/12)[f'(1) - f'(0)] - int_0^inf P(th) f''(th)
};

std::string_view to_string(MThetaVariant v);

enum class DerivativePath { not_used, analytic, finite_difference };

struct MThetaReport {
    MThetaVariant variant = MThetaVariant::abel_plana_0;
    Complex value;
    double quad_error_estimate = 0.0;
    DerivativePath second_derivative_path = DerivativePath::not_used;
};

/// |int_0^1 f'(t)(t - 1/2) dt - [(f(0) + f(1))/2 - int_0^1 f]|.
double em_identity_residual(const Integrand1D& f, const EvalConfig& cfg = {});

/// Signed value of
///   (1/2)(int_{t*}^1 f' - int_0^{t*} f') + f(t*) - int_0^1 f - int_0^1 f'(t)(t - 1/2) dt.
/// The endpoints 0 and 1 are never evaluated. Throws DomainError unless 0 < t* < 1.
Complex revised_em_value(const Integrand1D& f, double t_star, const EvalConfig& cfg = {});

/// |revised_em_value|.
double revised_em_residual(const Integrand1D& f, double t_star, const EvalConfig& cfg = {});

/// 1 / (e^{2 pi x} - 1) for x > 0.
double todd_kernel(double x);

struct TruncatedSum {
    double value = 0.0;
    double tail_bound = 0.0;
};

/// (-1)^j sum_{k=1}^{terms} e^{-2 pi k x} / (2 pi k)^j with a geometric bound
/// on the omitted tail. Throws TruncationError when the bound exceeds 1e-12.
TruncatedSum todd_series(unsigned j, double x, unsigned terms);

struct KernelIntegral {
    Complex value;
    double error = 0.0;
};

/// int_0^inf g(x) / (e^{2 pi x} - 1) dx for g with g(0) = 0.
///
/// Splits at x = 1e-3: the head uses the Laurent expansion of the kernel, the
/// remainder is integrated in unit panels until the kernel-weighted
/// contributions fall below tolerance. Throws DomainError if g(0) != 0
/// (non-integrable) or if g outgrows the kernel.
KernelIntegral kernel_weighted_integral(const std::function<Complex(double)>& g,
                                        const EvalConfig& cfg = {});

/// int_0^inf f(x) dx through the map x = u / (1 - u).
KernelIntegral half_line_integral(const std::function<Complex(double)>& f,
                                  const EvalConfig& cfg = {});

/// sum_{n >= 0} f(n) = f(0)/2 + int_0^inf f + i int_0^inf [f(ix) - f(-ix)] / (e^{2 pi x} - 1).
double abel_plana_sum(const HolomorphicFn& f, const EvalConfig& cfg = {});

/// int_0^inf sin(a b) / (e^{2 pi b} - 1) db by quadrature.
double kernel_sine_integral(double a, const EvalConfig& cfg = {});

/// (1/4) coth(a/2) - 1/(2a), the closed form of the integral above (0 at a = 0).
double kernel_sine_closed_form(double a);

/// sum_{k>=1} [e^{-2 pi i k th} + e^{2 pi i k th}] / (2 pi k)^2, evaluated in
/// closed form as B_2({th}) / 2.
double lattice_sum(double theta);

MThetaReport m_theta(const StripIntegrand& f, MThetaVariant variant, const EvalConfig& cfg = {});

}  // namespace zetalab
