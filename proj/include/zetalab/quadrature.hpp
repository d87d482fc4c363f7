#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "zetalab/errors.hpp"

namespace zetalab {

struct QuadOptions {
    double abs_tol = 1e-13;
    double rel_tol = 1e-12;
    std::size_t max_panels = 4000;
};

template <class Value>
struct QuadResult {
    Value value{};
    double error = 0.0;
    std::size_t evaluations = 0;
};

namespace detail {

// 15-point Kronrod nodes on [0, 1] (symmetric half) and the embedded 7-point Gauss weights.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class Value>
struct Panel {
    double a;
    double b;
    Value value;
    double error;
};

template <class F, class Value>
Panel<Value> gauss_kronrod_15(F& f, double a, double b, double& magnitude) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    // keep rounded nodes strictly inside the panel
    const double lo = std::nextafter(std::min(a, b), std::max(a, b));
    const double hi = std::nextafter(std::max(a, b), std::min(a, b));
    auto at = [&](double x) { return f(std::clamp(x, lo, hi)); };
    const Value fc = at(center);
    Value kronrod = fc * kKronrodWeights[7];
    Value gauss = fc * kGaussWeights[3];
    double mag = std::abs(fc) * kKronrodWeights[7];
    for (std::size_t j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        const Value f1 = at(center - dx);
        const Value f2 = at(center + dx);
        kronrod += (f1 + f2) * kKronrodWeights[j];
        mag += (std::abs(f1) + std::abs(f2)) * kKronrodWeights[j];
        if (j % 2 == 1) gauss += (f1 + f2) * kGaussWeights[j / 2];
    }
    magnitude = mag * std::abs(half);
    return {a, b, kronrod * half, std::abs((kronrod - gauss) * half)};
}

}  // namespace detail

/// Globally adaptive 15-point Gauss-Kronrod quadrature on a finite interval.
/// The integrand is never evaluated at the endpoints, so integrable endpoint
/// singularities and removable singularities are acceptable.
/// Throws ToleranceError when max_panels is exhausted.
template <class F>
auto integrate(F&& f, double a, double b, const QuadOptions& opts = {})
    -> QuadResult<decltype(f(a))> {
    using Value = decltype(f(a));
    using Panel = detail::Panel<Value>;
    QuadResult<Value> out;
    if (a == b) return out;

    auto by_error = [](const Panel& x, const Panel& y) { return x.error < y.error; };
    std::vector<Panel> heap;
    heap.reserve(64);
    double magnitude = 0.0;
    heap.push_back(detail::gauss_kronrod_15<F, Value>(f, a, b, magnitude));
    out.evaluations = 15;
    // Roundoff floor: no point chasing errors below what the sampled magnitudes allow.
    double floor = 50.0 * std::numeric_limits<double>::epsilon() * magnitude;

    Value total = heap.front().value;
    double total_error = heap.front().error;
    while (true) {
        const double tol = std::max({opts.abs_tol, opts.rel_tol * std::abs(total), floor});
        if (total_error <= tol) break;
        if (heap.size() >= opts.max_panels) {
            throw ToleranceError("adaptive quadrature on [" + std::to_string(a) + ", " +
                                 std::to_string(b) + "] did not converge: error estimate " +
                                 std::to_string(total_error));
        }
        std::pop_heap(heap.begin(), heap.end(), by_error);
        const Panel worst = heap.back();
        heap.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        if (std::abs(worst.b - worst.a) <=
            64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(worst.a), std::abs(worst.b))) {
            throw ToleranceError("adaptive quadrature on [" + std::to_string(a) + ", " + std::to_string(b) +
                                 "] did not converge: panel width reached floating-point resolution near " +
                                 std::to_string(mid));
        }
        double m1 = 0.0;
        double m2 = 0.0;
        Panel left = detail::gauss_kronrod_15<F, Value>(f, worst.a, mid, m1);
        Panel right = detail::gauss_kronrod_15<F, Value>(f, mid, worst.b, m2);
        out.evaluations += 30;
        floor = std::max(floor, 50.0 * std::numeric_limits<double>::epsilon() * (m1 + m2));
        heap.push_back(left);
        std::push_heap(heap.begin(), heap.end(), by_error);
        heap.push_back(right);
        std::push_heap(heap.begin(), heap.end(), by_error);
        // Re-sum from scratch to avoid drift from repeated subtraction.
        total = Value{};
        total_error = 0.0;
        for (const auto& p : heap) {
            total += p.value;
            total_error += p.error;
        }
    }
    out.value = total;
    out.error = total_error;
    return out;
}

}  // namespace zetalab
