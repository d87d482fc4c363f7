#include "zetalab/numerics_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

BernoulliTable::BernoulliTable(unsigned max_index) {
    using boost::multiprecision::cpp_int;
    exact_.reserve(max_index + 1);
    exact_.emplace_back(1);
    // Row m+1 of Pascal's triangle, updated in place for each m.
    std::vector<cpp_int> binom{1, 1};
    for (unsigned m = 1; m <= max_index; ++m) {
        std::vector<cpp_int> next(m + 2, 1);
        for (unsigned j = 1; j <= m; ++j) next[j] = binom[j - 1] + binom[j];
        binom = std::move(next);
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) {
            if (j > 1 && j % 2 == 1) continue;
            acc += Rational(binom[j]) * exact_[j];
        }
        exact_.push_back(-acc / Rational(binom[m]));
    }
    rounded_.reserve(exact_.size());
    for (const auto& b : exact_) rounded_.push_back(static_cast<double>(b));
}

const Rational& BernoulliTable::exact(unsigned k) const {
    if (k >= exact_.size()) {
        throw CapabilityError("Bernoulli index " + std::to_string(k) + " exceeds table ceiling " +
                              std::to_string(max_index()));
    }
    return exact_[k];
}

double BernoulliTable::value(unsigned k) const {
    exact(k);
    return rounded_[k];
}

const BernoulliTable& bernoulli_table() {
    static const BernoulliTable table(kBernoulliCeiling);
    return table;
}

Rational bernoulli(unsigned k) { return bernoulli_table().exact(k); }

Complex sin_pi(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    // Reduce x to r in [-1, 1]; sin(pi x) = sin(pi r) because the shift is even.
    const double r = x - 2.0 * std::nearbyint(0.5 * x);
    double s = 0.0;
    double c = 0.0;
    if (r == 0.0) {
        s = 0.0;
        c = 1.0;
    } else if (std::abs(r) == 1.0) {
        s = 0.0;
        c = -1.0;
    } else if (std::abs(r) == 0.5) {
        s = std::copysign(1.0, r);
        c = 0.0;
    } else {
        s = std::sin(kPi * r);
        c = std::cos(kPi * r);
    }
    if (y == 0.0) return {s, 0.0};
    return {s * std::cosh(kPi * y), c * std::sinh(kPi * y)};
}

namespace {

// Lanczos approximation, g = 671/128 with 14 terms; relative error near 1e-15
// across the right half-plane.
constexpr double kLanczosG = 5.24218750000000000;
constexpr double kLanczosBase = 0.999999999999997092;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,     14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,   .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,   -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3,  .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};
constexpr double kSqrtTwoPi = 2.5066282746310005024157652848110452530069867406099;
const double kLogPi = std::log(kPi);

Complex log_gamma_right(Complex z) {
    Complex series = kLanczosBase;
    for (std::size_t j = 0; j < kLanczos.size(); ++j) {
        series += kLanczos[j] / (z + static_cast<double>(j + 1));
    }
    const Complex shifted = z + kLanczosG;
    return (z + 0.5) * std::log(shifted) - shifted + std::log(kSqrtTwoPi * series) - std::log(z);
}

}  // namespace

Complex log_gamma(Complex z) {
    const double x = z.real();
    const double y = z.imag();
    if (y == 0.0 && x <= 0.0 && x == std::floor(x)) {
        throw PoleError("log_gamma: pole at nonpositive integer " + std::to_string(x));
    }
    if (x >= 0.5) return log_gamma_right(z);
    // Reflection, with the 2 pi i multiple that keeps the principal branch
    // continuous across the left half-plane.
    const double branch = std::copysign(kTwoPi, y) * std::floor(0.5 * x + 0.25);
    return Complex(kLogPi, branch) - std::log(sin_pi(z)) - log_gamma_right(1.0 - z);
}

Complex complex_pow_neg(std::uint64_t n, Complex s) {
    if (n == 0) throw DomainError("complex_pow_neg: n must be positive");
    if (n == 1) return 1.0;
    const double log_n = std::log(static_cast<double>(n));
    return std::polar(std::exp(-s.real() * log_n), -s.imag() * log_n);
}

}  // namespace zetalab
