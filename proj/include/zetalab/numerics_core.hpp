#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace zetalab {

/// s = sigma + i b throughout the library.
using Complex = std::complex<double>;

using Rational = boost::multiprecision::cpp_rational;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Largest Bernoulli index the default table carries.
inline constexpr unsigned kBernoulliCeiling = 60;

/// Exact Bernoulli numbers B_0..B_max built from
/// sum_{j=0}^{m} C(m+1, j) B_j = 0. Immutable once constructed.
class BernoulliTable {
public:
    explicit BernoulliTable(unsigned max_index = kBernoulliCeiling);

    unsigned max_index() const noexcept { return static_cast<unsigned>(exact_.size()) - 1; }

    /// Throws CapabilityError past max_index().
    const Rational& exact(unsigned k) const;
    double value(unsigned k) const;

private:
    std::vector<Rational> exact_;
    std::vector<double> rounded_;
};

/// Process-wide table up to kBernoulliCeiling.
const BernoulliTable& bernoulli_table();

/// B_k exactly (B_1 = -1/2 convention).
Rational bernoulli(unsigned k);

/// Principal branch of ln Gamma(z), continuous off the negative real axis.
/// Throws PoleError at nonpositive integers.
Complex log_gamma(Complex z);

/// sin(pi z) with the real part reduced exactly, so integers give exact zeros.
Complex sin_pi(Complex z);

/// n^{-s} = e^{-s ln n}.
Complex complex_pow_neg(std::uint64_t n, Complex s);

}  // namespace zetalab
