#include "zetalab/zeta_engine.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"
#include "zetalab/quadrature.hpp"

namespace zetalab {

namespace {

constexpr double kLog2 = 0.69314718055994530941723212145817656807550013436026;
const double kLogPi = std::log(kPi);

// B_{2k} / (2k)! for k = 0..kBernoulliCeiling/2, reduced exactly before rounding.
const std::array<double, kBernoulliCeiling / 2 + 1>& bernoulli_over_factorial() {
    static const auto table = [] {
        std::array<double, kBernoulliCeiling / 2 + 1> out{};
        Rational factorial = 1;
        for (unsigned k = 0; k <= kBernoulliCeiling / 2; ++k) {
            if (k > 0) factorial *= Rational((2 * k - 1) * (2 * k));
            out[k] = static_cast<double>(bernoulli(2 * k) / factorial);
        }
        return out;
    }();
    return table;
}

void require_not_pole(Complex s, const char* who) {
    if (s == Complex(1.0, 0.0)) throw PoleError(std::string(who) + ": pole at s = 1");
}

ZetaWithDerivative euler_maclaurin(Complex s, const EvalConfig& cfg, bool with_derivative) {
    require_not_pole(s, "zeta_em");
    cfg.validate();
    const unsigned order = cfg.correction_k;
    if (s.real() <= -(2.0 * order - 1.0)) {
        throw CapabilityError("zeta_em: Re(s) = " + std::to_string(s.real()) +
                              " needs correction order above " + std::to_string(order));
    }
    const std::size_t n_cut = cfg.truncation_for(s.imag());

    Complex sum = 0.0;
    Complex dsum = 0.0;
    for (std::size_t n = n_cut - 1; n >= 1; --n) {
        const Complex term = complex_pow_neg(n, s);
        sum += term;
        if (with_derivative) dsum -= std::log(static_cast<double>(n)) * term;
    }

    const double nd = static_cast<double>(n_cut);
    const double log_n = std::log(nd);
    const Complex n_pow = complex_pow_neg(n_cut, s);  // N^{-s}
    const Complex sm1 = s - 1.0;

    sum += nd * n_pow / sm1 + 0.5 * n_pow;
    if (with_derivative) {
        dsum += nd * n_pow * (-log_n / sm1 - 1.0 / (sm1 * sm1)) - 0.5 * log_n * n_pow;
    }

    // Corrections B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1}.
    const auto& coeff = bernoulli_over_factorial();
    Complex rising = s;
    Complex drising = 1.0;
    Complex power = n_pow / nd;
    const double inv_n2 = 1.0 / (nd * nd);
    for (unsigned k = 1; k <= order; ++k) {
        const Complex term = coeff[k] * rising * power;
        sum += term;
        if (with_derivative) dsum += coeff[k] * power * (drising - log_n * rising);
        const Complex a = s + (2.0 * k - 1.0);
        const Complex b = s + 2.0 * k;
        drising = drising * a * b + rising * (a + b);
        rising *= a * b;
        power *= inv_n2;
    }
    return {sum, dsum};
}

}  // namespace

Complex zeta_em(Complex s, const EvalConfig& cfg) { return euler_maclaurin(s, cfg, false).value; }

ZetaWithDerivative zeta_em_with_derivative(Complex s, const EvalConfig& cfg) {
    return euler_maclaurin(s, cfg, true);
}

Complex zeta_derivative(Complex s, const EvalConfig& cfg) {
    return euler_maclaurin(s, cfg, true).derivative;
}

std::size_t eta_terms_for(Complex s) {
    // The CVZ error is about 2 (3 + sqrt 8)^{-n} Gamma(sigma) / |Gamma(s)|,
    // and 1/|Gamma(s)| grows like e^{pi |t| / 2}.
    const double needed = (0.5 * kPi * std::abs(s.imag()) + 40.0) / std::log(3.0 + std::sqrt(8.0));
    return std::max<std::size_t>(30, static_cast<std::size_t>(std::ceil(needed)) + 4);
}

Complex zeta_eta(Complex s, std::size_t terms) {
    require_not_pole(s, "zeta_eta");
    if (!(s.real() > 0.0)) throw DomainError("zeta_eta: requires Re(s) > 0");
    if (s.real() == 1.0) {
        const double k = s.imag() * kLog2 / kTwoPi;
        if (std::abs(k - std::nearbyint(k)) < 1e-12) {
            throw DomainError("zeta_eta: 1 - 2^{1-s} vanishes at s = 1 + 2 pi i k / ln 2");
        }
    }
    if (terms < 1) throw DomainError("zeta_eta: need at least one term");
    if (terms > kMaxEtaTerms) {
        throw CapabilityError("zeta_eta: " + std::to_string(terms) + " terms exceed the binary64 limit " +
                              std::to_string(kMaxEtaTerms));
    }

    // Cohen, Rodriguez Villegas, Zagier, algorithm 1.
    const double n = static_cast<double>(terms);
    double d = std::pow(3.0 + std::sqrt(8.0), n);
    d = 0.5 * (d + 1.0 / d);
    double b = -1.0;
    double c = -d;
    Complex acc = 0.0;
    for (std::size_t k = 0; k < terms; ++k) {
        c = b - c;
        acc += c * complex_pow_neg(k + 1, s);
        const double kd = static_cast<double>(k);
        b = (kd + n) * (kd - n) * b / ((kd + 0.5) * (kd + 1.0));
    }
    const Complex eta = acc / d;
    return eta / (1.0 - 2.0 * complex_pow_neg(2, s));
}

Complex zeta_eta(Complex s) { return zeta_eta(s, eta_terms_for(s)); }

Complex functional_factor(Complex s) {
    const Complex log_part = s * kLog2 + (s - 1.0) * kLogPi + log_gamma(1.0 - s);
    return std::exp(log_part) * sin_pi(0.5 * s);
}

Complex zeta_functional(Complex s, const EvalConfig& cfg) {
    require_not_pole(s, "zeta_functional");
    if (s.real() >= 0.5) return zeta_em(s, cfg);
    const Complex factor = functional_factor(s);
    if (factor == Complex(0.0, 0.0)) return 0.0;
    return factor * zeta_em(1.0 - s, cfg);
}

namespace {

constexpr double kContourAbsTol = 1e-6;
constexpr double kProximity = 1e-3;
constexpr double kProbeSpacing = 1e-2;

struct Edge {
    Complex start;
    Complex direction;  // unit step along the edge
    double length;
};

std::array<Edge, 4> edges_of(const Rectangle& r) {
    const double w = r.sigma_hi - r.sigma_lo;
    const double h = r.t_hi - r.t_lo;
    return {{
        {{r.sigma_lo, r.t_lo}, {1.0, 0.0}, w},
        {{r.sigma_hi, r.t_lo}, {0.0, 1.0}, h},
        {{r.sigma_hi, r.t_hi}, {-1.0, 0.0}, w},
        {{r.sigma_lo, r.t_hi}, {0.0, -1.0}, h},
    }};
}

double distance_to_boundary(const Rectangle& r, Complex z) {
    const double x = z.real();
    const double y = z.imag();
    auto seg = [](double p, double lo, double hi) { return p < lo ? lo - p : (p > hi ? p - hi : 0.0); };
    const double dx = seg(x, r.sigma_lo, r.sigma_hi);
    const double dy = seg(y, r.t_lo, r.t_hi);
    if (dx > 0.0 || dy > 0.0) return std::hypot(dx, dy);
    return std::min({x - r.sigma_lo, r.sigma_hi - x, y - r.t_lo, r.t_hi - y});
}

// Newton from a boundary sample that looks close to a zero; reports the zero
// if one is found within reach.
void probe_for_nearby_zero(const Rectangle& r, Complex start, const EvalConfig& cfg) {
    Complex z = start;
    for (int it = 0; it < 40; ++it) {
        const auto [f, df] = zeta_em_with_derivative(z, cfg);
        if (df == Complex(0.0, 0.0)) return;
        const Complex step = f / df;
        z -= step;
        if (std::abs(z - start) > 0.1) return;
        if (std::abs(step) < 1e-13) break;
    }
    if (distance_to_boundary(r, z) <= kProximity) {
        throw BoundaryProximityError("zeta has a zero near " + std::to_string(z.real()) + " + " +
                                     std::to_string(z.imag()) +
                                     "i, within 1e-3 of the rectangle boundary; shift the rectangle");
    }
}

void check_edge_clearance(const Rectangle& r, const Edge& e, const EvalConfig& cfg) {
    const auto samples = static_cast<std::size_t>(std::ceil(e.length / kProbeSpacing));
    const double h = e.length / static_cast<double>(samples);
    for (std::size_t i = 0; i <= samples; ++i) {
        const Complex p = e.start + e.direction * (h * static_cast<double>(i));
        const auto [f, df] = zeta_em_with_derivative(p, cfg);
        // Newton distance estimate; a zero within 1e-3 of the edge is at most
        // h/2 + 1e-3 from the nearest sample.
        if (std::abs(f) < (0.5 * h + kProximity + 1e-3) * std::abs(df)) {
            probe_for_nearby_zero(r, p, cfg);
        }
    }
}

}  // namespace

ZeroCountResult count_zeros_rectangle(const Rectangle& rect, const EvalConfig& cfg) {
    cfg.validate();
    if (!(rect.sigma_lo < rect.sigma_hi) || !(rect.t_lo < rect.t_hi)) {
        throw DomainError("count_zeros_rectangle: empty rectangle");
    }
    if (!(rect.t_lo > 0.0)) {
        throw DomainError("count_zeros_rectangle: t_lo must be positive (excludes s = 1 and trivial zeros)");
    }
    const auto edges = edges_of(rect);
    const QuadOptions opts{std::max(cfg.quad_abs_tol, kContourAbsTol), cfg.quad_rel_tol,
                           cfg.max_quad_panels};

    std::array<Complex, 4> pieces{};
    parallel_for(edges.size(), std::min<std::size_t>(worker_count(), edges.size()), [&](std::size_t i) {
        const Edge& e = edges[i];
        check_edge_clearance(rect, e, cfg);
        auto log_derivative = [&](double u) {
            const auto [f, df] = zeta_em_with_derivative(e.start + e.direction * u, cfg);
            return df / f;
        };
        pieces[i] = integrate(log_derivative, 0.0, e.length, opts).value * e.direction;
    });

    ZeroCountResult out;
    out.rectangle = rect;
    out.contour_integral = pieces[0] + pieces[1] + pieces[2] + pieces[3];
    const Complex normalized = out.contour_integral / Complex(0.0, kTwoPi);
    const double rounded = std::nearbyint(normalized.real());
    if (rounded < 0.0 || std::abs(normalized - rounded) > 0.25) {
        throw ToleranceError("count_zeros_rectangle: contour integral / 2 pi i = " +
                             std::to_string(normalized.real()) + " + " + std::to_string(normalized.imag()) +
                             "i does not round to a count");
    }
    out.count = static_cast<std::size_t>(rounded);
    return out;
}

}  // namespace zetalab
