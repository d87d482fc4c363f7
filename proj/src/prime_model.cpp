#include "zetalab/prime_model.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "zetalab/errors.hpp"
#include "zetalab/numerics_core.hpp"

namespace zetalab {

namespace {

constexpr std::uint64_t kFlatSieveLimit = 1'000'000;
constexpr std::uint64_t kSegmentSize = 1 << 18;

std::vector<std::uint64_t> flat_sieve(std::uint64_t limit) {
    std::vector<bool> composite(limit, false);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i < limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (std::uint64_t j = i * i; j < limit; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<std::uint64_t> segmented_sieve(std::uint64_t limit) {
    const auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(limit))) + 1;
    std::vector<std::uint64_t> base = flat_sieve(root + 1);
    std::vector<std::uint64_t> primes = base;
    std::vector<bool> composite(kSegmentSize);
    for (std::uint64_t lo = root + 1; lo < limit; lo += kSegmentSize) {
        const std::uint64_t hi = std::min(lo + kSegmentSize, limit);
        std::fill(composite.begin(), composite.end(), false);
        for (const std::uint64_t p : base) {
            if (p * p >= hi) break;
            std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
            for (std::uint64_t j = start; j < hi; j += p) composite[j - lo] = true;
        }
        for (std::uint64_t i = lo; i < hi; ++i) {
            if (!composite[i - lo]) primes.push_back(i);
        }
    }
    return primes;
}

void require_log_base(std::int64_t n, const char* who) {
    if (n < 2) throw DomainError(std::string(who) + ": requires n >= 2, got " + std::to_string(n));
}

double log_of(std::int64_t n) { return std::log(static_cast<double>(n)); }

}  // namespace

FormulaCounters& formula_counters() {
    static FormulaCounters counters;
    return counters;
}

std::vector<std::uint64_t> sieve_primes(std::uint64_t limit) {
    if (limit > kSieveCap) {
        throw CapabilityError("sieve_primes: limit " + std::to_string(limit) + " above cap " +
                              std::to_string(kSieveCap));
    }
    ++formula_counters().sieve;
    if (limit <= 2) return {};
    if (limit <= kFlatSieveLimit) return flat_sieve(limit);
    return segmented_sieve(limit);
}

PrimeTable::PrimeTable(std::uint64_t limit) : limit_(limit), primes_(sieve_primes(limit)) {}

bool PrimeTable::is_prime(std::uint64_t n) const {
    if (n >= limit_) {
        throw CapabilityError("PrimeTable: " + std::to_string(n) + " is outside the sieved range [0, " +
                              std::to_string(limit_) + ")");
    }
    return std::binary_search(primes_.begin(), primes_.end(), n);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_pairs(std::uint64_t limit) {
    const auto primes = sieve_primes(limit);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (std::size_t i = 1; i < primes.size(); ++i) {
        if (primes[i] - primes[i - 1] == 2) out.emplace_back(primes[i - 1], primes[i]);
    }
    return out;
}

Fraction::Fraction(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw DomainError("Fraction: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
}

Fraction operator+(Fraction a, Fraction b) { return {a.num * b.den + b.num * a.den, a.den * b.den}; }

Fraction operator*(Fraction a, Fraction b) { return {a.num * b.num, a.den * b.den}; }

double b_of(std::int64_t n, std::int64_t gamma) {
    require_log_base(n, "b_of");
    ++formula_counters().b_of;
    return kTwoPi * static_cast<double>(gamma) / log_of(n);
}

double q_of(std::int64_t n, std::int64_t gamma) {
    require_log_base(n, "q_of");
    if (gamma < 1) throw DomainError("q_of: requires gamma >= 1");
    ++formula_counters().q_of;
    return std::pow(static_cast<double>(n), static_cast<double>(n) / static_cast<double>(gamma));
}

double q_of_b(double b, double gamma) {
    if (!(b > 0.0)) throw DomainError("q_of_b: requires b > 0");
    ++formula_counters().q_of_b;
    return std::exp(kTwoPi / b * std::exp(kTwoPi * gamma / b));
}

double gamma_of(std::int64_t n, std::int64_t q) {
    require_log_base(n, "gamma_of");
    if (q < 2) throw DomainError("gamma_of: requires q >= 2");
    ++formula_counters().gamma_of;
    return static_cast<double>(n) * log_of(n) / log_of(q);
}

RelationCheck delta_q_relation(const PrimeRelationRow& row) {
    require_log_base(row.n, "delta_q_relation");
    if (row.gamma == 0) throw DomainError("delta_q_relation: gamma must be nonzero");
    if (row.q == 0) throw DomainError("delta_q_relation: q must be nonzero");
    ++formula_counters().delta_q_relation;
    const double ln_n = log_of(row.n);
    const double gamma = static_cast<double>(row.gamma);
    RelationCheck out;
    out.lhs = static_cast<double>(row.delta_q) / static_cast<double>(row.q);
    out.rhs = ((ln_n + 1.0) * static_cast<double>(row.delta_n) -
               static_cast<double>(row.n) * ln_n / gamma * static_cast<double>(row.delta_gamma)) /
              gamma;
    out.residual = std::abs(out.lhs - out.rhs);
    out.consistent = out.residual <= kRelationTolerance;
    return out;
}

RelationCheck twin_relation_residual(std::int64_t q, std::int64_t n, std::int64_t gamma, std::int64_t delta_n,
                                     std::int64_t delta_gamma, int sign) {
    require_log_base(n, "twin_relation_residual");
    if (gamma == 0) throw DomainError("twin_relation_residual: gamma must be nonzero");
    if (q == 0) throw DomainError("twin_relation_residual: q must be nonzero");
    if (sign != 1 && sign != -1) throw DomainError("twin_relation_residual: sign must be +1 or -1");
    ++formula_counters().twin_relation;
    const double g = static_cast<double>(gamma);
    const double dn = static_cast<double>(delta_n);
    RelationCheck out;
    out.lhs = 2.0 * sign / static_cast<double>(q);
    out.rhs = (dn / g - static_cast<double>(n) / (g * g) * static_cast<double>(delta_gamma)) * log_of(n) + dn / g;
    out.residual = std::abs(out.lhs - out.rhs);
    out.consistent = out.residual <= kRelationTolerance;
    return out;
}

double twin_delta_gamma(std::int64_t q, std::int64_t n, std::int64_t delta_n, int sign) {
    require_log_base(n, "twin_delta_gamma");
    if (q < 2) throw DomainError("twin_delta_gamma: requires q >= 2");
    const double ln_n = log_of(n);
    const double ln_q = log_of(q);
    const double dn = static_cast<double>(delta_n);
    return sign * 2.0 * static_cast<double>(n) * ln_n / static_cast<double>(q) + ln_n / ln_q * dn + dn / ln_q;
}

RelationCheck delta_gamma_relation(std::int64_t q, std::int64_t n, std::int64_t delta_n, std::int64_t delta_gamma,
                                   int sign) {
    RelationCheck out;
    out.lhs = static_cast<double>(delta_gamma);
    out.rhs = twin_delta_gamma(q, n, delta_n, sign);
    out.residual = std::abs(out.lhs - out.rhs);
    out.consistent = out.residual <= kRelationTolerance * std::max(1.0, std::abs(out.lhs));
    return out;
}

TwinPairRow chi_model(std::int64_t gamma, std::int64_t delta_n, const PrimeTable& primes) {
    if (delta_n == 0) throw DomainError("chi_model: Delta n must be nonzero");
    ++formula_counters().chi_model;
    TwinPairRow row;
    row.gamma = gamma;
    row.delta_n = delta_n;
    row.delta = Fraction(gamma, delta_n);
    row.chi = Fraction(2, 6) * row.delta + Fraction(1, 6);
    row.lambda = Fraction(2) * row.delta;
    row.candidate = row.chi.is_integer() && row.chi.num > 0;
    if (row.candidate) {
        row.lower = 6 * row.chi.num - 1;
        row.upper = 6 * row.chi.num + 1;
        row.is_twin = primes.is_prime(static_cast<std::uint64_t>(row.lower)) &&
                      primes.is_prime(static_cast<std::uint64_t>(row.upper));
    }
    return row;
}

TwinPairRow chi_model(std::int64_t gamma, std::int64_t delta_n) {
    if (delta_n == 0) throw DomainError("chi_model: Delta n must be nonzero");
    const Fraction chi = Fraction(2, 6) * Fraction(gamma, delta_n) + Fraction(1, 6);
    const std::int64_t reach = chi.is_integer() && chi.num > 0 ? 6 * chi.num + 2 : 2;
    return chi_model(gamma, delta_n, PrimeTable(static_cast<std::uint64_t>(reach)));
}

std::vector<PrimeRelationRow> prime_rows(const PrimeTable& primes, std::uint64_t below) {
    std::vector<PrimeRelationRow> rows;
    for (const auto p : primes.primes()) {
        if (p >= below) break;
        const auto q = static_cast<std::int64_t>(p);
        PrimeRelationRow row{q, q, q, 0, 0, 0, b_of(q, q), false};
        row.consistent = std::abs(q_of(q, q) - static_cast<double>(q)) <= kRelationTolerance * static_cast<double>(q);
        rows.push_back(row);
    }
    return rows;
}

std::vector<PrimeRelationRow> difference_rows(const PrimeTable& primes, std::uint64_t below,
                                              std::int64_t base_prime) {
    std::vector<PrimeRelationRow> rows;
    for (const auto p : primes.primes()) {
        if (p >= below) break;
        const auto q = static_cast<std::int64_t>(p);
        const std::int64_t step = q - base_prime;
        PrimeRelationRow row{q, q, q, step, step, step, b_of(q, q), false};
        row.consistent = delta_q_relation(row).consistent;
        rows.push_back(row);
    }
    return rows;
}

std::vector<PrimeRelationRow> twin_rows(std::uint64_t below, int sign) {
    if (sign != 1 && sign != -1) throw DomainError("twin_rows: sign must be +1 or -1");
    std::vector<PrimeRelationRow> rows;
    for (const auto& [lower, upper] : twin_pairs(below)) {
        const auto q = static_cast<std::int64_t>(sign > 0 ? lower : upper);
        const std::int64_t step = 2 * sign;
        PrimeRelationRow row{q, q, q, step, step, step, b_of(q, q), false};
        row.consistent = twin_relation_residual(q, q, q, step, step, sign).consistent;
        rows.push_back(row);
    }
    return rows;
}

std::vector<TwinPairRow> chi_candidates(const PrimeTable& primes, std::uint64_t below) {
    std::vector<TwinPairRow> rows;
    for (std::int64_t chi = 1; 6 * chi + 1 < static_cast<std::int64_t>(below); ++chi) {
        rows.push_back(chi_model(6 * chi - 1, 2, primes));
    }
    return rows;
}

}  // namespace zetalab
