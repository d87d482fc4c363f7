#pragma once

#include <atomic>
#include <cstdint>
#include <utility>
#include <vector>

namespace zetalab {

inline constexpr std::uint64_t kSieveCap = 100'000'000;

/// Primes below `limit`, ascending. Throws CapabilityError above kSieveCap.
std::vector<std::uint64_t> sieve_primes(std::uint64_t limit);

/// Immutable primality lookup for [0, limit).
class PrimeTable {
public:
    explicit PrimeTable(std::uint64_t limit);

    std::uint64_t limit() const noexcept { return limit_; }
    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    /// Throws CapabilityError for n >= limit().
    bool is_prime(std::uint64_t n) const;

private:
    std::uint64_t limit_;
    std::vector<std::uint64_t> primes_;
};

/// (p, p + 2) with both entries prime and below `limit`.
std::vector<std::pair<std::uint64_t, std::uint64_t>> twin_pairs(std::uint64_t limit);

/// Exact rational with positive denominator, always reduced.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;

    Fraction() = default;
    Fraction(std::int64_t n, std::int64_t d = 1);

    bool is_integer() const noexcept { return den == 1; }
    double value() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

    friend Fraction operator+(Fraction a, Fraction b);
    friend Fraction operator*(Fraction a, Fraction b);
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct PrimeRelationRow {
    std::int64_t q = 0;
    std::int64_t n = 0;
    std::int64_t gamma = 0;
    std::int64_t delta_q = 0;
    std::int64_t delta_n = 0;
    std::int64_t delta_gamma = 0;
    double b = 0.0;
    bool consistent = false;
};

struct RelationCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    bool consistent = false;
};

inline constexpr double kRelationTolerance = 1e-12;

/// b = 2 pi gamma / ln n. Throws DomainError for n < 2.
double b_of(std::int64_t n, std::int64_t gamma);

/// q = n^{n / gamma}. Throws DomainError for n < 2 or gamma < 1.
double q_of(std::int64_t n, std::int64_t gamma);

/// q = exp((2 pi / b) exp(2 pi gamma / b)). Throws DomainError for b <= 0.
double q_of_b(double b, double gamma);

/// gamma = n ln n / ln q.
double gamma_of(std::int64_t n, std::int64_t q);

/// Delta q / q against (1/gamma)((ln n + 1) Delta n - (n ln n / gamma) Delta gamma).
RelationCheck delta_q_relation(const PrimeRelationRow& row);

/// sign * 2 / q against (Delta n / gamma - n Delta gamma / gamma^2) ln n + Delta n / gamma.
RelationCheck twin_relation_residual(std::int64_t q, std::int64_t n, std::int64_t gamma,
                                     std::int64_t delta_n, std::int64_t delta_gamma, int sign);

/// Delta gamma implied for a twin step Delta q = sign * 2 from q:
/// sign * 2 n ln n / q + (ln n / ln q) Delta n + Delta n / ln q.
double twin_delta_gamma(std::int64_t q, std::int64_t n, std::int64_t delta_n, int sign);

/// Compares twin_delta_gamma with a tabulated integer Delta gamma; `consistent`
/// requires both agreement and an integral prediction.
RelationCheck delta_gamma_relation(std::int64_t q, std::int64_t n, std::int64_t delta_n,
                                   std::int64_t delta_gamma, int sign);

class PrimeTable;

struct TwinPairRow {
    std::int64_t gamma = 0;
    std::int64_t delta_n = 0;
    Fraction delta;
    Fraction chi;
    Fraction lambda;
    /// chi is a positive integer, so a pair was formed.
    bool candidate = false;
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    bool is_twin = false;
};

/// chi = (2/6) delta + 1/6 with delta = gamma / Delta n, carried exactly.
/// Throws DomainError for delta_n == 0.
TwinPairRow chi_model(std::int64_t gamma, std::int64_t delta_n, const PrimeTable& primes);
TwinPairRow chi_model(std::int64_t gamma, std::int64_t delta_n);

/// Row builders for the tabulated relations, generated from the formulas.
/// Rows use the tabulated pairing n = gamma = q.
std::vector<PrimeRelationRow> prime_rows(const PrimeTable& primes, std::uint64_t below);
std::vector<PrimeRelationRow> difference_rows(const PrimeTable& primes, std::uint64_t below,
                                              std::int64_t base_prime);
/// sign = +1: lower members with Delta n = Delta gamma = 2; sign = -1: upper members with -2.
std::vector<PrimeRelationRow> twin_rows(std::uint64_t below, int sign);
/// chi = 1, 2, ... with 6 chi + 1 < below; gamma = 6 chi - 1, Delta n = 2.
std::vector<TwinPairRow> chi_candidates(const PrimeTable& primes, std::uint64_t below);

/// Call counts for each formula evaluator, so tests can show that table output
/// actually flows through the formulas.
struct FormulaCounters {
    std::atomic<std::uint64_t> b_of{0};
    std::atomic<std::uint64_t> q_of{0};
    std::atomic<std::uint64_t> q_of_b{0};
    std::atomic<std::uint64_t> gamma_of{0};
    std::atomic<std::uint64_t> delta_q_relation{0};
    std::atomic<std::uint64_t> twin_relation{0};
    std::atomic<std::uint64_t> chi_model{0};
    std::atomic<std::uint64_t> sieve{0};
};

FormulaCounters& formula_counters();

}  // namespace zetalab
