#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "wps/census.hpp"
#include "wps/fiber.hpp"

namespace wps {

/// Raised when a checked mathematical claim fails on concrete data.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepConfig {
    enum class Mode { exhaustive, sampled };

    std::vector<std::uint32_t> q_list;
    std::size_t n_min = 1;        // smallest projective dimension (tuple length n+1)
    std::size_t n_max = 2;
    std::uint32_t weight_max = 6; // weights range over 1..weight_max, all ordered tuples
    Mode mode = Mode::exhaustive;
    std::uint64_t samples = 500;  // sampled mode: stop once this many cases are collected
    std::uint64_t seed = 0;
    std::uint64_t budget = kDefaultBudget;
    unsigned jobs = 1;
};

struct SweepTotals {
    std::uint64_t cases = 0;
    std::uint64_t matches = 0;
    std::uint64_t mismatches = 0;
    std::uint64_t old_formula_mismatches = 0;
};

/// Outcome of a sweep. Cases are sorted by (q, dimension, weights, i, point)
/// and the content is independent of the worker count; elapsed_seconds is
/// wall clock and deliberately left out of the serialized forms.
struct SweepReport {
    std::vector<FiberReport> cases;
    SweepTotals totals;
    std::vector<FiberReport> mismatches; // cases with brute_count != formula_count
    double elapsed_seconds = 0.0;
};

/// Runs every (q, weights, i) cell of the configured grid and evaluates a
/// FiberReport for each chart-i point of the target census. Sampled mode
/// draws a seeded deterministic subset of cells instead.
SweepReport run_sweep(const SweepConfig& config);

/// Largest e with ell^e dividing m. Requires ell prime, m >= 1.
unsigned ell_adic_valuation(std::uint64_t ell, std::uint64_t m);

/// Per-prime record for the gcd division identity. With a the weight, d the
/// reduced support gcd and m the unit group order: alpha, kappa, delta are
/// the valuations of a, m, d at ell; lhs is the valuation of
/// gcd(a, m*d)/gcd(a, d) and rhs that of gcd(a, m).
struct ValuationWitness {
    std::uint64_t ell = 0;
    unsigned alpha = 0;
    unsigned kappa = 0;
    unsigned delta = 0;
    long long lhs = 0;
    long long rhs = 0;
};

struct ValuationCheck {
    bool holds = false;
    std::vector<ValuationWitness> witnesses;
};

/// Decides gcd(a, m*d)/gcd(a, d) == gcd(a, m) and returns one witness per
/// prime dividing a*d*m. The identity is guaranteed whenever gcd(a,d,m) = 1.
ValuationCheck check_valuation_identity(std::uint64_t a, std::uint64_t d, std::uint64_t m);

/// The smallest instance separating the corrected count from the superseded
/// one: q = 5, target weights (a0, a1, 2, 4), i = 2, P = [0:0:1:2]. With the
/// default a0 = a1 = 1 the result is checked to be brute 1, formula 1, old 2;
/// for other a0, a1 the brute/formula agreement is checked. Violations raise
/// VerificationFailure.
FiberReport reproduce_counterexample(std::uint32_t a0 = 1, std::uint32_t a1 = 1,
                                     std::uint64_t budget = kDefaultBudget);

struct GaloisCheck {
    std::uint64_t base_count = 0;  // points over F_q, counted by representatives
    std::uint64_t fixed_count = 0; // points over F_{q^2} fixed by the q-power map
    bool equal = false;
};

/// Cross-checks representative-based rationality: enumerates the space over
/// F_{q^2}, counts points fixed by the coordinate-wise q-power map, and
/// compares with the direct count over F_q.
GaloisCheck galois_crosscheck(const Weights& weights, std::uint32_t p, std::uint32_t k,
                              std::uint64_t budget = kDefaultBudget);

} // namespace wps
