#pragma once

#include <cstdint>
#include <vector>

#include "wps/census.hpp"
#include "wps/wps.hpp"

namespace wps {

/// One fully evaluated fiber instance: counts from enumeration, from the
/// corrected closed form, and from the superseded closed form, plus the
/// support gcds the closed form is built from.
struct FiberReport {
    Weights target_weights;
    std::size_t i;
    WpsPoint point;
    std::uint64_t delta_P = 0;
    std::uint64_t delta_iP = 0;
    std::uint64_t brute_count = 0;
    std::uint64_t formula_count = 0;
    std::uint64_t old_formula_count = 0;
    bool hypothesis_holds = false;
};

/// Weights of the domain of pi_map: the target's with slot i replaced by 1.
Weights source_weights(const Weights& target_weights, std::size_t i);

/// gcd of the weights over a set of coordinate indices. Empty sets are
/// rejected: the callers below never form one.
std::uint64_t support_weight_gcd(const Weights& weights, const std::vector<std::size_t>& support);

/// The coordinate power map: raises coordinate i to the a_i-th power and
/// reinterprets the tuple in the target space. Well defined on points.
WpsPoint pi_map(const Weights& target_weights, std::size_t i, const WpsPoint& source_point);

/// All points of the source space mapping to P, found by full enumeration.
/// P may be any target point; membership in chart i is not required.
std::vector<WpsPoint> fiber_bruteforce(const SpaceCensus& source_census,
                                       const Weights& target_weights, std::size_t i,
                                       const WpsPoint& P);
std::vector<WpsPoint> fiber_bruteforce(const Weights& target_weights, std::size_t i,
                                       const WpsPoint& P,
                                       std::uint64_t budget = kDefaultBudget);

/// Corrected closed-form fiber count gcd(a_i, (q-1) * delta_iP) / delta_P for
/// P in chart i, where delta_P and delta_iP are the support gcds with and
/// without index i. Throws std::invalid_argument when P is not in chart i
/// (there delta_iP would be a gcd over the empty set). The exact divisibility
/// of the quotient and the identity delta_P = gcd(a_i, delta_iP) are checked
/// and a violation throws std::logic_error.
std::uint64_t fiber_formula(const Weights& target_weights, std::size_t i, const WpsPoint& P);

/// The superseded count gcd(a_i, q-1), kept for discrepancy reporting.
std::uint64_t fiber_formula_old(std::uint64_t a_i, std::uint64_t q);

/// True iff gcd(a_i, a_j, q-1) = 1 for every j != i.
bool hypothesis_check(const Weights& target_weights, std::size_t i, std::uint64_t q);

/// Runs enumeration and both closed forms for P in chart i.
FiberReport build_fiber_report(const SpaceCensus& source_census, const Weights& target_weights,
                               std::size_t i, const WpsPoint& P);
FiberReport build_fiber_report(const Weights& target_weights, std::size_t i, const WpsPoint& P,
                               std::uint64_t budget = kDefaultBudget);

} // namespace wps
