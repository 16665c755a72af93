#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace wps {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division, as (prime, multiplicity) pairs in
/// increasing prime order. Fine for the 64-bit inputs this library sees
/// (field orders, weights, gcd arguments).
inline std::vector<std::pair<std::uint64_t, unsigned>> prime_factors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("prime_factors: zero has no factorization");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d) continue;
        unsigned e = 0;
        while (n % d == 0) { n /= d; ++e; }
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// Strips every factor of p from n.
inline std::uint64_t prime_to_part(std::uint64_t n, std::uint64_t p) {
    while (n % p == 0) n /= p;
    return n;
}

/// (p, k) with q = p^k, or throws if q is not a prime power.
inline std::pair<std::uint32_t, std::uint32_t> factor_prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("factor_prime_power: q must be at least 2");
    auto f = prime_factors(q);
    if (f.size() != 1)
        throw std::invalid_argument("factor_prime_power: " + std::to_string(q) + " is not a prime power");
    return {static_cast<std::uint32_t>(f[0].first), f[0].second};
}

} // namespace wps
