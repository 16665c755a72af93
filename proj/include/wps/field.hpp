#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace wps {

/// Element of a finite field F_q, stored as its integer encoding in [0, q):
/// the element sum_j c_j * alpha^j is encoded as sum_j c_j * p^j, so prime
/// fields encode residues directly. Encodings are only meaningful relative
/// to the Field that produced them.
struct FieldElement {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

inline constexpr std::uint32_t kDefaultFieldBound = 1u << 16;

/// F_q with q = p^k, immutable after construction and safe to share across
/// threads. Extension fields reduce modulo the lexicographically smallest
/// monic irreducible of degree k (coefficient vector (c_0,...,c_{k-1}),
/// constant term first), so a field is fully determined by (p, k). The
/// stored generator is the smallest-encoded element of multiplicative
/// order exactly q-1.
///
/// Multiplication is polynomial multiplication with reduction; a full q*q
/// product table is in front of it when q <= 256, and exp/log tables for
/// the generator are always built (they drive pow, inv and the orbit
/// machinery in wps.hpp).
class Field {
public:
    static std::shared_ptr<const Field> make(std::uint32_t p, std::uint32_t k,
                                             std::uint32_t bound = kDefaultFieldBound);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    /// Modulus coefficients (c_0,...,c_{k-1}); empty when k == 1.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    FieldElement generator() const { return generator_; }

    FieldElement zero() const { return {0}; }
    FieldElement one() const { return {1}; }
    /// Validates the encoding range.
    FieldElement element(std::uint32_t value) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Multiplicative inverse; rejects zero.
    FieldElement inv(FieldElement a) const;
    /// a^e for non-negative e, with 0^0 = 1.
    FieldElement pow(FieldElement a, std::uint64_t e) const;

    /// x -> x^base_q, the field automorphism fixing the subfield of order
    /// base_q. base_q must be p^d with d dividing k.
    FieldElement frobenius(FieldElement a, std::uint64_t base_q) const;

    /// All solutions of x^r = 1, sorted by encoding. r must be positive.
    std::vector<FieldElement> roots_of_unity(std::uint64_t r) const;

    /// Discrete log base the stored generator; rejects zero.
    std::uint32_t log(FieldElement a) const;
    /// generator^e (e reduced mod q-1).
    FieldElement exp(std::uint64_t e) const;

    /// Base-p digit vector (c_0,...,c_{k-1}) of an encoding, and back.
    std::vector<std::uint32_t> decompose(FieldElement a) const;
    FieldElement compose(const std::vector<std::uint32_t>& digits) const;

private:
    Field() = default;

    std::uint32_t p_ = 0, k_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;  // (c_0,...,c_{k-1}) of x^k + c_{k-1}x^{k-1} + ... + c_0
    FieldElement generator_{0};
    std::vector<std::uint16_t> mul_table_;  // q*q entries when q <= 256, else empty
    std::vector<std::uint32_t> exp_;        // exp_[e] = generator^e, e in [0, q-1)
    std::vector<std::uint32_t> log_;        // inverse of exp_, log_[0] unused

    std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
    void check(FieldElement a) const;
};

std::shared_ptr<const Field> make_field(std::uint32_t p, std::uint32_t k,
                                        std::uint32_t bound = kDefaultFieldBound);

/// True when two Field handles denote the same field (same p and k; the
/// modulus and generator are then determined).
bool same_field(const Field& a, const Field& b);

} // namespace wps
