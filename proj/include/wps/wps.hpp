#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "wps/field.hpp"

namespace wps {

inline constexpr std::uint32_t kMaxWeight = 1'000'000;

/// Weight vector (a_0,...,a_n) of a weighted projective space. Every entry
/// is a positive integer; nothing is assumed about their joint gcd.
class Weights {
public:
    explicit Weights(std::vector<std::uint32_t> a);

    std::size_t size() const { return a_.size(); }       // n + 1
    std::size_t dimension() const { return a_.size() - 1; } // n
    std::uint32_t operator[](std::size_t i) const { return a_[i]; }
    const std::vector<std::uint32_t>& values() const { return a_; }

    friend bool operator==(const Weights&, const Weights&) = default;

private:
    std::vector<std::uint32_t> a_;
};

/// Indices of the nonzero coordinates, ascending.
std::vector<std::size_t> support_of(const std::vector<FieldElement>& coords);

/// A point of P(a_0,...,a_n)(F_q), stored in canonical form: the
/// lexicographically smallest coordinate tuple (by integer encodings,
/// position 0 first) among all F_q-rational tuples equivalent to it.
///
/// Equivalence is the scaling relation x ~ (lambda^{a_j} x_j)_j for a root
/// of unity lambda over the algebraic closure; its restriction to rational
/// tuples is enumerated exactly over F_q through the generator's discrete
/// logs, so the closure itself is never constructed. Every point has
/// exactly q-1 rational representatives.
class WpsPoint {
public:
    const std::shared_ptr<const Field>& field() const { return field_; }
    const Weights& weights() const { return weights_; }
    const std::vector<FieldElement>& coords() const { return coords_; }
    std::vector<std::size_t> support() const { return support_of(coords_); }

private:
    WpsPoint(std::shared_ptr<const Field> f, Weights w, std::vector<FieldElement> c);

    std::shared_ptr<const Field> field_;
    Weights weights_;
    std::vector<FieldElement> coords_;

    friend WpsPoint normalize(std::shared_ptr<const Field>, const Weights&,
                              std::vector<FieldElement>);
};

/// Canonical form of a raw coordinate tuple. The tuple must have the same
/// length as the weights and must not be identically zero.
WpsPoint normalize(std::shared_ptr<const Field> field, const Weights& weights,
                   std::vector<FieldElement> raw);

/// True iff the two points coincide, i.e. some scaling carries one raw
/// tuple to the other. Rejects points from different spaces.
bool points_equal(const WpsPoint& x, const WpsPoint& y);

/// The plain F_q^* scaling action: coordinate j is multiplied by
/// lambda^{a_j}. lambda must be nonzero.
std::vector<FieldElement> scale(const Field& field, const Weights& weights,
                                const std::vector<FieldElement>& raw, FieldElement lambda);

/// All rational tuples equivalent to raw, deduplicated, in the order the
/// scaling sweep visits them. Always has exactly q-1 entries.
std::vector<std::vector<FieldElement>> rational_orbit(const Field& field, const Weights& weights,
                                                      const std::vector<FieldElement>& raw);

/// True iff the point has a rational representative with coordinate i equal
/// to one and is not the i-th coordinate point. Decided by orbit search.
bool in_unit_chart(const WpsPoint& x, std::size_t i);

} // namespace wps
