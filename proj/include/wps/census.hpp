#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "wps/wps.hpp"

namespace wps {

/// Cap on raw tuples a single enumeration may visit (q^(n+1)).
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive list of the rational points of one weighted projective space,
/// canonical, deduplicated, sorted by coordinate encodings. chart(i) holds
/// the indices of the points admitting a representative with coordinate i
/// equal to one, the coordinate point excluded.
class SpaceCensus {
public:
    const std::shared_ptr<const Field>& field() const { return field_; }
    const Weights& weights() const { return weights_; }
    const std::vector<WpsPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }

    const std::vector<std::uint32_t>& chart(std::size_t i) const;
    std::vector<WpsPoint> chart_points(std::size_t i) const;

private:
    SpaceCensus(std::shared_ptr<const Field> f, Weights w);

    std::shared_ptr<const Field> field_;
    Weights weights_;
    std::vector<WpsPoint> points_;
    std::vector<std::vector<std::uint32_t>> charts_;

    friend SpaceCensus enumerate_space(std::shared_ptr<const Field>, const Weights&,
                                       std::uint64_t);
};

/// Enumerates all q^(n+1) - 1 nonzero tuples and keeps one canonical
/// representative per point. Throws BudgetExceeded when q^(n+1) would pass
/// the budget, naming the offending parameters.
SpaceCensus enumerate_space(std::shared_ptr<const Field> field, const Weights& weights,
                            std::uint64_t budget = kDefaultBudget);

/// Streaming point count: no census is stored. Same budget contract.
std::uint64_t count_points(std::shared_ptr<const Field> field, const Weights& weights,
                           std::uint64_t budget = kDefaultBudget);

} // namespace wps
