#include "wps/census.hpp"

#include <sstream>

namespace wps {
namespace {

std::string describe_cell(const Field& field, const Weights& weights) {
    std::ostringstream os;
    os << "F_" << field.order() << " with weights (";
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j) os << ',';
        os << weights[j];
    }
    os << ')';
    return os.str();
}

// q^m with a hard stop at `budget`; throws instead of overflowing.
std::uint64_t raw_tuple_count(const Field& field, const Weights& weights,
                              std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (total > budget / field.order()) {
            throw BudgetExceeded("enumeration of " + describe_cell(field, weights) +
                                 " exceeds the raw tuple budget of " +
                                 std::to_string(budget));
        }
        total *= field.order();
    }
    return total;
}

// Lexicographic odometer over all tuples, coordinate 0 most significant.
// Returns false once the tuple wraps back to all zeros.
bool advance(std::vector<FieldElement>& raw, std::uint32_t q) {
    for (std::size_t j = raw.size(); j-- > 0;) {
        if (raw[j].value + 1 < q) {
            raw[j].value += 1;
            return true;
        }
        raw[j].value = 0;
    }
    return false;
}

} // namespace

SpaceCensus::SpaceCensus(std::shared_ptr<const Field> f, Weights w)
    : field_(std::move(f)), weights_(std::move(w)), charts_(weights_.size()) {}

const std::vector<std::uint32_t>& SpaceCensus::chart(std::size_t i) const {
    if (i >= weights_.size()) throw std::out_of_range("chart index out of range");
    return charts_[i];
}

std::vector<WpsPoint> SpaceCensus::chart_points(std::size_t i) const {
    std::vector<WpsPoint> out;
    out.reserve(chart(i).size());
    for (std::uint32_t idx : charts_[i]) out.push_back(points_[idx]);
    return out;
}

SpaceCensus enumerate_space(std::shared_ptr<const Field> field, const Weights& weights,
                            std::uint64_t budget) {
    raw_tuple_count(*field, weights, budget);
    SpaceCensus census(field, weights);

    // The odometer visits tuples in ascending lexicographic order and the
    // canonical form is the lex-least orbit member, so keeping exactly the
    // self-canonical tuples yields each point once, already sorted.
    std::vector<FieldElement> raw(weights.size(), field->zero());
    while (advance(raw, field->order())) {
        WpsPoint point = normalize(field, weights, raw);
        if (point.coords() == raw) census.points_.push_back(std::move(point));
    }

    for (std::size_t idx = 0; idx < census.points_.size(); ++idx) {
        for (std::size_t i = 0; i < weights.size(); ++i) {
            if (in_unit_chart(census.points_[idx], i)) {
                census.charts_[i].push_back(static_cast<std::uint32_t>(idx));
            }
        }
    }
    return census;
}

std::uint64_t count_points(std::shared_ptr<const Field> field, const Weights& weights,
                           std::uint64_t budget) {
    raw_tuple_count(*field, weights, budget);
    std::uint64_t count = 0;
    std::vector<FieldElement> raw(weights.size(), field->zero());
    while (advance(raw, field->order())) {
        if (normalize(field, weights, raw).coords() == raw) ++count;
    }
    return count;
}

} // namespace wps
