#include "wps/wps.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "wps/numtheory.hpp"

namespace wps {

Weights::Weights(std::vector<std::uint32_t> a) : a_(std::move(a)) {
    if (a_.size() < 2) throw std::invalid_argument("Weights: need at least two coordinates");
    for (auto w : a_) {
        if (w == 0) throw std::invalid_argument("Weights: entries must be positive");
        if (w > kMaxWeight) throw std::invalid_argument("Weights: entry exceeds supported range");
    }
}

std::vector<std::size_t> support_of(const std::vector<FieldElement>& coords) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < coords.size(); ++j)
        if (coords[j].value != 0) s.push_back(j);
    return s;
}

WpsPoint::WpsPoint(std::shared_ptr<const Field> f, Weights w, std::vector<FieldElement> c)
    : field_(std::move(f)), weights_(std::move(w)), coords_(std::move(c)) {}

namespace {

void check_raw(const Field& field, const Weights& weights,
               const std::vector<FieldElement>& raw) {
    if (raw.size() != weights.size())
        throw std::invalid_argument("wps: coordinate tuple length does not match weights");
    bool nonzero = false;
    for (auto c : raw) {
        field.element(c.value); // range check
        if (c.value) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("wps: the zero tuple is not a point");
}

// Scaling exponents of the rational orbit sweep. For support S let
// d = gcd(a_j : j in S) and d' its prime-to-p part; the rational tuples
// equivalent to x are exactly { (g^{u * (a_j/d') mod (q-1)} x_j)_j } for
// u in [0, q-1). Returns r_j = (a_j/d') mod (q-1) per support index.
std::vector<std::uint64_t> orbit_steps(const Field& field, const Weights& weights,
                                       const std::vector<std::size_t>& supp) {
    std::uint64_t d = 0;
    for (auto j : supp) d = std::gcd(d, std::uint64_t(weights[j]));
    d = prime_to_part(d, field.characteristic());
    const std::uint64_t qm1 = field.order() - 1;
    std::vector<std::uint64_t> steps(supp.size());
    for (std::size_t s = 0; s < supp.size(); ++s)
        steps[s] = (weights[supp[s]] / d) % qm1;
    return steps;
}

} // namespace

WpsPoint normalize(std::shared_ptr<const Field> field, const Weights& weights,
                   std::vector<FieldElement> raw) {
    if (!field) throw std::invalid_argument("wps: null field");
    check_raw(*field, weights, raw);

    const auto supp = support_of(raw);
    const auto steps = orbit_steps(*field, weights, supp);
    const std::uint64_t qm1 = field->order() - 1;

    std::vector<FieldElement> best = raw;
    std::vector<FieldElement> cand = raw;
    for (std::uint64_t u = 1; u < qm1; ++u) {
        for (std::size_t s = 0; s < supp.size(); ++s)
            cand[supp[s]] = field->mul(field->exp(u * steps[s] % qm1), raw[supp[s]]);
        if (cand < best) best = cand;
    }
    return WpsPoint(std::move(field), weights, std::move(best));
}

bool points_equal(const WpsPoint& x, const WpsPoint& y) {
    if (!same_field(*x.field(), *y.field()) || !(x.weights() == y.weights()))
        throw std::invalid_argument("points_equal: points live in different spaces");
    return x.coords() == y.coords();
}

std::vector<FieldElement> scale(const Field& field, const Weights& weights,
                                const std::vector<FieldElement>& raw, FieldElement lambda) {
    check_raw(field, weights, raw);
    if (lambda.value == 0) throw std::invalid_argument("scale: lambda must be nonzero");
    std::vector<FieldElement> out(raw.size());
    for (std::size_t j = 0; j < raw.size(); ++j)
        out[j] = field.mul(field.pow(lambda, weights[j]), raw[j]);
    return out;
}

std::vector<std::vector<FieldElement>> rational_orbit(const Field& field, const Weights& weights,
                                                      const std::vector<FieldElement>& raw) {
    check_raw(field, weights, raw);
    const auto supp = support_of(raw);
    const auto steps = orbit_steps(field, weights, supp);
    const std::uint64_t qm1 = field.order() - 1;

    std::vector<std::vector<FieldElement>> orbit;
    std::vector<FieldElement> cand = raw;
    for (std::uint64_t u = 0; u < qm1; ++u) {
        for (std::size_t s = 0; s < supp.size(); ++s)
            cand[supp[s]] = field.mul(field.exp(u * steps[s] % qm1), raw[supp[s]]);
        orbit.push_back(cand);
    }
    return orbit; // the exponent map is injective in u, so no duplicates occur
}

bool in_unit_chart(const WpsPoint& x, std::size_t i) {
    const auto& w = x.weights();
    if (i >= w.size()) throw std::out_of_range("in_unit_chart: index out of range");
    const auto& coords = x.coords();
    if (coords[i].value == 0) return false;
    const auto supp = x.support();
    if (supp.size() < 2) return false; // the coordinate point itself
    const auto& field = *x.field();
    const auto steps = orbit_steps(field, w, supp);
    const std::uint64_t qm1 = field.order() - 1;
    std::size_t si = 0;
    while (supp[si] != i) ++si;
    for (std::uint64_t u = 0; u < qm1; ++u)
        if (field.mul(field.exp(u * steps[si] % qm1), coords[i]) == field.one()) return true;
    return false;
}

} // namespace wps
