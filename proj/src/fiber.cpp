#include "wps/fiber.hpp"

#include <numeric>
#include <stdexcept>

namespace wps {

Weights source_weights(const Weights& target_weights, std::size_t i) {
    if (i >= target_weights.size()) throw std::out_of_range("coordinate index out of range");
    std::vector<std::uint32_t> w = target_weights.values();
    w[i] = 1;
    return Weights(w);
}

std::uint64_t support_weight_gcd(const Weights& weights,
                                 const std::vector<std::size_t>& support) {
    if (support.empty()) throw std::invalid_argument("gcd over empty support");
    std::uint64_t g = 0;
    for (std::size_t j : support) {
        if (j >= weights.size()) throw std::out_of_range("support index out of range");
        g = std::gcd(g, static_cast<std::uint64_t>(weights[j]));
    }
    return g;
}

WpsPoint pi_map(const Weights& target_weights, std::size_t i, const WpsPoint& source_point) {
    if (i >= target_weights.size()) throw std::out_of_range("coordinate index out of range");
    if (!(source_point.weights() == source_weights(target_weights, i))) {
        throw std::invalid_argument("source point does not live in the domain of the power map");
    }
    const Field& f = *source_point.field();
    std::vector<FieldElement> raw = source_point.coords();
    raw[i] = f.pow(raw[i], target_weights[i]);
    return normalize(source_point.field(), target_weights, raw);
}

std::vector<WpsPoint> fiber_bruteforce(const SpaceCensus& source_census,
                                       const Weights& target_weights, std::size_t i,
                                       const WpsPoint& P) {
    if (!(source_census.weights() == source_weights(target_weights, i))) {
        throw std::invalid_argument("census does not cover the domain of the power map");
    }
    if (!same_field(*source_census.field(), *P.field())) {
        throw std::invalid_argument("census and point use different fields");
    }
    std::vector<WpsPoint> fiber;
    for (const WpsPoint& Q : source_census.points()) {
        if (points_equal(pi_map(target_weights, i, Q), P)) fiber.push_back(Q);
    }
    return fiber;
}

std::vector<WpsPoint> fiber_bruteforce(const Weights& target_weights, std::size_t i,
                                       const WpsPoint& P, std::uint64_t budget) {
    SpaceCensus source = enumerate_space(P.field(), source_weights(target_weights, i), budget);
    return fiber_bruteforce(source, target_weights, i, P);
}

std::uint64_t fiber_formula(const Weights& target_weights, std::size_t i, const WpsPoint& P) {
    if (!(P.weights() == target_weights)) {
        throw std::invalid_argument("point does not live in the target space");
    }
    if (!in_unit_chart(P, i)) {
        throw std::invalid_argument("closed-form fiber count requires a point in chart i");
    }
    std::vector<std::size_t> supp = P.support();
    std::vector<std::size_t> supp_minus_i;
    for (std::size_t j : supp) {
        if (j != i) supp_minus_i.push_back(j);
    }
    const std::uint64_t a_i = target_weights[i];
    const std::uint64_t qm1 = P.field()->order() - 1;
    const std::uint64_t delta_P = support_weight_gcd(target_weights, supp);
    const std::uint64_t delta_iP = support_weight_gcd(target_weights, supp_minus_i);
    if (delta_P != std::gcd(a_i, delta_iP)) {
        throw std::logic_error("support gcd identity violated");
    }
    const std::uint64_t g = std::gcd(a_i, qm1 * delta_iP);
    if (g % delta_P != 0) throw std::logic_error("fiber count division is not exact");
    return g / delta_P;
}

std::uint64_t fiber_formula_old(std::uint64_t a_i, std::uint64_t q) {
    if (a_i < 1 || q < 2) throw std::invalid_argument("need a_i >= 1 and q >= 2");
    return std::gcd(a_i, q - 1);
}

bool hypothesis_check(const Weights& target_weights, std::size_t i, std::uint64_t q) {
    if (i >= target_weights.size()) throw std::out_of_range("coordinate index out of range");
    if (q < 2) throw std::invalid_argument("need q >= 2");
    const std::uint64_t a_i = target_weights[i];
    for (std::size_t j = 0; j < target_weights.size(); ++j) {
        if (j == i) continue;
        if (std::gcd(std::gcd(a_i, static_cast<std::uint64_t>(target_weights[j])), q - 1) != 1) {
            return false;
        }
    }
    return true;
}

FiberReport build_fiber_report(const SpaceCensus& source_census, const Weights& target_weights,
                               std::size_t i, const WpsPoint& P) {
    FiberReport report{target_weights, i, P, 0, 0, 0, 0, 0, false};
    const std::uint64_t q = P.field()->order();

    report.formula_count = fiber_formula(target_weights, i, P);
    std::vector<std::size_t> supp = P.support();
    std::vector<std::size_t> supp_minus_i;
    for (std::size_t j : supp) {
        if (j != i) supp_minus_i.push_back(j);
    }
    report.delta_P = support_weight_gcd(target_weights, supp);
    report.delta_iP = support_weight_gcd(target_weights, supp_minus_i);
    report.brute_count = fiber_bruteforce(source_census, target_weights, i, P).size();
    report.old_formula_count = fiber_formula_old(target_weights[i], q);
    report.hypothesis_holds = hypothesis_check(target_weights, i, q);
    return report;
}

FiberReport build_fiber_report(const Weights& target_weights, std::size_t i, const WpsPoint& P,
                               std::uint64_t budget) {
    SpaceCensus source = enumerate_space(P.field(), source_weights(target_weights, i), budget);
    return build_fiber_report(source, target_weights, i, P);
}

} // namespace wps
