#include "wps/io.hpp"

#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wps {
namespace {

std::string trim(const std::string& s) {
    const std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const std::size_t last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

std::uint64_t power(std::uint64_t base, std::uint32_t exp) {
    std::uint64_t out = 1;
    while (exp--) out *= base;
    return out;
}

void append_case_array(std::string& out, const std::vector<FiberReport>& cases) {
    if (cases.empty()) {
        out += "[]";
        return;
    }
    out += "[\n";
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        out += fiber_report_json(cases[idx]).dump();
        out += idx + 1 < cases.size() ? ",\n" : "\n";
    }
    out += "]";
}

} // namespace

std::vector<std::uint32_t> parse_uint_list(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = text.find(',', pos);
        const std::string token =
            trim(comma == std::string::npos ? text.substr(pos) : text.substr(pos, comma - pos));
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
            throw std::invalid_argument("malformed unsigned integer '" + token + "'");
        }
        unsigned long long value = 0;
        try {
            value = std::stoull(token);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("integer out of range '" + token + "'");
        }
        if (value > std::numeric_limits<std::uint32_t>::max()) {
            throw std::invalid_argument("integer out of range '" + token + "'");
        }
        out.push_back(static_cast<std::uint32_t>(value));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

Weights parse_weights(const std::string& text) { return Weights(parse_uint_list(text)); }

std::vector<FieldElement> parse_point(const std::string& text, const Field& field) {
    std::vector<FieldElement> out;
    for (std::uint32_t value : parse_uint_list(text)) {
        if (value >= field.order()) {
            throw std::invalid_argument("coordinate " + std::to_string(value) +
                                        " is not an element encoding of F_" +
                                        std::to_string(field.order()));
        }
        out.push_back(field.element(value));
    }
    return out;
}

std::string format_weights(const Weights& weights) {
    std::ostringstream os;
    for (std::size_t j = 0; j < weights.size(); ++j) {
        if (j) os << ',';
        os << weights[j];
    }
    return os.str();
}

std::string format_point(const std::vector<FieldElement>& coords) {
    std::ostringstream os;
    for (std::size_t j = 0; j < coords.size(); ++j) {
        if (j) os << ',';
        os << coords[j].value;
    }
    return os.str();
}

nlohmann::ordered_json weights_json(const Weights& weights) {
    return nlohmann::ordered_json(weights.values());
}

nlohmann::ordered_json census_json(const SpaceCensus& census) {
    nlohmann::ordered_json j;
    j["q"] = census.field()->order();
    j["p"] = census.field()->characteristic();
    j["k"] = census.field()->degree();
    j["weights"] = weights_json(census.weights());
    j["count"] = census.size();
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (const WpsPoint& P : census.points()) points.push_back(format_point(P.coords()));
    j["points"] = std::move(points);
    nlohmann::ordered_json charts = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < census.weights().size(); ++i) {
        charts.push_back(census.chart(i));
    }
    j["charts"] = std::move(charts);
    return j;
}

std::string census_csv(const SpaceCensus& census) {
    std::string out = "point\n";
    for (const WpsPoint& P : census.points()) {
        out += '"';
        out += format_point(P.coords());
        out += "\"\n";
    }
    return out;
}

nlohmann::ordered_json fiber_report_json(const FiberReport& report) {
    const Field& f = *report.point.field();
    nlohmann::ordered_json j;
    j["q"] = f.order();
    j["p"] = f.characteristic();
    j["k"] = f.degree();
    j["target_weights"] = weights_json(report.target_weights);
    j["i"] = report.i;
    j["point"] = format_point(report.point.coords());
    j["delta_P"] = report.delta_P;
    j["delta_iP"] = report.delta_iP;
    j["brute"] = report.brute_count;
    j["formula"] = report.formula_count;
    j["old_formula"] = report.old_formula_count;
    j["hypothesis"] = report.hypothesis_holds;
    j["match"] = report.brute_count == report.formula_count;
    j["old_match"] = report.brute_count == report.old_formula_count;
    return j;
}

std::string fiber_report_csv_header() {
    return "q,p,k,target_weights,i,point,delta_P,delta_iP,brute,formula,old_formula,"
           "hypothesis,match,old_match";
}

std::string fiber_report_csv_row(const FiberReport& report) {
    const Field& f = *report.point.field();
    std::ostringstream os;
    os << f.order() << ',' << f.characteristic() << ',' << f.degree() << ",\""
       << format_weights(report.target_weights) << "\"," << report.i << ",\""
       << format_point(report.point.coords()) << "\"," << report.delta_P << ','
       << report.delta_iP << ',' << report.brute_count << ',' << report.formula_count << ','
       << report.old_formula_count << ',' << (report.hypothesis_holds ? "true" : "false") << ','
       << (report.brute_count == report.formula_count ? "true" : "false") << ','
       << (report.brute_count == report.old_formula_count ? "true" : "false");
    return os.str();
}

std::string sweep_report_json(const SweepReport& report) {
    nlohmann::ordered_json totals;
    totals["cases"] = report.totals.cases;
    totals["matches"] = report.totals.matches;
    totals["mismatches"] = report.totals.mismatches;
    totals["old_formula_mismatches"] = report.totals.old_formula_mismatches;

    std::string out = "{\n\"cases\": ";
    append_case_array(out, report.cases);
    out += ",\n\"totals\": ";
    out += totals.dump();
    out += ",\n\"mismatches\": ";
    append_case_array(out, report.mismatches);
    out += "\n}\n";
    return out;
}

std::string sweep_report_csv(const SweepReport& report) {
    std::string out = fiber_report_csv_header();
    out += '\n';
    for (const FiberReport& r : report.cases) {
        out += fiber_report_csv_row(r);
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json valuation_check_json(std::uint64_t a, std::uint64_t d, std::uint64_t m,
                                            const ValuationCheck& check) {
    nlohmann::ordered_json j;
    j["a"] = a;
    j["d"] = d;
    j["m"] = m;
    j["coprime"] = std::gcd(std::gcd(a, d), m) == 1;
    j["holds"] = check.holds;
    nlohmann::ordered_json witnesses = nlohmann::ordered_json::array();
    for (const ValuationWitness& w : check.witnesses) {
        nlohmann::ordered_json wj;
        wj["ell"] = w.ell;
        wj["alpha"] = w.alpha;
        wj["kappa"] = w.kappa;
        wj["delta"] = w.delta;
        wj["lhs"] = w.lhs;
        wj["rhs"] = w.rhs;
        witnesses.push_back(std::move(wj));
    }
    j["witnesses"] = std::move(witnesses);
    return j;
}

nlohmann::ordered_json galois_check_json(const Weights& weights, std::uint32_t p,
                                         std::uint32_t k, const GaloisCheck& check) {
    nlohmann::ordered_json j;
    j["p"] = p;
    j["k"] = k;
    j["q"] = power(p, k);
    j["weights"] = weights_json(weights);
    j["base_count"] = check.base_count;
    j["fixed_count"] = check.fixed_count;
    j["equal"] = check.equal;
    return j;
}

} // namespace wps
