#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "wps/census.hpp"
#include "wps/fiber.hpp"
#include "wps/verify.hpp"

namespace wps {

/// Wire formats: field elements print as their integer encodings, points as
/// "x0,x1,...,xn", weight vectors as "a0,a1,...,an".

std::vector<std::uint32_t> parse_uint_list(const std::string& text);
Weights parse_weights(const std::string& text);
std::vector<FieldElement> parse_point(const std::string& text, const Field& field);

std::string format_weights(const Weights& weights);
std::string format_point(const std::vector<FieldElement>& coords);

nlohmann::ordered_json weights_json(const Weights& weights);
nlohmann::ordered_json census_json(const SpaceCensus& census);
std::string census_csv(const SpaceCensus& census);

nlohmann::ordered_json fiber_report_json(const FiberReport& report);
std::string fiber_report_csv_header();
std::string fiber_report_csv_row(const FiberReport& report);

/// Streaming writers: one compact case object per line, so large sweeps do
/// not build a DOM. Output depends only on report content.
std::string sweep_report_json(const SweepReport& report);
std::string sweep_report_csv(const SweepReport& report);

nlohmann::ordered_json valuation_check_json(std::uint64_t a, std::uint64_t d, std::uint64_t m,
                                            const ValuationCheck& check);
nlohmann::ordered_json galois_check_json(const Weights& weights, std::uint32_t p,
                                         std::uint32_t k, const GaloisCheck& check);

} // namespace wps
