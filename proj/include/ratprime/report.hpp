#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "ratprime/decompose.hpp"
#include "ratprime/fq_ring.hpp"
#include "ratprime/primality.hpp"
#include "ratprime/ratfun.hpp"
#include "ratprime/resultant.hpp"

namespace ratprime {

// JSON documents emitted by the command-line tool. Field sets are fixed per
// command (absent values are null) and keys come out sorted; the schema lives
// in schemas/report.schema.json.

nlohmann::json critical_values_json(CriticalSource source, const std::optional<CriticalValueReport>& report);
nlohmann::json verdict_json(const PrimalityVerdict& verdict);

nlohmann::json analyze_report(const std::string& input, const RatFun& f, const Analysis& analysis,
                              std::optional<double> timing_ms);
nlohmann::json decompose_report(const std::string& input, const RatFun& f, const SearchResult<FactorPair>& search,
                                std::optional<double> timing_ms);
nlohmann::json fq_report(const std::string& input, const FqFunction& phi, std::optional<double> timing_ms);
nlohmann::json resultant_report(const std::string& input, const RatFun& f, CriticalSource source,
                                const std::optional<CriticalValueReport>& report, std::optional<double> timing_ms);
nlohmann::json error_report(const std::string& command, const std::string& kind, const std::string& message,
                            std::optional<std::size_t> position);

/// Plain-text rendering of any of the documents above.
std::string render_text(const nlohmann::json& report);

} // namespace ratprime
