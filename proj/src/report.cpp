#include "ratprime/report.hpp"

#include <sstream>

namespace ratprime {

using nlohmann::json;

namespace {

json coefficient_list(const Poly& p) {
    json out = json::array();
    for (const auto& c : p.coefficients()) out.push_back(c.to_string());
    return out;
}

json timing(std::optional<double> ms) { return ms ? json(*ms) : json(nullptr); }

std::string oracle_status_name(SearchStatus status) {
    switch (status) {
    case SearchStatus::Found: return to_string(OracleStatus::Witness);
    case SearchStatus::ExhaustivelyAbsent: return to_string(OracleStatus::Exhausted);
    case SearchStatus::BudgetExhausted: return to_string(OracleStatus::BudgetExhausted);
    }
    return to_string(OracleStatus::Unused);
}

std::string source_name(CriticalSource source) {
    switch (source) {
    case CriticalSource::DiscInT: return "disc_in_t";
    case CriticalSource::RatResultantInT: return "rat_resultant_in_t";
    case CriticalSource::Degenerate: return "degenerate";
    }
    return "degenerate";
}

std::string value_or_dash(const json& v) {
    if (v.is_null()) return "-";
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

} // namespace

json critical_values_json(CriticalSource source, const std::optional<CriticalValueReport>& report) {
    json out = {
        {"source", source_name(source)}, {"coefficients", nullptr},        {"polynomial", nullptr},
        {"constant", nullptr},           {"factors", json::array()},       {"simple_count", nullptr},
        {"nonzero_simple_count", nullptr}, {"ell", nullptr},
    };
    if (!report) return out;
    out["coefficients"] = coefficient_list(report->disc_t);
    out["polynomial"] = report->disc_t.to_string('t');
    out["constant"] = report->squarefree.constant.to_string();
    for (const auto& part : report->squarefree.parts) {
        json root = nullptr;
        if (part.factor.deg() == 1) root = (-part.factor.coeff(0)).to_string();
        out["factors"].push_back({{"factor", part.factor.to_string('t')},
                                  {"coefficients", coefficient_list(part.factor)},
                                  {"multiplicity", part.multiplicity},
                                  {"root", root}});
    }
    out["simple_count"] = report->simple_count;
    out["nonzero_simple_count"] = report->nonzero_simple_count;
    out["ell"] = report->zero_multiplicity;
    return out;
}

json verdict_json(const PrimalityVerdict& verdict) {
    json out = {
        {"kind", verdict_kind(verdict)}, {"summary", describe(verdict)}, {"degree", nullptr}, {"p", nullptr},
        {"d", nullptr},                  {"ord", nullptr},               {"count", nullptr},  {"scope", nullptr},
        {"outer", nullptr},              {"inner", nullptr},
    };
    if (const auto* v = std::get_if<PrimeByDegree>(&verdict)) {
        out["degree"] = v->degree;
        out["scope"] = "K-bar";
    } else if (const auto* v = std::get_if<PrimeByOrdInfinity>(&verdict)) {
        out["p"] = v->p;
        out["d"] = v->d;
        out["ord"] = v->ord;
        out["scope"] = "K-bar";
    } else if (const auto* v = std::get_if<PrimeByValency>(&verdict)) {
        out["p"] = v->p;
        out["d"] = v->d;
        out["scope"] = "K-bar";
    } else if (const auto* v = std::get_if<PrimeBySimpleCriticalValues>(&verdict)) {
        out["count"] = v->count;
        out["d"] = v->d;
        out["scope"] = v->scope == Scope::BaseField ? "K" : "K-bar";
    } else if (const auto* v = std::get_if<PrimeByNonzeroSimpleCriticalValues>(&verdict)) {
        out["count"] = v->count;
        out["d"] = v->d;
        out["scope"] = v->scope == Scope::BaseField ? "K" : "K-bar";
    } else if (const auto* v = std::get_if<CompositeWitness>(&verdict)) {
        out["outer"] = v->outer.to_string();
        out["inner"] = v->inner.to_string();
    }
    return out;
}

json analyze_report(const std::string& input, const RatFun& f, const Analysis& analysis, std::optional<double> timing_ms) {
    return {
        {"command", "analyze"},
        {"input", input},
        {"canonical", f.to_string()},
        {"field", f.field().name()},
        {"degree", f.degree()},
        {"ord_infinity", f.ord_infinity()},
        {"critical_values", critical_values_json(analysis.critical_source, analysis.critical)},
        {"verdict", verdict_json(analysis.verdict)},
        {"notes", analysis.notes},
        {"oracle", {{"status", to_string(analysis.oracle)}, {"candidates", analysis.oracle_candidates}}},
        {"timing_ms", timing(timing_ms)},
    };
}

json decompose_report(const std::string& input, const RatFun& f, const SearchResult<FactorPair>& search,
                      std::optional<double> timing_ms) {
    json out = {
        {"command", "decompose"},
        {"input", input},
        {"canonical", f.to_string()},
        {"field", f.field().name()},
        {"degree", f.degree()},
        {"oracle", {{"status", oracle_status_name(search.status)}, {"candidates", search.candidates}}},
        {"outer", nullptr},
        {"inner", nullptr},
        {"timing_ms", timing(timing_ms)},
    };
    if (search.witness) {
        out["outer"] = search.witness->outer.to_string();
        out["inner"] = search.witness->inner.to_string();
    }
    return out;
}

json fq_report(const std::string& input, const FqFunction& phi, std::optional<double> timing_ms) {
    const RingClass cls = classify(phi);
    json out = {
        {"command", "fq"},
        {"input", input},
        {"p", phi.p()},
        {"table", phi.table()},
        {"reduced_poly", phi.reduced_poly().to_string()},
        {"class", to_string(cls)},
        {"witness", nullptr},
        {"timing_ms", timing(timing_ms)},
    };
    if (cls == RingClass::ZeroDivisor) {
        const ZeroDivisorWitness w = zero_divisor_witness(phi);
        out["witness"] = {
            {"psi", w.psi.reduced_poly().to_string()},
            {"psi_table", w.psi.table()},
            {"left_factor", w.left_factor.reduced_poly().to_string()},
        };
    }
    return out;
}

json resultant_report(const std::string& input, const RatFun& f, CriticalSource source,
                      const std::optional<CriticalValueReport>& report, std::optional<double> timing_ms) {
    return {
        {"command", "resultant"},
        {"input", input},
        {"canonical", f.to_string()},
        {"field", f.field().name()},
        {"critical_values", critical_values_json(source, report)},
        {"timing_ms", timing(timing_ms)},
    };
}

json error_report(const std::string& command, const std::string& kind, const std::string& message,
                  std::optional<std::size_t> position) {
    return {
        {"command", command},
        {"error", {{"kind", kind}, {"message", message}, {"position", position ? json(*position) : json(nullptr)}}},
    };
}

std::string render_text(const json& report) {
    std::ostringstream os;
    if (report.contains("error")) {
        const json& e = report["error"];
        os << "error (" << e["kind"].get<std::string>() << "): " << e["message"].get<std::string>() << "\n";
        return os.str();
    }
    const std::string command = report["command"];
    auto line = [&](const std::string& label, const json& value) {
        os << label << std::string(label.size() < 14 ? 14 - label.size() : 1, ' ') << value_or_dash(value) << "\n";
    };
    auto critical = [&](const json& cv) {
        line("critical src", cv["source"]);
        if (cv["coefficients"].is_null()) return;
        line("polynomial", cv["polynomial"]);
        for (const auto& part : cv["factors"]) {
            std::string entry = "(" + part["factor"].get<std::string>() + ")^" + std::to_string(part["multiplicity"].get<int>());
            if (!part["root"].is_null()) entry += "  root " + part["root"].get<std::string>();
            line("  factor", entry);
        }
        line("simple", cv["simple_count"]);
        line("nonzero simple", cv["nonzero_simple_count"]);
        line("ell", cv["ell"]);
    };

    if (command == "fq") {
        line("input", report["input"]);
        line("p", report["p"]);
        line("table", report["table"]);
        line("reduced", report["reduced_poly"]);
        line("class", report["class"]);
        if (!report["witness"].is_null()) {
            line("psi", report["witness"]["psi"]);
            line("psi o phi", json("0"));
            line("left factor", report["witness"]["left_factor"]);
        }
    } else {
        line("input", report["input"]);
        line("canonical", report["canonical"]);
        line("field", report["field"]);
        if (report.contains("degree")) line("degree", report["degree"]);
        if (report.contains("ord_infinity")) line("ord_infinity", report["ord_infinity"]);
        if (report.contains("critical_values")) critical(report["critical_values"]);
        if (report.contains("verdict")) {
            line("verdict", report["verdict"]["kind"]);
            line("summary", report["verdict"]["summary"]);
            for (const auto& note : report["notes"]) line("  note", note);
        }
        if (report.contains("oracle")) {
            line("oracle", report["oracle"]["status"]);
            line("candidates", report["oracle"]["candidates"]);
        }
        if (report.contains("outer")) {
            line("outer", report["outer"]);
            line("inner", report["inner"]);
        }
    }
    if (!report["timing_ms"].is_null()) line("timing ms", report["timing_ms"]);
    return os.str();
}

} // namespace ratprime
