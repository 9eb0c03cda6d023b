#include <chrono>
#include <cstring>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ratprime/errors.hpp"
#include "ratprime/parser.hpp"
#include "ratprime/report.hpp"

using namespace ratprime;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kPrecondition = 3;
constexpr int kInternal = 4;

struct Options {
    std::string expr;
    std::string field = "Q";
    std::optional<std::size_t> budget;
    std::optional<std::uint64_t> p;
    bool json = false;
    bool timing = false;
};

void add_common(CLI::App* sub, Options& opt) {
    sub->add_option("EXPR", opt.expr, "rational function in x, e.g. \"(x+1)^4/x^3\"")->required();
    sub->add_flag("--json", opt.json, "emit a JSON report");
    sub->add_flag("--timing", opt.timing, "include wall-clock time in the report");
}

int emit(const json& report, bool as_json, std::ostream& os = std::cout) {
    if (as_json) {
        os << report.dump(2) << "\n";
    } else {
        os << render_text(report);
    }
    return kOk;
}

json run(const std::string& command, const Options& opt) {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&]() -> std::optional<double> {
        if (!opt.timing) return std::nullopt;
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    };

    if (command == "fq") {
        Field field = opt.p ? Field::prime(*opt.p) : parse_field(opt.field);
        if (!field.is_prime_field()) throw PreconditionError("fq needs --p P or --field F<p>");
        const RatFun f = parse_expression(opt.expr, field);
        if (!f.is_polynomial()) throw PreconditionError("fq expects a polynomial");
        const Poly poly = f.numerator() * f.denominator().leading().inverse();
        const FqFunction phi = reduce_ring(poly);
        return fq_report(opt.expr, phi, elapsed());
    }

    const Field field = parse_field(opt.field);
    const RatFun f = parse_expression(opt.expr, field);
    if (f.is_constant()) throw PreconditionError("expression must be nonconstant");

    if (command == "analyze") {
        std::optional<OracleBudget> budget;
        if (opt.budget) {
            budget = OracleBudget{};
            budget->candidate_cap = *opt.budget;
        }
        const Analysis analysis = analyze_detailed(f, budget);
        return analyze_report(opt.expr, f, analysis, elapsed());
    }
    if (command == "decompose") {
        OracleBudget budget;
        if (opt.budget) budget.candidate_cap = *opt.budget;
        const auto search = decompose(f, budget);
        return decompose_report(opt.expr, f, search, elapsed());
    }
    // resultant
    CriticalSource source = CriticalSource::Degenerate;
    std::optional<CriticalValueReport> report;
    try {
        if (f.is_polynomial() && f.degree() >= 2) {
            report = critical_values(disc_in_t(f.numerator() * f.denominator().leading().inverse()));
            source = CriticalSource::DiscInT;
        } else {
            report = critical_values(rat_resultant_in_t(f));
            source = CriticalSource::RatResultantInT;
        }
    } catch (const DegenerateDerivative&) {
        source = CriticalSource::Degenerate;
    }
    return resultant_report(opt.expr, f, source, report, elapsed());
}

} // namespace

int main(int argc, char** argv) {
    bool wants_json = false;
    for (int i = 1; i < argc; ++i) wants_json = wants_json || std::strcmp(argv[i], "--json") == 0;

    CLI::App app{"Primality and decomposition of rational functions"};
    app.require_subcommand(1);
    Options opt;

    auto* analyze_cmd = app.add_subcommand("analyze", "run every primality certificate");
    add_common(analyze_cmd, opt);
    analyze_cmd->add_option("--field", opt.field, "Q or F<p>")->capture_default_str();
    analyze_cmd->add_option("--oracle-budget", opt.budget, "enable the decomposition oracle with this many candidates")
        ->check(CLI::PositiveNumber);

    auto* decompose_cmd = app.add_subcommand("decompose", "search for a decomposition");
    add_common(decompose_cmd, opt);
    decompose_cmd->add_option("--field", opt.field, "Q or F<p>")->capture_default_str();
    decompose_cmd->add_option("--oracle-budget", opt.budget, "candidate cap (default 100000)")
        ->check(CLI::PositiveNumber);

    auto* fq_cmd = app.add_subcommand("fq", "classify a function on F_p");
    add_common(fq_cmd, opt);
    fq_cmd->add_option("--p", opt.p, "prime modulus");
    fq_cmd->add_option("--field", opt.field, "F<p>, alternative to --p");

    auto* resultant_cmd = app.add_subcommand("resultant", "print disc-in-t or the resultant in t");
    add_common(resultant_cmd, opt);
    resultant_cmd->add_option("--field", opt.field, "Q or F<p>")->capture_default_str();

    std::string command = "usage";
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (wants_json) {
            emit(error_report(command, "usage", e.what(), std::nullopt), true);
        } else {
            app.exit(e);
        }
        return kUsage;
    }
    command = app.get_subcommands().front()->get_name();

    auto fail = [&](const std::string& kind, const std::string& message, std::optional<std::size_t> position, int code) {
        const json report = error_report(command, kind, message, position);
        if (wants_json) {
            emit(report, true);
        } else {
            emit(report, false, std::cerr);
        }
        return code;
    };

    try {
        return emit(run(command, opt), opt.json);
    } catch (const ParseError& e) {
        return fail("parse", e.what(), e.position(), kParse);
    } catch (const PreconditionError& e) {
        return fail("precondition", e.what(), std::nullopt, kPrecondition);
    } catch (const Error& e) {
        return fail("internal", e.what(), std::nullopt, kInternal);
    }
}
