#include "ratprime/primality.hpp"

#include <cstdlib>
#include <sstream>

#include "ratprime/errors.hpp"
#include "ratprime/squarefree.hpp"

namespace ratprime {

namespace {

std::size_t largest_prime_factor(std::size_t n) {
    std::size_t largest = 1;
    for (std::size_t d = 2; d * d <= n; ++d) {
        while (n % d == 0) {
            largest = d;
            n /= d;
        }
    }
    return n > 1 ? n : largest;
}

std::size_t checked_degree(const RatFun& f) {
    if (f.is_zero() || f.degree() < 2) throw PreconditionError("primality tests need degree at least 2");
    return f.degree();
}

std::optional<PrimalityVerdict> simple_verdict(const CriticalValueReport& report, std::size_t d) {
    if (report.simple_count >= d) return PrimeBySimpleCriticalValues{report.simple_count, d};
    return std::nullopt;
}

std::optional<PrimalityVerdict> nonzero_simple_verdict(const CriticalValueReport& report, std::size_t d) {
    if (report.nonzero_simple_count >= 2 * d) return PrimeByNonzeroSimpleCriticalValues{report.nonzero_simple_count, d};
    return std::nullopt;
}

// Over F_p a root of f' of multiplicity m need not have valency m + 1.
// Confirms some root of `part` has valency exactly v via Hasse derivatives.
bool has_root_of_exact_valency(const Poly& f, const Poly& part, std::size_t v) {
    Poly common = part;
    for (std::size_t i = 1; i < v && !common.is_constant(); ++i) {
        common = poly_gcd(common, f.hasse_derivative(i));
    }
    if (common.is_constant()) return false;
    const Poly next = f.hasse_derivative(v);
    return !exact_quotient(common, poly_gcd(common, next)).is_constant();
}

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string scope_name(Scope s) { return s == Scope::BaseField ? "K" : "K-bar"; }

} // namespace

bool is_prime_certificate(const PrimalityVerdict& verdict) {
    return !std::holds_alternative<CompositeWitness>(verdict) && !std::holds_alternative<Unknown>(verdict);
}

std::string verdict_kind(const PrimalityVerdict& verdict) {
    return std::visit(Overloaded{
                          [](const PrimeByDegree&) { return std::string("PrimeByDegree"); },
                          [](const PrimeByOrdInfinity&) { return std::string("PrimeByOrdInfinity"); },
                          [](const PrimeByValency&) { return std::string("PrimeByValency"); },
                          [](const PrimeBySimpleCriticalValues&) { return std::string("PrimeBySimpleCriticalValues"); },
                          [](const PrimeByNonzeroSimpleCriticalValues&) {
                              return std::string("PrimeByNonzeroSimpleCriticalValues");
                          },
                          [](const CompositeWitness&) { return std::string("CompositeWitness"); },
                          [](const Unknown&) { return std::string("Unknown"); },
                      },
                      verdict);
}

std::string describe(const PrimalityVerdict& verdict) {
    std::ostringstream os;
    std::visit(Overloaded{
                   [&](const PrimeByDegree& v) { os << "prime over K-bar: degree " << v.degree << " is prime"; },
                   [&](const PrimeByOrdInfinity& v) {
                       os << "prime over K-bar: ord_inf = " << v.ord << " has prime factor " << v.p << " > d = " << v.d;
                   },
                   [&](const PrimeByValency& v) {
                       os << "prime over K-bar: some point has prime valency " << v.p << " > d = " << v.d;
                   },
                   [&](const PrimeBySimpleCriticalValues& v) {
                       os << "prime over " << scope_name(v.scope) << ": " << v.count
                          << " simple critical values >= d = " << v.d;
                   },
                   [&](const PrimeByNonzeroSimpleCriticalValues& v) {
                       os << "prime over " << scope_name(v.scope) << ": " << v.count
                          << " nonzero simple critical values >= 2d = " << 2 * v.d;
                   },
                   [&](const CompositeWitness& v) {
                       os << "composite: (" << v.outer.to_string() << ") o (" << v.inner.to_string() << ")";
                   },
                   [&](const Unknown&) { os << "unknown: no sufficient condition holds"; },
               },
               verdict);
    return os.str();
}

std::optional<PrimalityVerdict> test_degree_prime(const RatFun& f) {
    const std::size_t n = checked_degree(f);
    if (is_prime(n)) return PrimeByDegree{n};
    return std::nullopt;
}

std::optional<PrimalityVerdict> test_ord_infinity(const RatFun& f) {
    if (f.is_constant()) throw PreconditionError("order-at-infinity test needs a nonconstant function");
    const std::size_t n = f.degree();
    const long ord = f.ord_infinity();
    if (n < 2 || ord == 0) return std::nullopt;
    const std::size_t d = greatest_proper_divisor(n);
    const std::size_t p = largest_prime_factor(static_cast<std::size_t>(std::labs(ord)));
    if (p > 1 && p > d) return PrimeByOrdInfinity{p, d, ord};
    return std::nullopt;
}

std::optional<PrimalityVerdict> test_valency(const Poly& f) {
    if (f.is_zero() || f.deg() < 2) throw PreconditionError("valency test needs degree at least 2");
    const Poly deriv = f.derivative();
    if (deriv.is_zero()) throw DegenerateDerivative();
    const std::size_t d = greatest_proper_divisor(f.deg());
    for (const auto& part : squarefree_decompose(deriv).parts) {
        const std::size_t v = part.multiplicity + 1;
        if (!is_prime(v) || v <= d) continue;
        if (f.field().is_prime_field() && !has_root_of_exact_valency(f, part.factor, v)) continue;
        return PrimeByValency{v, d};
    }
    return std::nullopt;
}

std::optional<PrimalityVerdict> test_simple_critical_poly(const Poly& f) {
    if (f.is_zero() || f.deg() < 2) throw PreconditionError("critical-value test needs degree at least 2");
    return simple_verdict(critical_values(disc_in_t(f)), greatest_proper_divisor(f.deg()));
}

std::optional<PrimalityVerdict> test_nonzero_simple_critical_rat(const RatFun& f) {
    const std::size_t n = checked_degree(f);
    return nonzero_simple_verdict(critical_values(rat_resultant_in_t(f)), greatest_proper_divisor(n));
}

std::string to_string(OracleStatus status) {
    switch (status) {
    case OracleStatus::Unused: return "unused";
    case OracleStatus::Witness: return "witness";
    case OracleStatus::Exhausted: return "exhausted";
    case OracleStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "unused";
}

Analysis analyze_detailed(const RatFun& f, const std::optional<OracleBudget>& budget) {
    const std::size_t n = checked_degree(f);
    const std::size_t d = greatest_proper_divisor(n);
    Analysis out;
    std::vector<PrimalityVerdict> certificates;
    auto record = [&](const std::optional<PrimalityVerdict>& v, const std::string& miss) {
        if (v) {
            out.notes.push_back("satisfied: " + describe(*v));
            certificates.push_back(*v);
        } else {
            out.notes.push_back("not satisfied: " + miss);
        }
    };

    record(test_degree_prime(f), "degree " + std::to_string(n) + " is not prime");
    record(test_ord_infinity(f), "ord_inf = " + std::to_string(f.ord_infinity()) +
                                     " is zero or has no prime factor above d = " + std::to_string(d));

    if (f.is_polynomial()) {
        const Poly& poly = f.numerator();
        try {
            record(test_valency(poly), "no point has prime valency above d = " + std::to_string(d));
            out.critical = critical_values(disc_in_t(poly));
            out.critical_source = CriticalSource::DiscInT;
            record(simple_verdict(*out.critical, d), std::to_string(out.critical->simple_count) +
                                                         " simple critical values < d = " + std::to_string(d));
        } catch (const DegenerateDerivative&) {
            out.notes.push_back("degenerate: f' = 0, derivative-based tests skipped");
        }
    }
    try {
        CriticalValueReport rat = critical_values(rat_resultant_in_t(f));
        record(nonzero_simple_verdict(rat, d), std::to_string(rat.nonzero_simple_count) +
                                                   " nonzero simple critical values < 2d = " + std::to_string(2 * d));
        if (!out.critical) {
            out.critical = std::move(rat);
            out.critical_source = CriticalSource::RatResultantInT;
        }
    } catch (const DegenerateDerivative&) {
        if (!f.is_polynomial()) out.notes.push_back("degenerate: f' = 0, derivative-based tests skipped");
    }

    if (!certificates.empty()) {
        out.verdict = certificates.front();
        return out;
    }
    if (budget) {
        const auto search = decompose(f, *budget);
        out.oracle_candidates = search.candidates;
        switch (search.status) {
        case SearchStatus::Found:
            out.oracle = OracleStatus::Witness;
            out.verdict = CompositeWitness{search.witness->outer, search.witness->inner};
            return out;
        case SearchStatus::ExhaustivelyAbsent:
            out.oracle = OracleStatus::Exhausted;
            out.notes.push_back("oracle: exhaustive search found no decomposition over " + f.field().name());
            break;
        case SearchStatus::BudgetExhausted:
            out.oracle = OracleStatus::BudgetExhausted;
            out.notes.push_back("oracle: budget exhausted after " + std::to_string(search.candidates) +
                                " candidates without a decomposition");
            break;
        }
    }
    out.verdict = Unknown{out.notes};
    return out;
}

PrimalityVerdict analyze(const RatFun& f, const std::optional<OracleBudget>& budget) {
    return analyze_detailed(f, budget).verdict;
}

} // namespace ratprime
