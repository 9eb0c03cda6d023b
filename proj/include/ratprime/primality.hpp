#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ratprime/decompose.hpp"
#include "ratprime/number_theory.hpp"
#include "ratprime/poly.hpp"
#include "ratprime/ratfun.hpp"
#include "ratprime/resultant.hpp"

namespace ratprime {

/// Field over which a primality certificate holds.
enum class Scope { BaseField, AlgebraicClosure };

struct PrimeByDegree {
    std::size_t degree;
};

struct PrimeByOrdInfinity {
    std::size_t p;  // prime factor of ord with p > d
    std::size_t d;
    long ord;
};

struct PrimeByValency {
    std::size_t p;  // valency attained at some point of the closure
    std::size_t d;
};

struct PrimeBySimpleCriticalValues {
    std::size_t count;
    std::size_t d;
    Scope scope = Scope::BaseField;
};

struct PrimeByNonzeroSimpleCriticalValues {
    std::size_t count;
    std::size_t d;
    Scope scope = Scope::AlgebraicClosure;
};

/// f = outer o inner with both degrees at least 2.
struct CompositeWitness {
    RatFun outer;
    RatFun inner;
};

struct Unknown {
    std::vector<std::string> notes;
};

using PrimalityVerdict = std::variant<PrimeByDegree, PrimeByOrdInfinity, PrimeByValency, PrimeBySimpleCriticalValues,
                                      PrimeByNonzeroSimpleCriticalValues, CompositeWitness, Unknown>;

bool is_prime_certificate(const PrimalityVerdict& verdict);
/// Variant name, e.g. "PrimeByOrdInfinity".
std::string verdict_kind(const PrimalityVerdict& verdict);
/// One-line human-readable summary.
std::string describe(const PrimalityVerdict& verdict);

std::optional<PrimalityVerdict> test_degree_prime(const RatFun& f);
std::optional<PrimalityVerdict> test_ord_infinity(const RatFun& f);
/// Looks for a point of the closure whose valency is a prime above d, using
/// the multiplicities of f'. Throws DegenerateDerivative when f' = 0.
std::optional<PrimalityVerdict> test_valency(const Poly& f);
std::optional<PrimalityVerdict> test_simple_critical_poly(const Poly& f);
std::optional<PrimalityVerdict> test_nonzero_simple_critical_rat(const RatFun& f);

enum class OracleStatus { Unused, Witness, Exhausted, BudgetExhausted };

std::string to_string(OracleStatus status);

/// Which resultant the critical-value report was built from.
enum class CriticalSource { DiscInT, RatResultantInT, Degenerate };

struct Analysis {
    PrimalityVerdict verdict;
    /// Every hypothesis checked, satisfied or not, in test order.
    std::vector<std::string> notes;
    CriticalSource critical_source = CriticalSource::Degenerate;
    std::optional<CriticalValueReport> critical;
    OracleStatus oracle = OracleStatus::Unused;
    std::size_t oracle_candidates = 0;
};

/// Runs the certificates in the fixed order degree, order at infinity,
/// valency, simple critical values (polynomials), nonzero simple critical
/// values; falls back to the decomposition oracle when `budget` is set.
Analysis analyze_detailed(const RatFun& f, const std::optional<OracleBudget>& budget);

PrimalityVerdict analyze(const RatFun& f, const std::optional<OracleBudget>& budget);

} // namespace ratprime
