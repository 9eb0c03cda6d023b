#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratprime/poly.hpp"
#include "ratprime/ratfun.hpp"

namespace ratprime {

/// Limits for the brute-force decomposition search.
struct OracleBudget {
    /// Largest prime p for which F_p enumeration is attempted.
    std::size_t max_field_size = 13;
    /// Largest right-factor degree searched.
    std::size_t max_right_degree = 8;
    /// Total number of candidate right factors examined.
    std::size_t candidate_cap = 100000;

    /// Throws PreconditionError unless every limit is positive.
    void validate() const;
};

enum class SearchStatus {
    Found,
    /// The whole candidate space was enumerated: no decomposition exists
    /// over the base field.
    ExhaustivelyAbsent,
    /// Some candidates were skipped; absence proves nothing.
    BudgetExhausted,
};

template <class Witness>
struct SearchResult {
    SearchStatus status = SearchStatus::ExhaustivelyAbsent;
    std::optional<Witness> witness;
    std::size_t candidates = 0;
};

struct PolyPair {
    Poly outer;
    Poly inner;
};

/// Digits c_0..c_m with f = sum c_i h^i and deg c_i < deg h.
std::vector<Poly> h_adic_expansion(const Poly& f, const Poly& h);

/// g with f = g o h when every h-adic digit of f is constant.
std::optional<Poly> poly_right_factor_test(const Poly& f, const Poly& h);

/// Over F_p: exhaustive search over monic right factors with zero constant
/// term. Over Q: the top coefficients of f fix the only possible monic,
/// zero-constant right factor of each degree.
SearchResult<PolyPair> poly_decompose(const Poly& f, const OracleBudget& budget);

/// Solves the linear system for g of degree deg f / deg h with g o h = f.
std::optional<RatFun> solve_left_factor(const RatFun& f, const RatFun& h);

/// Over F_p: enumerates every right factor of degree k up to units, in the
/// form h1/h2 with h1 monic of degree k, h2 monic of lower degree and
/// [x^deg h2] h1 = 0, and solves for the left factor.
SearchResult<FactorPair> rat_decompose(const RatFun& f, std::size_t k, const OracleBudget& budget);

/// Over Q: tries right factors h1/h2 assembled from coprime pieces of the
/// fibres of f over 0, infinity and a few small integers. Never exhaustive.
SearchResult<FactorPair> rat_decompose_rationals(const RatFun& f, std::size_t k, const OracleBudget& budget);

/// Runs the applicable search over every admissible right-factor degree and
/// returns the witness in canonical form (see canonical_factor_pair).
SearchResult<FactorPair> decompose(const RatFun& f, const OracleBudget& budget);

} // namespace ratprime
