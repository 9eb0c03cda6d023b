#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ratprime/poly.hpp"

namespace ratprime {

/// A function F_p -> F_p, an element of F_p[x]/(x^p - x). Stored both as its
/// value table at 0, 1, ..., p-1 and as the unique polynomial of degree < p.
class FqFunction {
public:
    /// Throws PreconditionError for a non-prime p, a table of the wrong
    /// length or out-of-range values.
    static FqFunction from_table(std::uint64_t p, std::vector<std::uint64_t> table);
    static FqFunction identity(std::uint64_t p);
    static FqFunction zero(std::uint64_t p);

    std::uint64_t p() const noexcept { return p_; }
    const std::vector<std::uint64_t>& table() const noexcept { return table_; }
    const Poly& reduced_poly() const noexcept { return poly_; }
    bool is_zero() const;
    std::uint64_t operator()(std::uint64_t at) const { return table_.at(at); }

    friend bool operator==(const FqFunction& a, const FqFunction& b) { return a.p_ == b.p_ && a.table_ == b.table_; }

private:
    friend FqFunction reduce_ring(const Poly& f);
    FqFunction(std::uint64_t p, std::vector<std::uint64_t> table, Poly poly)
        : p_(p), table_(std::move(table)), poly_(std::move(poly)) {}

    std::uint64_t p_ = 0;
    std::vector<std::uint64_t> table_;
    Poly poly_;
};

/// The function x -> f(x) on F_p, with f reduced mod x^p - x.
FqFunction reduce_ring(const Poly& f);

/// alpha o beta.
FqFunction ring_compose(const FqFunction& alpha, const FqFunction& beta);
FqFunction ring_add(const FqFunction& a, const FqFunction& b);

bool is_permutation(const FqFunction& phi);

enum class RingClass { Zero, Unit, ZeroDivisor };

const char* to_string(RingClass c);

/// Zero, a permutation (unit), or otherwise a zero divisor.
RingClass classify(const FqFunction& phi);

struct ZeroDivisorWitness {
    /// Nonzero with psi o phi = 0.
    FqFunction psi;
    /// psi + identity, a non-identity left factor with left o phi = phi.
    FqFunction left_factor;
};

/// psi = product over c in image(phi) of (x - c). Throws PreconditionError
/// when phi is zero or a permutation.
ZeroDivisorWitness zero_divisor_witness(const FqFunction& phi);

/// Counts permutations by enumerating all p^p functions. Throws
/// PreconditionError when p exceeds max_p.
std::size_t count_permutations(std::uint64_t p, std::uint64_t max_p = 5);

} // namespace ratprime
