#include "ratprime/fq_ring.hpp"

#include <algorithm>
#include <set>

#include "ratprime/errors.hpp"

namespace ratprime {

namespace {

// Lagrange basis on F_p: 1 - (x - c)^(p-1) is 1 at c and 0 elsewhere.
Poly interpolate(const Field& field, const std::vector<std::uint64_t>& table) {
    const std::uint64_t p = field.characteristic();
    Poly acc(field);
    const Poly one = Poly::constant(field.one());
    for (std::uint64_t c = 0; c < p; ++c) {
        if (table[c] == 0) continue;
        const Poly linear(field, {-field.from_int(static_cast<long>(c)), field.one()});
        acc += field.from_int(static_cast<long>(table[c])) * (one - linear.pow(p - 1));
    }
    return acc;
}

} // namespace

FqFunction FqFunction::from_table(std::uint64_t p, std::vector<std::uint64_t> table) {
    const Field field = Field::prime(p);
    if (table.size() != p) throw PreconditionError("value table must have exactly p entries");
    if (std::any_of(table.begin(), table.end(), [p](std::uint64_t v) { return v >= p; })) {
        throw PreconditionError("table values must lie in [0, p)");
    }
    Poly poly = interpolate(field, table);
    return FqFunction(p, std::move(table), std::move(poly));
}

FqFunction FqFunction::identity(std::uint64_t p) {
    std::vector<std::uint64_t> table(p);
    for (std::uint64_t i = 0; i < p; ++i) table[i] = i;
    return from_table(p, std::move(table));
}

FqFunction FqFunction::zero(std::uint64_t p) { return from_table(p, std::vector<std::uint64_t>(p, 0)); }

bool FqFunction::is_zero() const {
    return std::all_of(table_.begin(), table_.end(), [](std::uint64_t v) { return v == 0; });
}

FqFunction reduce_ring(const Poly& f) {
    const Field& field = f.field();
    if (!field.is_prime_field()) throw PreconditionError("function ring needs a prime field");
    const std::uint64_t p = field.characteristic();
    const Poly modulus = Poly::monomial(field.one(), p) - Poly::x(field);
    Poly reduced = poly_divmod(f, modulus).remainder;
    std::vector<std::uint64_t> table(p);
    for (std::uint64_t c = 0; c < p; ++c) table[c] = reduced(field.from_int(static_cast<long>(c))).residue();
    return FqFunction(p, std::move(table), std::move(reduced));
}

FqFunction ring_compose(const FqFunction& alpha, const FqFunction& beta) {
    if (alpha.p() != beta.p()) throw FieldMismatch();
    std::vector<std::uint64_t> table(alpha.p());
    for (std::uint64_t c = 0; c < alpha.p(); ++c) table[c] = alpha(beta(c));
    return FqFunction::from_table(alpha.p(), std::move(table));
}

FqFunction ring_add(const FqFunction& a, const FqFunction& b) {
    if (a.p() != b.p()) throw FieldMismatch();
    std::vector<std::uint64_t> table(a.p());
    for (std::uint64_t c = 0; c < a.p(); ++c) table[c] = (a(c) + b(c)) % a.p();
    return FqFunction::from_table(a.p(), std::move(table));
}

bool is_permutation(const FqFunction& phi) {
    std::vector<bool> seen(phi.p(), false);
    for (std::uint64_t v : phi.table()) {
        if (seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

const char* to_string(RingClass c) {
    switch (c) {
    case RingClass::Zero: return "Zero";
    case RingClass::Unit: return "Unit";
    case RingClass::ZeroDivisor: return "ZeroDivisor";
    }
    return "Zero";
}

RingClass classify(const FqFunction& phi) {
    if (phi.is_zero()) return RingClass::Zero;
    return is_permutation(phi) ? RingClass::Unit : RingClass::ZeroDivisor;
}

ZeroDivisorWitness zero_divisor_witness(const FqFunction& phi) {
    if (classify(phi) != RingClass::ZeroDivisor) {
        throw PreconditionError("zero-divisor witness needs a nonzero non-permutation");
    }
    const Field field = Field::prime(phi.p());
    const std::set<std::uint64_t> image(phi.table().begin(), phi.table().end());
    Poly vanishing = Poly::constant(field.one());
    for (std::uint64_t c : image) vanishing *= Poly(field, {-field.from_int(static_cast<long>(c)), field.one()});
    FqFunction psi = reduce_ring(vanishing);
    FqFunction left = ring_add(psi, FqFunction::identity(phi.p()));
    return {std::move(psi), std::move(left)};
}

std::size_t count_permutations(std::uint64_t p, std::uint64_t max_p) {
    if (!is_prime(p)) throw PreconditionError("p must be prime");
    if (p > max_p) throw PreconditionError("p exceeds the enumeration budget");
    std::size_t total = 1;
    for (std::uint64_t i = 0; i < p; ++i) total *= p;
    std::size_t units = 0;
    std::vector<std::uint64_t> table(p, 0);
    for (std::size_t index = 0; index < total; ++index) {
        std::size_t rest = index;
        for (auto& v : table) {
            v = rest % p;
            rest /= p;
        }
        if (is_permutation(FqFunction::from_table(p, table))) ++units;
    }
    return units;
}

} // namespace ratprime
