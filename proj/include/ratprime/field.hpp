#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ratprime {

class FieldElement;

/// Either the rationals or a prime field F_p.
///
/// Prime moduli are limited to 32 bits so residue products fit in 64 bits.
class Field {
public:
    Field() = default;

    static Field rationals() { return Field(); }
    /// Throws PreconditionError unless p is a prime below 2^32.
    static Field prime(std::uint64_t p);

    bool is_rationals() const noexcept { return p_ == 0; }
    bool is_prime_field() const noexcept { return p_ != 0; }
    /// 0 for the rationals.
    std::uint64_t characteristic() const noexcept { return p_; }

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement from_int(long value) const;
    FieldElement from_integer(const mpz_class& value) const;
    /// For prime fields the denominator must be invertible mod p.
    FieldElement from_rational(const mpq_class& value) const;

    /// "Q" or "F<p>".
    std::string name() const;

    friend bool operator==(const Field&, const Field&) = default;

private:
    explicit Field(std::uint64_t p) : p_(p) {}

    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class FieldElement {
public:
    FieldElement() = default;

    const Field& field() const noexcept { return field_; }

    bool is_zero() const;
    bool is_one() const;

    /// Only meaningful over Q.
    const mpq_class& rational() const;
    /// Only meaningful over F_p.
    std::uint64_t residue() const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& rhs);
    FieldElement& operator-=(const FieldElement& rhs);
    FieldElement& operator*=(const FieldElement& rhs);
    FieldElement& operator/=(const FieldElement& rhs);

    friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
    friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
    friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
    friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

    friend bool operator==(const FieldElement& a, const FieldElement& b);

    /// Decimal form: "3", "-256/27", or a residue.
    std::string to_string() const;

private:
    friend class Field;

    void check_same_field(const FieldElement& other) const;

    Field field_;
    mpq_class rational_;
    std::uint64_t residue_ = 0;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

} // namespace ratprime
