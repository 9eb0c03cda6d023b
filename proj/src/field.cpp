#include "ratprime/field.hpp"

#include <ostream>

#include "ratprime/errors.hpp"

namespace ratprime {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a * b) % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exponent > 0) {
        if (exponent & 1U) result = mulmod(result, base, p);
        base = mulmod(base, base, p);
        exponent >>= 1U;
    }
    return result;
}

std::uint64_t reduce_mod(const mpz_class& value, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
    return r.get_ui();
}

} // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 32U)) throw PreconditionError("prime modulus must be below 2^32");
    if (!is_prime(p)) throw PreconditionError("field modulus " + std::to_string(p) + " is not prime");
    return Field(p);
}

FieldElement Field::zero() const { return from_int(0); }

FieldElement Field::one() const { return from_int(1); }

FieldElement Field::from_int(long value) const { return from_integer(mpz_class(value)); }

FieldElement Field::from_integer(const mpz_class& value) const {
    FieldElement e;
    e.field_ = *this;
    if (is_rationals()) {
        e.rational_ = value;
    } else {
        e.residue_ = reduce_mod(value, p_);
    }
    return e;
}

FieldElement Field::from_rational(const mpq_class& value) const {
    if (is_rationals()) {
        FieldElement e;
        e.field_ = *this;
        e.rational_ = value;
        e.rational_.canonicalize();
        return e;
    }
    FieldElement den = from_integer(value.get_den());
    if (den.is_zero()) throw DivisionByZero("denominator divisible by the field characteristic");
    return from_integer(value.get_num()) / den;
}

std::string Field::name() const { return is_rationals() ? "Q" : "F" + std::to_string(p_); }

bool FieldElement::is_zero() const {
    return field_.is_rationals() ? sgn(rational_) == 0 : residue_ == 0;
}

bool FieldElement::is_one() const {
    return field_.is_rationals() ? rational_ == 1 : residue_ == 1;
}

const mpq_class& FieldElement::rational() const {
    if (!field_.is_rationals()) throw PreconditionError("element is not rational");
    return rational_;
}

std::uint64_t FieldElement::residue() const {
    if (!field_.is_prime_field()) throw PreconditionError("element is not a residue");
    return residue_;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero();
    FieldElement r = *this;
    if (field_.is_rationals()) {
        r.rational_ = 1 / rational_;
    } else {
        const std::uint64_t p = field_.characteristic();
        r.residue_ = powmod(residue_, p - 2, p);
    }
    return r;
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    FieldElement result = field_.one();
    FieldElement base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

FieldElement FieldElement::operator-() const {
    FieldElement r = *this;
    if (field_.is_rationals()) {
        r.rational_ = -rational_;
    } else if (residue_ != 0) {
        r.residue_ = field_.characteristic() - residue_;
    }
    return r;
}

void FieldElement::check_same_field(const FieldElement& other) const {
    if (field_ != other.field_) throw FieldMismatch();
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ += rhs.rational_;
    } else {
        residue_ = (residue_ + rhs.residue_) % field_.characteristic();
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ -= rhs.rational_;
    } else {
        const std::uint64_t p = field_.characteristic();
        residue_ = (residue_ + p - rhs.residue_) % p;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
    check_same_field(rhs);
    if (field_.is_rationals()) {
        rational_ *= rhs.rational_;
    } else {
        residue_ = mulmod(residue_, rhs.residue_, field_.characteristic());
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) {
    check_same_field(rhs);
    return *this *= rhs.inverse();
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (a.field_ != b.field_) return false;
    return a.field_.is_rationals() ? a.rational_ == b.rational_ : a.residue_ == b.residue_;
}

std::string FieldElement::to_string() const {
    return field_.is_rationals() ? rational_.get_str() : std::to_string(residue_);
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) { return os << e.to_string(); }

} // namespace ratprime
