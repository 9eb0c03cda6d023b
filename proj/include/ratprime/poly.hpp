#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "ratprime/field.hpp"

namespace ratprime {

/// Degree of a polynomial. The zero polynomial has degree minus infinity,
/// which compares below every natural number and cannot be read as an int.
class Degree {
public:
    static Degree minus_infinity() { return Degree(); }
    explicit Degree(std::size_t value) : value_(static_cast<long long>(value)) {}

    bool is_minus_infinity() const noexcept { return value_ < 0; }
    /// Throws PreconditionError on minus infinity.
    std::size_t value() const;

    friend bool operator==(const Degree&, const Degree&) = default;
    friend std::strong_ordering operator<=>(const Degree&, const Degree&) = default;

private:
    Degree() = default;
    long long value_ = -1;
};

/// Dense univariate polynomial over a Field, coefficients in ascending
/// powers with no trailing zeros.
class Poly {
public:
    Poly() = default;
    explicit Poly(Field field) : field_(field) {}
    Poly(Field field, std::vector<FieldElement> coefficients);

    static Poly constant(const FieldElement& c);
    static Poly x(const Field& field);
    static Poly monomial(const FieldElement& c, std::size_t power);
    /// Integer coefficients, ascending powers.
    static Poly from_ints(const Field& field, std::initializer_list<long> ascending);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    Degree degree() const;
    /// Degree as a number; throws PreconditionError for the zero polynomial.
    std::size_t deg() const;

    /// Zero beyond the stored range.
    FieldElement coeff(std::size_t power) const;
    std::span<const FieldElement> coefficients() const noexcept { return coeffs_; }
    /// Throws PreconditionError for the zero polynomial.
    const FieldElement& leading() const;

    FieldElement operator()(const FieldElement& at) const;

    Poly derivative() const;
    /// The i-th Hasse derivative: the coefficient of y^i in f(x + y).
    Poly hasse_derivative(std::size_t order) const;
    /// f(x + shift).
    Poly taylor_shift(const FieldElement& shift) const;
    Poly monic() const;
    Poly pow(std::size_t exponent) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const FieldElement& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const FieldElement& c) { return a *= c; }
    friend Poly operator*(const FieldElement& c, Poly a) { return a *= c; }

    friend bool operator==(const Poly& a, const Poly& b);

    /// Parseable text such as "x^2-256/27*x+1", using `var` as the variable.
    std::string to_string(char var = 'x') const;

private:
    void trim();
    void check_same_field(const Poly& other) const;

    Field field_;
    std::vector<FieldElement> coeffs_;
};

struct DivMod {
    Poly quotient;
    Poly remainder;
};

/// f = quotient * g + remainder with deg remainder < deg g.
DivMod poly_divmod(const Poly& f, const Poly& g);
/// f / g, throwing InternalError when g does not divide f.
Poly exact_quotient(const Poly& f, const Poly& g);
/// Monic gcd; throws PreconditionError when both inputs are zero.
Poly poly_gcd(const Poly& f, const Poly& g);
/// g(h(x)).
Poly poly_compose(const Poly& g, const Poly& h);

/// Order of vanishing of f(x + a) - f(a) at x = 0. Agrees with the smallest
/// i with f^(i)(a) != 0 in characteristic zero and stays meaningful in
/// characteristic p. Throws PreconditionError for constant f.
std::size_t valency(const Poly& f, const FieldElement& a);

} // namespace ratprime
